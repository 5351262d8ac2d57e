"""Arithmetic in R = F[x,y]/(x^(q+1) - y^q - y) and in R[z].

``RingElem`` stores ``q`` x-polynomials ``a_0 .. a_{q-1}`` for the element
``sum_j a_j(x) y^j``; products are reduced eagerly with
``y^q -> x^(q+1) - y``. ``ZPoly`` is a polynomial in ``z`` over ``R``; seen
over ``F[x]`` it is the grid of x-polynomials attached to ``y^j z^i``.

The monomial order ``>_u`` weighs ``x, y, z`` by ``q, q+1, u`` and breaks
ties by the larger z-exponent.
"""

from __future__ import annotations

from typing import NamedTuple

from . import xpoly as xp
from .errors import DomainError, ParameterError
from .xpoly import NEG_INF


class Monomial(NamedTuple):
    r: int  # x-exponent
    j: int  # y-exponent, 0 <= j < q
    i: int  # z-exponent

    def deg_u(self, q: int, u: int) -> int:
        return q * self.r + (q + 1) * self.j + u * self.i

    def key(self, q: int, u: int) -> tuple[int, int, int, int]:
        """Sort key realizing ``>_u`` (larger key = larger monomial)."""
        return (self.deg_u(q, u), self.i, self.j, self.r)


class HermitianRing:
    """The coordinate ring of the Hermitian curve over ``F = GF(q^2)``."""

    def __init__(self, F):
        self.F = F
        self.q = F.q
        self.zero = RingElem(self, ())
        self.one = self.const(1)
        self.x = RingElem(self, ((0, 1),))
        self.y = RingElem(self, ((), (1,)))

    def __call__(self, coords) -> "RingElem":
        coords = [xp.trim(list(a)) for a in coords]
        if len(coords) > self.q:
            return RingElem(self, self._reduce(coords))
        return RingElem(self, coords)

    def const(self, c: int) -> "RingElem":
        return RingElem(self, ((c,),))

    def from_x(self, a) -> "RingElem":
        return RingElem(self, (a,))

    def monomial(self, c: int, r: int, j: int) -> "RingElem":
        """``c * x^r * y^j`` (``j`` may exceed ``q - 1``; it is reduced)."""
        coords = [[] for _ in range(j + 1)]
        coords[j] = xp.monomial(c, r)
        return self(coords)

    # raw coordinate arithmetic: lists of x-polys, length <= 2q - 1

    def _reduce(self, coords):
        F, q = self.F, self.q
        out = [list(a) for a in coords] + [[] for _ in range(max(0, q - len(coords)))]
        for j in range(len(out) - 1, q - 1, -1):
            c = out[j]
            if not c:
                continue
            # y^j = y^(j-q) (x^(q+1) - y)
            out[j - q] = xp.add(F, out[j - q], xp.shift(c, q + 1))
            out[j - q + 1] = xp.sub(F, out[j - q + 1], c)
        return out[:q]

    def _mul(self, A, B):
        F = self.F
        if not A or not B:
            return []
        out = [[] for _ in range(len(A) + len(B) - 1)]
        for j1, a in enumerate(A):
            if not a:
                continue
            for j2, b in enumerate(B):
                if b:
                    out[j1 + j2] = xp.add(F, out[j1 + j2], xp.mul(F, a, b))
        return self._reduce(out)


class RingElem:
    """An element of ``R``; immutable, compared structurally."""

    __slots__ = ("ring", "c")

    def __init__(self, ring: HermitianRing, coords):
        q = ring.q
        c = [tuple(a) for a in coords]
        if len(c) > q:
            raise ParameterError("unreduced ring element")
        c += [()] * (q - len(c))
        self.ring = ring
        self.c = tuple(c)

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        if isinstance(other, RingElem):
            return self.c == other.c
        if isinstance(other, int) and other == 0:
            return not self
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def _coerce(self, other):
        if isinstance(other, RingElem):
            if other.ring.F is not self.ring.F:
                raise ParameterError("ring context mismatch")
            return other
        if isinstance(other, int):
            return self.ring.const(self.ring.F.from_int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.ring.F
        return RingElem(self.ring, [xp.add(F, a, b) for a, b in zip(self.c, other.c)])

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.F
        return RingElem(self.ring, [xp.neg(F, a) for a in self.c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.ring.F
        return RingElem(self.ring, [xp.sub(F, a, b) for a, b in zip(self.c, other.c)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ZPoly):
            return other * self
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElem(self.ring, self.ring._mul(self.c, other.c))

    __rmul__ = __mul__

    def scale(self, c: int) -> "RingElem":
        F = self.ring.F
        return RingElem(self.ring, [xp.scale(F, a, c) for a in self.c])

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative power")
        out, base = self.ring.one, self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def pole_order(self) -> int:
        """``-v_{P_inf}(self)``: max of ``q*deg(a_j) + (q+1)*j``."""
        if not self:
            raise DomainError("pole order of zero")
        q = self.ring.q
        return max(q * (len(a) - 1) + (q + 1) * j for j, a in enumerate(self.c) if a)

    def terms(self):
        """Nonzero ``(coefficient, r, j)`` triples, largest pole order first."""
        q = self.ring.q
        out = [(c, r, j) for j, a in enumerate(self.c) for r, c in enumerate(a) if c]
        out.sort(key=lambda t: q * t[1] + (q + 1) * t[2], reverse=True)
        return out

    def evaluate(self, point) -> int:
        F = self.ring.F
        a0, b0 = point
        acc = 0
        for a in reversed(self.c):
            acc = F.add(F.mul(acc, b0), xp.evaluate(F, a, a0))
        return acc

    def __str__(self):
        return format_terms(self.ring.F, [(c, r, j, 0) for c, r, j in self.terms()])

    def __repr__(self):
        return f"RingElem({self})"


def _mono_text(F, c, r, j, i):
    parts = []
    if c != 1 or (r == 0 and j == 0 and i == 0):
        parts.append(F.token(c))
    for name, e in (("x", r), ("y", j), ("z", i)):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_terms(F, terms) -> str:
    if not terms:
        return "0"
    return " + ".join(_mono_text(F, *t) for t in terms)


class ZPoly:
    """A polynomial in ``z`` with coefficients in ``R`` (an element of ``R[z]``)."""

    __slots__ = ("ring", "c")

    def __init__(self, ring: HermitianRing, coeffs):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self.ring = ring
        self.c = tuple(c)

    @classmethod
    def from_grid(cls, ring, grid) -> "ZPoly":
        """Build from ``grid[i][j]`` = x-polynomial of ``y^j z^i``."""
        return cls(ring, [ring(row) for row in grid])

    @classmethod
    def from_terms(cls, ring, terms) -> "ZPoly":
        """Build from ``(c, r, j, i)`` tuples."""
        F = ring.F
        zmax = max((t[3] for t in terms), default=-1)
        grid = [[[] for _ in range(ring.q)] for _ in range(zmax + 1)]
        for c, r, j, i in terms:
            grid[i][j] = xp.add(F, grid[i][j], xp.monomial(c, r))
        return cls.from_grid(ring, grid)

    @classmethod
    def z(cls, ring) -> "ZPoly":
        return cls(ring, [ring.zero, ring.one])

    def grid(self, l: int | None = None):
        """``(l+1) x q`` grid of x-polynomials; ``l`` defaults to the z-degree."""
        l = self.zdeg() if l is None else l
        if l < self.zdeg():
            raise ParameterError(f"z-degree {self.zdeg()} exceeds l={l}")
        rows = [list(map(list, r.c)) for r in self.c]
        rows += [[[] for _ in range(self.ring.q)] for _ in range(l + 1 - len(rows))]
        return rows

    def zdeg(self) -> int | float:
        return len(self.c) - 1 if self.c else NEG_INF

    def coeff(self, i: int) -> RingElem:
        return self.c[i] if i < len(self.c) else self.ring.zero

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, ZPoly):
            return self.c == other.c
        if isinstance(other, RingElem):
            return self == ZPoly(self.ring, [other])
        if isinstance(other, int) and other == 0:
            return not self
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def _coerce(self, other):
        if isinstance(other, ZPoly):
            return other
        if isinstance(other, RingElem):
            return ZPoly(self.ring, [other])
        if isinstance(other, int):
            return ZPoly(self.ring, [self.ring.const(self.ring.F.from_int(other))])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.c), len(other.c))
        return ZPoly(self.ring, [self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return ZPoly(self.ring, [-a for a in self.c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.c), len(other.c))
        return ZPoly(self.ring, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RingElem):
            return ZPoly(self.ring, [a * other for a in self.c])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self or not other:
            return ZPoly(self.ring, [])
        out = [self.ring.zero] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if not a:
                continue
            for k, b in enumerate(other.c):
                if b:
                    out[i + k] = out[i + k] + a * b
        return ZPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = ZPoly(self.ring, [self.ring.one])
        for _ in range(e):
            out = out * self
        return out

    def scale(self, c: int) -> "ZPoly":
        return ZPoly(self.ring, [a.scale(c) for a in self.c])

    def shift_z(self, k: int) -> "ZPoly":
        return ZPoly(self.ring, [self.ring.zero] * k + list(self.c))

    def terms(self):
        """Nonzero ``(c, r, j, i)``: descending z-exponent, then descending
        weighted degree within each z-power."""
        return [(c, r, j, i) for i in range(len(self.c) - 1, -1, -1) for c, r, j in self.c[i].terms()]

    def monomials(self):
        for i, a in enumerate(self.c):
            for j, p in enumerate(a.c):
                for r, c in enumerate(p):
                    if c:
                        yield c, Monomial(r, j, i)

    def __str__(self):
        return format_terms(self.ring.F, self.terms())

    def __repr__(self):
        return f"ZPoly({self})"


# -- weighted degree, leading terms, indices ------------------------------


def deg_u(f: ZPoly, u: int) -> int:
    if not f:
        raise DomainError("deg_u of zero")
    return max(a.pole_order() + u * i for i, a in enumerate(f.c) if a)


def _top_monomials(f: ZPoly):
    # the largest monomial of each (i, j) cell; only these can lead
    for i, a in enumerate(f.c):
        for j, p in enumerate(a.c):
            if p:
                yield p[-1], Monomial(len(p) - 1, j, i)


def leading_term(f: ZPoly, u: int) -> tuple[int, Monomial]:
    if not f:
        raise DomainError("leading term of zero")
    q = f.ring.q
    return max(_top_monomials(f), key=lambda t: t[1].key(q, u))


def leading_monomial(f: ZPoly, u: int) -> Monomial:
    return leading_term(f, u)[1]


def leading_coefficient(f: ZPoly, u: int) -> int:
    return leading_term(f, u)[0]


def lt_index(f: ZPoly, u: int) -> tuple[int, int]:
    m = leading_monomial(f, u)
    return (m.i, m.j)


def index(f: ZPoly) -> tuple[int, int]:
    """Lex-largest ``(i, j)`` with a nonzero grid entry."""
    if not f:
        raise DomainError("index of zero")
    top = f.c[-1]
    j = max(j for j, p in enumerate(top.c) if p)
    return (len(f.c) - 1, j)


def compare(m1: Monomial, m2: Monomial, q: int, u: int) -> int:
    """Three-way comparison under ``>_u``."""
    k1, k2 = m1.key(q, u), m2.key(q, u)
    return (k1 > k2) - (k1 < k2)


def monic(f: ZPoly, u: int) -> ZPoly:
    return f.scale(f.ring.F.inv(leading_coefficient(f, u)))


# -- substitution and Taylor expansion ------------------------------------


def substitute(f: ZPoly, phi: RingElem) -> RingElem:
    """``f(phi)``: evaluate at ``z = phi`` (Horner, fully reduced)."""
    acc = f.ring.zero
    for a in reversed(f.c):
        acc = acc * phi + a
    return acc


def taylor_in_z(f: ZPoly, h: RingElem) -> list[RingElem]:
    """Coefficients ``q_k`` with ``f = sum_k q_k (z - h)^k``.

    Repeated synthetic division by ``z - h``; returns ``zdeg(f) + 1`` entries
    (an empty list for ``f = 0``).
    """
    cur = list(f.c)
    out = []
    while cur:
        # divide cur by (z - h): quotient b, remainder = cur(h)
        n = len(cur)
        b = [None] * (n - 1)
        acc = cur[-1]
        for k in range(n - 2, -1, -1):
            b[k] = acc
            acc = cur[k] + acc * h
        out.append(acc)
        cur = b
    return out
