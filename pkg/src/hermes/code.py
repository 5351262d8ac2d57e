"""Hermitian curve points, the code C_u, and the functions h_i, h_v, eta."""

from __future__ import annotations

from functools import cached_property

from . import xpoly as xp
from .errors import ParameterError
from .galois import GF, make_field
from .hermitian import HermitianRing, RingElem


def enumerate_points(F: GF) -> list[tuple[int, int]]:
    """Affine rational points ``(a, b)`` with ``a^(q+1) = b^q + b``.

    Ordered by ``a`` then ``b``, both in canonical field order.
    """
    q = F.q
    pts = []
    for a in F.elements():
        rhs = F.pow(a, q + 1)
        for b in F.elements():
            if F.add(F.pow(b, q), b) == rhs:
                pts.append((a, b))
    return pts


def basis_exponents(q: int, u: int) -> list[tuple[int, int]]:
    """Exponents ``(a, b)`` of ``x^a y^b`` spanning L(u P_inf), by pole order."""
    out = [(a, b) for b in range(q) for a in range(u // q + 1) if q * a + (q + 1) * b <= u]
    out.sort(key=lambda e: q * e[0] + (q + 1) * e[1])
    return out


class HermitianCode:
    """The one-point Hermitian code ``C_u`` over ``GF(q^2)``."""

    def __init__(self, F: GF, u: int):
        q = F.q
        n = q**3
        if not 0 < u < n:
            raise ParameterError(f"u must satisfy 0 < u < n={n}, got {u}")
        self.F = F
        self.q = q
        self.u = u
        self.n = n
        self.g = q * (q - 1) // 2
        self.ring = HermitianRing(F)
        self.points = enumerate_points(F)
        self.basis = basis_exponents(q, u)
        self.k = len(self.basis)
        self._basis_elems = [self.ring.monomial(1, a, b) for a, b in self.basis]

    def __repr__(self):
        return f"HermitianCode(q={self.q}, u={self.u}, n={self.n}, k={self.k})"

    def basis_text(self) -> list[str]:
        return [str(e) for e in self._basis_elems]

    # -- encoding ------------------------------------------------------

    def message_function(self, msg) -> RingElem:
        if len(msg) != self.k:
            raise ParameterError(f"message length {len(msg)} != k={self.k}")
        F, q = self.F, self.q
        coords = [[] for _ in range(q)]
        for w, (a, b) in zip(msg, self.basis):
            if w:
                coords[b] = xp.add(F, coords[b], xp.monomial(w, a))
        return self.ring(coords)

    def encode(self, msg) -> tuple[list[int], RingElem]:
        mu = self.message_function(msg)
        return self.ev(mu), mu

    def ev(self, a: RingElem) -> list[int]:
        return [a.evaluate(P) for P in self.points]

    def coordinates(self, mu: RingElem) -> list[int]:
        """Message ``omega`` of ``mu`` in L(u P_inf); raises if ``mu`` is outside."""
        msg = []
        seen = set()
        for a, b in self.basis:
            p = mu.c[b]
            msg.append(p[a] if a < len(p) else 0)
            seen.add((a, b))
        for b, p in enumerate(mu.c):
            for a, c in enumerate(p):
                if c and (a, b) not in seen:
                    raise ParameterError(f"{mu} is not in L({self.u}P_inf)")
        return msg

    # -- interpolation building blocks ---------------------------------

    @cached_property
    def _h(self) -> list[RingElem]:
        F, R = self.F, self.ring
        out = []
        for a0, b0 in self.points:
            px = xp.from_roots(F, [a for a in F.elements() if a != a0])
            t = F.add(F.pow(b0, self.q), b0)
            others = [b for b in F.elements() if b != b0 and F.add(F.pow(b, self.q), b) == t]
            h = R.from_x(xp.neg(F, px))
            for b in others:
                h = h * (R.y - R.const(b))
            out.append(h)
        return out

    def h_i(self, i: int) -> RingElem:
        """The function with ``h_i(P_j) = [i == j]``; ``i`` is 1-based."""
        if not 1 <= i <= self.n:
            raise ParameterError(f"point index {i} out of range 1..{self.n}")
        return self._h[i - 1]

    def h_v(self, v) -> RingElem:
        if len(v) != self.n:
            raise ParameterError(f"received word length {len(v)} != n={self.n}")
        F, q = self.F, self.q
        coords = [[] for _ in range(q)]
        for vi, h in zip(v, self._h):
            if vi:
                for j in range(q):
                    coords[j] = xp.add(F, coords[j], xp.scale(F, h.c[j], vi))
        return self.ring(coords)

    def eta(self) -> RingElem:
        """``x^(q^2) - x``, vanishing at every affine rational point."""
        F = self.F
        return self.ring.from_x(xp.sub(F, xp.monomial(1, self.q**2), [0, 1]))


def make_code(F: GF | int, u: int) -> HermitianCode:
    if isinstance(F, int):
        F = make_field(F)
    return HermitianCode(F, u)


def evaluate(a: RingElem, point) -> int:
    return a.evaluate(point)
