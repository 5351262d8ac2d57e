"""Table-driven arithmetic in GF(q^2).

Elements are plain ints in *log encoding*: ``0`` is zero and ``e + 1`` is
``a^e`` where ``a`` is the primitive root of the fixed modulus. Sorting these
ints gives the canonical element order ``0, a^0, a^1, ..., a^(q^2-2)``.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import ParameterError

# Conway polynomials over the prime field, lowest coefficient first.
# Keyed by (p, degree).
CONWAY = {
    (2, 2): (1, 1, 1),  # X^2 + X + 1
    (3, 2): (2, 2, 1),  # X^2 + 2X + 2
    (2, 4): (1, 1, 0, 0, 1),  # X^4 + X + 1
    (5, 2): (2, 4, 1),  # X^2 + 4X + 2
    (7, 2): (3, 6, 1),  # X^2 + 6X + 3
    (2, 6): (1, 1, 0, 1, 1, 0, 1),  # X^6 + X^4 + X^3 + X + 1
    (3, 4): (2, 0, 0, 2, 1),  # X^4 + 2X^3 + 2
}


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``q == p**e`` and ``p`` prime, else None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    return (p, e) if r == 1 else None


SUPPORTED_Q = tuple(sorted(p**(d // 2) for (p, d) in CONWAY))


class GF:
    """The field with ``q**2`` elements for a small prime power ``q``."""

    def __init__(self, q: int):
        pe = prime_power(q)
        if pe is None:
            raise ParameterError(f"q={q} is not a prime power")
        p, e = pe
        if (p, 2 * e) not in CONWAY:
            raise ParameterError(f"q={q} is not supported (supported: {SUPPORTED_Q})")
        self.q = q
        self.p = p
        self.degree = 2 * e
        self.order = q * q
        self.modulus = CONWAY[(p, 2 * e)]
        self._build_tables()

    def _build_tables(self):
        p, dg, size = self.p, self.degree, self.order
        # vectors over GF(p) packed base p, lowest digit = constant term
        def unpack(v):
            return [(v // p**i) % p for i in range(dg)]

        def pack(digits):
            return sum(c * p**i for i, c in enumerate(digits))

        exp = []
        cur = [1] + [0] * (dg - 1)
        for _ in range(size - 1):
            exp.append(pack(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(c - top * m) % p for c, m in zip(cur, self.modulus)]
        if pack(cur) != 1 or len(set(exp)) != size - 1:
            raise ParameterError(f"modulus {self.modulus} is not primitive over GF({p})")
        # a primitive modulus is irreducible: otherwise the unit group would be
        # smaller than size - 1

        self.exp_vec = exp
        to_elem = {v: i + 1 for i, v in enumerate(exp)}
        to_elem[0] = 0
        self.vec = [0] + exp
        n1 = size - 1

        def vadd(a, b):
            return pack([(x + y) % p for x, y in zip(unpack(a), unpack(b))])

        self.add_t = [[to_elem[vadd(self.vec[a], self.vec[b])] for b in range(size)] for a in range(size)]
        self.mul_t = [[0 if a == 0 or b == 0 else (a + b - 2) % n1 + 1 for b in range(size)] for a in range(size)]
        self.neg_t = [to_elem[pack([(-x) % p for x in unpack(self.vec[a])])] for a in range(size)]
        self.inv_t = [0] + [(-(a - 1)) % n1 + 1 for a in range(1, size)]
        self.sub_t = [[self.add_t[a][self.neg_t[b]] for b in range(size)] for a in range(size)]
        self.zero = 0
        self.one = 1
        self.alpha = 2
        ints = [0]
        for _ in range(p - 1):
            ints.append(self.add_t[ints[-1]][1])
        self._ints = ints

    # -- arithmetic -----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self.add_t[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.sub_t[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_t[a][b]

    def neg(self, a: int) -> int:
        return self.neg_t[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.order)
        return self.inv_t[a]

    def div(self, a: int, b: int) -> int:
        return self.mul_t[a][self.inv(b)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return (a - 1) * e % (self.order - 1) + 1

    def from_log(self, e: int) -> int:
        return e % (self.order - 1) + 1

    def log(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no discrete log")
        return a - 1

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` under Z -> GF(q^2)."""
        return self._ints[n % self.p]

    def elements(self) -> range:
        """All elements in canonical order."""
        return range(self.order)

    # -- text I/O -------------------------------------------------------

    def token(self, a: int) -> str:
        if a == 0:
            return "0"
        if a == 1:
            return "1"
        return f"a^{a - 1}"

    def parse(self, tok: str) -> int:
        t = tok.strip()
        if t == "0":
            return 0
        if t == "1":
            return 1
        if t == "a":
            return self.from_log(1)
        if t.startswith("a^"):
            try:
                e = int(t[2:])
            except ValueError:
                raise ParameterError(f"bad field token {tok!r}") from None
            if not 0 <= e < self.order - 1:
                raise ParameterError(f"exponent out of range in {tok!r}")
            return e + 1
        raise ParameterError(f"bad field token {tok!r}")

    def format_vector(self, v) -> str:
        return ",".join(self.token(a) for a in v)

    def parse_vector(self, text: str) -> list[int]:
        if not text.strip():
            return []
        return [self.parse(t) for t in text.split(",")]

    def __repr__(self):
        return f"GF({self.q}^2)"


@lru_cache(maxsize=None)
def make_field(q: int) -> GF:
    return GF(q)
