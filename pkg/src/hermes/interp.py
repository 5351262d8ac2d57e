"""Interpolation step: generators of I_{v,m,l}, the Q-polynomial, membership.

The module ``I_{v,m,l} = <z - h_v, eta>^m ∩ R[z]_l`` is viewed over ``F[x]``
with basis ``y^j z^i`` ordered lexicographically by ``(i, j)``. Basis element
``y^j z^i`` is engine coordinate ``i*q + j`` with weight ``u*i + (q+1)*j``;
``x`` has weight ``q``. With this mapping the engine's tie-break (larger
coordinate) is the same as the larger z-exponent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import xpoly as xp
from .code import HermitianCode
from .errors import ParameterError
from .gbasis import WeightedOrder, algorithm_g, counter_bound, smallest
from .hermitian import RingElem, ZPoly, index, lt_index, monic, taylor_in_z


@dataclass
class InterpInstance:
    code: HermitianCode
    v: list[int]
    m: int
    l: int
    h_v: RingElem
    G: list[ZPoly]  # G_0 .. G_l
    generators: list[ZPoly]  # y^j G_i in the lex order of (i, j)

    def position(self, i: int, j: int) -> int:
        return i * self.code.q + j


@dataclass
class InterpStats:
    mult_count: int
    updates: int
    counter_bound: int
    basis: list[ZPoly] = field(repr=False)
    q_position: int = 0


def generator_degree_bound(code: HermitianCode, m: int, i: int) -> int:
    """Upper bound on ``deg_u(y^j G_i)`` for every ``j``.

    For ``i <= m`` this is ``m(q^3+q^2-q-1) + q^2 - 1``; the pure z-shift in
    ``G_i = z^(i-m) (z - h_v)^m`` adds ``u*(i-m)`` for ``i > m``.
    """
    q = code.q
    base = m * (q**3 + q**2 - q - 1) + q * q - 1
    return base + code.u * max(0, i - m)


def build_instance(code: HermitianCode, v, m: int, l: int) -> InterpInstance:
    if m < 1:
        raise ParameterError(f"multiplicity m must be >= 1, got {m}")
    if l < m:
        raise ParameterError(f"list size l={l} must be >= m={m}")
    if len(v) != code.n:
        raise ParameterError(f"received word length {len(v)} != n={code.n}")
    R = code.ring
    h = code.h_v(v)
    eta = code.eta()
    zh = ZPoly(R, [-h, R.one])
    eta_pows = [R.one]
    for _ in range(m):
        eta_pows.append(eta_pows[-1] * eta)
    zh_pow = ZPoly(R, [R.one])
    G = []
    for i in range(m + 1):
        G.append(zh_pow * eta_pows[m - i])
        if i < m:
            zh_pow = zh_pow * zh
    for i in range(m + 1, l + 1):
        G.append(G[m].shift_z(i - m))
    gens = [g * R.monomial(1, 0, j) for g in G for j in range(code.q)]
    inst = InterpInstance(code, list(v), m, l, h, G, gens)
    for k, g in enumerate(gens):
        i, j = divmod(k, code.q)
        if index(g) != (i, j):
            raise AssertionError(f"generator y^{j} G_{i} has index {index(g)}")
    return inst


def engine_order(code: HermitianCode, l: int) -> WeightedOrder:
    q, u = code.q, code.u
    return WeightedOrder(q, tuple(u * i + (q + 1) * j for i in range(l + 1) for j in range(q)))


def to_engine(inst: InterpInstance):
    """Flatten generators into F[x]-vectors; returns ``(gens, order)``."""
    l = inst.l
    gens = [[a for row in g.grid(l) for a in row] for g in inst.generators]
    return gens, engine_order(inst.code, l)


def from_engine(code: HermitianCode, vec) -> ZPoly:
    q = code.q
    grid = [vec[k : k + q] for k in range(0, len(vec), q)]
    return ZPoly.from_grid(code.ring, grid)


def interpolate(code: HermitianCode, v, m: int, l: int, *, debug: bool = False):
    """The Q-polynomial of ``I_{v,m}`` (monic under ``>_u``) and run statistics.

    ``l`` must bound the z-degree of the Q-polynomial for the result to be the
    Q-polynomial of ``I_{v,m}``; otherwise it is that of ``I_{v,m,l}``.
    """
    inst = build_instance(code, v, m, l)
    gens, order = to_engine(inst)
    bound = counter_bound(gens, order)
    basis, counter = algorithm_g(code.F, gens, order, debug=debug)
    k = smallest(basis, order)
    rows = [from_engine(code, b) for b in basis]
    Q = monic(rows[k], code.u)
    stats = InterpStats(counter.mult_count, counter.updates, bound, rows, k)
    return Q, stats


def membership(f: ZPoly, code: HermitianCode, v, m: int) -> bool:
    """Exact test of ``f ∈ <z - h_v, eta>^m``.

    Writing ``f = sum_k q_k (z - h_v)^k``, membership holds iff each ``q_k``
    with ``k < m`` is divisible by ``eta^(m-k)`` coordinate-wise over F[x].
    """
    F = code.F
    h = code.h_v(v)
    eta = code.eta().c[0]
    qs = taylor_in_z(f, h)
    for k in range(min(m, len(qs))):
        div = xp.pow_(F, eta, m - k)
        for a in qs[k].c:
            if a and xp.divmod_(F, list(a), div)[1]:
                return False
    return True


def basis_lt_indices(stats: InterpStats, u: int) -> list[tuple[int, int]]:
    return [lt_index(g, u) for g in stats.basis]


def diagonal_degree_sum(stats: InterpStats, q: int) -> int:
    """Sum over rows of the x-degree of the row's own diagonal coefficient."""
    total = 0
    for k, g in enumerate(stats.basis):
        i, j = divmod(k, q)
        total += len(g.coeff(i).c[j]) - 1
    return total
