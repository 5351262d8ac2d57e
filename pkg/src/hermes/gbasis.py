"""Gröbner bases of F[x]-submodules of F[x]^M with special generators.

The input is ``g_1 .. g_M`` with ``ind(g_i) = i`` (the last nonzero coordinate
of ``g_i`` is ``i``). The engine updates rows in place until the leading term
of every row ``g_r`` sits in coordinate ``r``, which makes the rows a Gröbner
basis for the weighted order below.

Positions are 0-based in code: coordinate ``i`` here is ``e_{i+1}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from . import xpoly as xp
from .errors import ParameterError
from .xpoly import NEG_INF

ModuleVec = list  # M coordinates, each an x-polynomial


@dataclass(frozen=True)
class WeightedOrder:
    """``deg_u(x^r e_i) = ux*r + weights[i]``; ties go to the larger ``i``."""

    ux: int
    weights: tuple[int, ...]

    def __post_init__(self):
        if self.ux <= 0:
            raise ParameterError("ux must be positive")
        if any(w < 0 for w in self.weights):
            raise ParameterError("weights must be nonnegative")

    @property
    def rank(self) -> int:
        return len(self.weights)

    def term_deg(self, a, i: int):
        return self.ux * (len(a) - 1) + self.weights[i] if a else NEG_INF

    def lt(self, g) -> tuple[int, int]:
        """``(deg_u, index)`` of the leading term of a nonzero vector."""
        ux, w = self.ux, self.weights
        best = None
        for i, a in enumerate(g):
            if a:
                key = (ux * (len(a) - 1) + w[i], i)
                if best is None or key > best:
                    best = key
        if best is None:
            raise ParameterError("leading term of zero vector")
        return best


@dataclass
class OpCounter:
    mult_count: int = 0
    updates: int = 0
    trace: list = field(default_factory=list)


def index(g) -> int:
    for i in range(len(g) - 1, -1, -1):
        if g[i]:
            return i
    raise ParameterError("index of zero vector")


def _check_input(gens, order):
    M = order.rank
    if len(gens) != M:
        raise ParameterError(f"expected {M} generators, got {len(gens)}")
    for i, g in enumerate(gens):
        if len(g) != M:
            raise ParameterError(f"generator {i} has {len(g)} coordinates, expected {M}")
        if not any(g):
            raise ParameterError(f"generator {i} is zero")
        if index(g) != i:
            raise ParameterError(f"generator {i} has index {index(g)}, expected {i}")


def _diag_dominant(rows, order, r) -> bool:
    """Sum of diagonal degrees beats every other permutation of 0..r."""
    D = [[order.term_deg(rows[i][j], j) for j in range(r + 1)] for i in range(r + 1)]
    diag = sum(D[i][i] for i in range(r + 1))
    ident = tuple(range(r + 1))
    for perm in itertools.permutations(ident):
        if perm != ident and not diag > sum(D[i][perm[i]] for i in range(r + 1)):
            return False
    return True


def algorithm_g(F, gens: Sequence[ModuleVec], order: WeightedOrder, *, debug: bool = False, trace: bool = False):
    """Run the row-update algorithm over the field ``F``; returns ``(basis, counter)``.

    With ``debug`` the termination measure of each row is checked to drop
    strictly after every update, and for ``M <= 5`` the diagonal-dominance
    invariant is checked too. ``trace`` records every update as
    ``(r, s, d, swapped)`` in ``counter.trace``.
    """
    _check_input(gens, order)
    st, mt, inv_t = F.sub_t, F.mul_t, F.inv_t
    ux, w = order.ux, order.weights
    rows = [[list(a) for a in g] for g in gens]
    M = len(rows)
    counter = OpCounter()

    def measure(r):
        deg, s = order.lt(rows[r])
        return (deg - order.term_deg(rows[r][r], r), s)

    def axpy(target, src, c, d):
        # target -= c * x^d * src, coordinate-wise, in place; returns mults done
        row = mt[c]
        n = 0
        for j, a in enumerate(src):
            if not a:
                continue
            t = target[j]
            need = len(a) + d
            if len(t) < need:
                t.extend([0] * (need - len(t)))
            for k, coef in enumerate(a):
                if coef:
                    t[k + d] = st[t[k + d]][row[coef]]
                    n += 1
            xp.trim(t)
        return n

    for r in range(1, M):
        g_r = rows[r]
        while True:
            # G3: s = ind(LT(g_r))
            best, s = None, -1
            for j, a in enumerate(g_r):
                if a:
                    key = (ux * (len(a) - 1) + w[j], j)
                    if best is None or key > best:
                        best, s = key, j
            if s == r:
                break
            before = measure(r) if debug else None
            g_s = rows[s]
            a_rs, a_ss = g_r[s], g_s[s]
            # G4
            d = len(a_rs) - len(a_ss)
            c = mt[a_rs[-1]][inv_t[a_ss[-1]]]
            counter.mult_count += 1
            # G5
            if d >= 0:
                counter.mult_count += axpy(g_r, g_s, c, d)
            else:
                new_r = [xp.shift(a, -d) for a in g_r]
                counter.mult_count += axpy(new_r, g_s, c, 0)
                rows[s] = g_r
                rows[r] = g_r = new_r
            counter.updates += 1
            if trace:
                counter.trace.append((r, s, d, d < 0))
            if debug:
                after = measure(r)
                if not after < before:
                    raise AssertionError(f"termination measure did not drop at r={r}: {before} -> {after}")
                if M <= 5 and not _diag_dominant(rows, order, r):
                    raise AssertionError(f"diagonal dominance lost at r={r}")
    return rows, counter


def counter_bound(gens: Sequence[ModuleVec], order: WeightedOrder) -> int:
    """Upper bound on the engine's multiplication count for this input.

    ``c`` is the largest term degree of any entry, ``d`` the largest excess of
    an entry's degree over its row's diagonal entry; the bound is
    ``sum_{i=1..M} c*d*i^2 / ux`` (rounded down, the count being an integer).
    """
    c = max(order.term_deg(a, j) for g in gens for j, a in enumerate(g) if a)
    d = max(
        order.term_deg(a, j) - order.term_deg(g[i], i)
        for i, g in enumerate(gens)
        for j, a in enumerate(g[: i + 1])
        if a
    )
    M = len(gens)
    return c * d * sum(i * i for i in range(1, M + 1)) // order.ux


def smallest(basis: Sequence[ModuleVec], order: WeightedOrder) -> int:
    """Position of the row with the smallest leading term."""
    return min(range(len(basis)), key=lambda k: order.lt(basis[k]))
