"""Brute-force linear-algebra references for the Gröbner engine and Q.

These are slow and only meant for checking: they never call the engine.

* ``same_module`` / ``minimal_leading_term`` work on the F-span of all
  x-shifts of a generating set up to a weighted-degree bound.
* ``q_polynomial_oracle`` finds the Q-polynomial directly from the ideal:
  monomials are taken in increasing ``>_u`` order and mapped to their
  residues modulo ``<z - h_v, eta>^m`` until the first linear dependency.
"""

from __future__ import annotations

from math import comb

from . import xpoly as xp
from .hermitian import Monomial, ZPoly, monic
from .linalg import Echelon


def degree_bound(gens, order) -> int:
    """Twice (largest input degree + ux * largest input x-degree)."""
    top = max(order.lt(g)[0] for g in gens)
    xdeg = max(len(a) - 1 for g in gens for a in g if a)
    return 2 * (top + order.ux * xdeg)


def _columns(order, bound):
    cols = []
    for i, w in enumerate(order.weights):
        r = 0
        while w + order.ux * r <= bound:
            cols.append((w + order.ux * r, i, r))
            r += 1
    # largest monomial first, so a row's first nonzero entry is its leading term
    cols.sort(reverse=True)
    return {(i, r): k for k, (_, i, r) in enumerate(cols)}, cols


def _vector(g, colmap, ncols, shift=0):
    v = [0] * ncols
    for i, a in enumerate(g):
        for r, c in enumerate(a):
            if c:
                v[colmap[(i, r + shift)]] = c
    return v


def span_of_shifts(F, gens, order, bound) -> tuple[Echelon, dict, list]:
    colmap, cols = _columns(order, bound)
    ech = Echelon(F)
    for g in gens:
        if not any(g):
            continue
        top = order.lt(g)[0]
        d = 0
        while top + order.ux * d <= bound:
            ech.insert(_vector(g, colmap, len(cols), d))
            d += 1
    return ech, colmap, cols


def same_module(F, gens_a, gens_b, order, bound=None) -> bool:
    """Each generating set lies in the bounded shift-span of the other."""
    bound = bound if bound is not None else max(degree_bound(gens_a, order), degree_bound(gens_b, order))
    ea, colmap, cols = span_of_shifts(F, gens_a, order, bound)
    eb, _, _ = span_of_shifts(F, gens_b, order, bound)
    for g in gens_b:
        if any(g) and not ea.contains(_vector(g, colmap, len(cols))):
            return False
    for g in gens_a:
        if any(g) and not eb.contains(_vector(g, colmap, len(cols))):
            return False
    return True


def minimal_leading_term(F, gens, order, bound=None) -> tuple[int, int]:
    """``(deg_u, index)`` of the smallest leading term in the bounded span."""
    bound = bound if bound is not None else degree_bound(gens, order)
    ech, _, cols = span_of_shifts(F, gens, order, bound)
    k = max(ech.rows)
    deg, i, _ = cols[k]
    return deg, i


def _monomials_ascending(q, u, l, max_deg):
    out = []
    for i in range(l + 1):
        for j in range(q):
            r = 0
            while q * r + (q + 1) * j + u * i <= max_deg:
                out.append(Monomial(r, j, i))
                r += 1
    out.sort(key=lambda mono: mono.key(q, u))
    return out


def q_polynomial_oracle(code, v, m: int, l: int) -> ZPoly:
    """The monic Q-polynomial of ``I_{v,m} ∩ R[z]_l`` by linear algebra.

    The residue of ``f = sum_k c_k (z - h_v)^k`` is the tuple of
    ``c_k mod eta^(m-k)`` for ``k < m``; for a monomial ``x^r y^j z^i`` the
    coefficients come from the binomial expansion of
    ``z^i = ((z - h_v) + h_v)^i``.
    """
    F, R, q, u = code.F, code.ring, code.q, code.u
    h = code.h_v(v)
    eta = code.eta().c[0]
    eta_pow = {k: xp.pow_(F, eta, m - k) for k in range(m)}
    widths = {k: q**2 * (m - k) for k in range(m)}
    h_pows = [R.one]
    for _ in range(l):
        h_pows.append(h_pows[-1] * h)
    yh = {(j, t): R.monomial(1, 0, j) * h_pows[t] for j in range(q) for t in range(l + 1)}

    def residue(mono):
        vec = []
        for k in range(m):
            coef = F.from_int(comb(mono.i, k)) if k <= mono.i else 0
            for j in range(q):
                block = [0] * widths[k]
                if coef:
                    a = yh[(mono.j, mono.i - k)].c[j]
                    if a:
                        rem = xp.divmod_(F, xp.shift(xp.scale(F, list(a), coef), mono.r), eta_pow[k])[1]
                        block[: len(rem)] = rem
                vec.extend(block)
        return vec

    # eta^m itself is in the ideal, so the answer has degree <= m q^3
    monos = _monomials_ascending(q, u, l, m * q**3)
    ech = Echelon(F, track=True)
    for mono in monos:
        if ech.insert(residue(mono)) is None:
            terms = [(c, monos[t].r, monos[t].j, monos[t].i) for t, c in ech.dependency.items() if c]
            return monic(ZPoly.from_terms(R, terms), u)
    raise AssertionError("no dependency found below deg_u(eta^m)")
