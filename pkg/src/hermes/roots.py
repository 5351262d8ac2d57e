"""Roots of Q(z) in L(u P_inf) by pruned enumeration on an information set.

Any root ``mu`` satisfies ``Q(P, mu(P)) = 0`` at every point ``P``, so the
values of ``mu`` at the points are confined to the pointwise root sets. We
pick ``k`` points whose evaluation rows are independent, enumerate value
assignments there, solve for the message, and keep only candidates that pass
the exact check ``Q(mu) = 0`` in ``R``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .code import HermitianCode
from .errors import DomainError, ParameterError
from .hermitian import ZPoly, substitute
from .linalg import Echelon, inverse, mat_vec
from . import xpoly as xp

ALL = None  # marker: the specialized polynomial vanishes identically

DEFAULT_BUDGET = 2**20


@dataclass
class RootReport:
    roots: list = field(default_factory=list)  # (message tuple, RingElem)
    info_set: list[int] = field(default_factory=list)
    candidates: int = 0
    exact_checks: int = 0

    @property
    def messages(self) -> list[tuple[int, ...]]:
        return [m for m, _ in self.roots]


def pointwise_roots(Q: ZPoly, P, F=None):
    """Roots in F of ``Q(P, z)``; ``ALL`` if that polynomial is zero."""
    F = F or Q.ring.F
    uni = xp.trim([a.evaluate(P) for a in Q.c])
    if not uni:
        return ALL
    return frozenset(e for e in F.elements() if xp.evaluate(F, uni, e) == 0)


def evaluation_matrix(code: HermitianCode) -> list[list[int]]:
    """Row ``i`` holds the basis functions evaluated at point ``i``."""
    F = code.F
    rows = []
    for a0, b0 in code.points:
        rows.append([F.mul(F.pow(a0, a), F.pow(b0, b)) for a, b in code.basis])
    return rows


def find_roots(Q: ZPoly, code: HermitianCode) -> RootReport:
    if not Q:
        raise DomainError("root finding needs a nonzero Q")
    F, k = code.F, code.k
    S = [pointwise_roots(Q, P, F) for P in code.points]
    report = RootReport()
    if any(s is not ALL and not s for s in S):
        return report
    size = [F.order if s is ALL else len(s) for s in S]
    E = evaluation_matrix(code)

    ech = Echelon(F)
    J = []
    for i in sorted(range(code.n), key=lambda i: (size[i], i)):
        if ech.insert(E[i]) is not None:
            J.append(i)
            if len(J) == k:
                break
    if len(J) < k:
        raise AssertionError("evaluation matrix has rank below k")
    inv = inverse(F, [E[i] for i in J])
    report.info_set = J

    choices = [list(F.elements()) if S[i] is ALL else sorted(S[i]) for i in J]
    for vals in itertools.product(*choices):
        report.candidates += 1
        msg = mat_vec(F, inv, vals)
        word = mat_vec(F, E, msg)
        if any(s is not ALL and c not in s for c, s in zip(word, S)):
            continue
        mu = code.message_function(msg)
        report.exact_checks += 1
        if not substitute(Q, mu):
            report.roots.append((tuple(msg), mu))
    report.roots.sort(key=lambda t: t[0])
    return report


def exhaustive_roots(Q: ZPoly, code: HermitianCode, budget: int = DEFAULT_BUDGET) -> RootReport:
    """Reference root finder: try every message."""
    F, k = code.F, code.k
    total = F.order**k
    if total > budget:
        raise ParameterError(f"exhaustive search needs {total} candidates, budget is {budget}")
    report = RootReport()
    for msg in itertools.product(F.elements(), repeat=k):
        report.candidates += 1
        mu = code.message_function(msg)
        report.exact_checks += 1
        if not substitute(Q, mu):
            report.roots.append((tuple(msg), mu))
    return report
