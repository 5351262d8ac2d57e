"""Decoder parameter selection from monomial counting."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError


def gap_indicator(i: int, q: int) -> int:
    """1 if ``i = a*q + b*(q+1)`` for some ``a, b >= 0``, else 0."""
    if i < 0:
        raise ParameterError("gap indicator needs i >= 0")
    for a in range(i // q + 1):
        if (i - a * q) % (q + 1) == 0:
            return 1
    return 0


def count_monomials(i: int, q: int, u: int) -> int:
    """Number of monomials ``x^r y^j z^k`` of R[z] with weighted degree ``i``."""
    if u < 1:
        raise ParameterError("u must be >= 1")
    return sum(gap_indicator(i - u * j, q) for j in range(i // u + 1))


@dataclass(frozen=True)
class DecoderParams:
    m: int
    N: int
    w: int
    l: int
    tau: int

    @property
    def tau_positive(self) -> bool:
        return self.tau > 0


def choose_params(code, m: int) -> DecoderParams:
    """Smallest ``w`` with at least ``N = n*C(m+1,2) + 1`` monomials of degree
    <= w, then ``l = w // u`` and radius ``ceil(n - w/m) - 1``.

    ``tau`` is reported as computed, even when it is not positive.
    """
    if m < 1:
        raise ParameterError(f"multiplicity m must be >= 1, got {m}")
    q, u, n = code.q, code.u, code.n
    N = n * m * (m + 1) // 2 + 1
    total, w = 0, -1
    while total < N:
        w += 1
        total += count_monomials(w, q, u)
    tau = math.ceil(n - Fraction(w, m)) - 1
    return DecoderParams(m=m, N=N, w=w, l=w // u, tau=tau)
