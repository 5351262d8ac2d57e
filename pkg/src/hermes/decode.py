"""List decoding: interpolation, root finding, re-encoding."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bounds import choose_params
from .code import HermitianCode
from .errors import ParameterError
from .hermitian import ZPoly, deg_u
from .interp import InterpStats, interpolate
from .roots import find_roots


def hamming_distance(a, b) -> int:
    if len(a) != len(b):
        raise ParameterError(f"length mismatch: {len(a)} != {len(b)}")
    return sum(1 for x, y in zip(a, b) if x != y)


@dataclass
class DecodeEntry:
    message: tuple[int, ...]
    codeword: list[int]
    distance: int


@dataclass
class DecodeResult:
    Q: ZPoly
    entries: list[DecodeEntry]
    guarantee_radius: Fraction
    l: int
    stats: InterpStats = field(repr=False)

    @property
    def messages(self) -> list[tuple[int, ...]]:
        return [e.message for e in self.entries]


def list_decode(code: HermitianCode, v, m: int, l: int | None = None) -> DecodeResult:
    """Every message whose function is a root of the Q-polynomial.

    Nothing is filtered by distance. Any codeword within
    ``guarantee_radius = n - deg_u(Q)/m`` (strictly) is guaranteed to appear.
    """
    if l is None:
        l = max(m, choose_params(code, m).l)
    Q, stats = interpolate(code, v, m, l)
    report = find_roots(Q, code)
    entries = []
    for msg, mu in report.roots:
        cw = code.ev(mu)
        entries.append(DecodeEntry(msg, cw, hamming_distance(cw, v)))
    entries.sort(key=lambda e: (e.distance, e.message))
    radius = code.n - Fraction(deg_u(Q, code.u), m)
    return DecodeResult(Q, entries, radius, l, stats)
