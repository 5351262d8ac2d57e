"""Dense polynomials in x over a :class:`~hermes.galois.GF`.

A polynomial is a list of field elements, lowest degree first, with no
trailing zeros. The zero polynomial is ``[]`` and has degree ``NEG_INF``.
Functions never mutate their inputs.
"""

from __future__ import annotations

NEG_INF = float("-inf")


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a) -> int | float:
    return len(a) - 1 if a else NEG_INF


def lc(a) -> int:
    return a[-1] if a else 0


def add(F, a, b) -> list[int]:
    at = F.add_t
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        if c:
            out[i] = at[out[i]][c]
    return trim(out)


def sub(F, a, b) -> list[int]:
    st = F.sub_t
    n = max(len(a), len(b))
    out = list(a) + [0] * (n - len(a))
    for i, c in enumerate(b):
        if c:
            out[i] = st[out[i]][c]
    return trim(out)


def neg(F, a) -> list[int]:
    nt = F.neg_t
    return [nt[c] for c in a]


def scale(F, a, c: int) -> list[int]:
    if c == 0:
        return []
    row = F.mul_t[c]
    return [row[t] for t in a]


def shift(a, d: int) -> list[int]:
    """Multiply by ``x**d``; negative ``d`` drops low coefficients."""
    if not a:
        return []
    if d >= 0:
        return [0] * d + list(a)
    return trim(list(a[-d:]))


def mul(F, a, b) -> list[int]:
    if not a or not b:
        return []
    at, mt = F.add_t, F.mul_t
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if not c:
            continue
        row = mt[c]
        for j, d in enumerate(b):
            if d:
                k = i + j
                out[k] = at[out[k]][row[d]]
    return trim(out)


def pow_(F, a, e: int) -> list[int]:
    out = [1]
    base = list(a)
    while e:
        if e & 1:
            out = mul(F, out, base)
        e >>= 1
        if e:
            base = mul(F, base, base)
    return out


def divmod_(F, a, b) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) <= db:
        return [], r
    inv_lead = F.inv(b[-1])
    st, mt = F.sub_t, F.mul_t
    quo = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if not c:
            continue
        c = mt[c][inv_lead]
        quo[k - db] = c
        row = mt[c]
        for i, t in enumerate(b):
            if t:
                r[k - db + i] = st[r[k - db + i]][row[t]]
    return trim(quo), trim(r[:db])


def evaluate(F, a, x0: int) -> int:
    at, mt = F.add_t, F.mul_t
    acc = 0
    for c in reversed(a):
        acc = at[mt[acc][x0]][c]
    return acc


def monomial(c: int, d: int) -> list[int]:
    return [0] * d + [c] if c else []


def from_roots(F, roots) -> list[int]:
    """Monic polynomial ``prod (x - r)``."""
    out = [1]
    for r in roots:
        out = mul(F, out, [F.neg(r), 1])
    return out
