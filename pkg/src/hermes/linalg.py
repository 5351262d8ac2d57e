"""Gaussian elimination over GF(q^2) on dense Python lists."""

from __future__ import annotations


class Echelon:
    """Incrementally maintained row-echelon basis of a row space.

    Each stored row is normalized so its pivot entry is 1. When ``track`` is
    set, every stored row remembers the combination of inserted vectors that
    produced it (as a dict ``{insertion_number: coefficient}``).
    """

    def __init__(self, F, track: bool = False):
        self.F = F
        self.track = track
        self.rows: dict[int, tuple[list[int], dict[int, int] | None]] = {}
        self.count = 0

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        """Reduce ``vec`` against stored rows; returns (residual, combination)."""
        F = self.F
        st, mt = F.sub_t, F.mul_t
        v = list(vec)
        comb = {self.count: 1} if self.track else None
        for p, (row, rcomb) in self.rows.items():
            c = v[p]
            if not c:
                continue
            mrow = mt[c]
            for k, t in enumerate(row):
                if t:
                    v[k] = st[v[k]][mrow[t]]
            if self.track:
                for key, t in rcomb.items():
                    comb[key] = st[comb.get(key, 0)][mrow[t]]
        return v, comb

    def insert(self, vec, pivot_of=None):
        """Insert a vector; returns the pivot column, or None if dependent.

        ``pivot_of(v)`` picks the pivot column of a nonzero residual (default:
        first nonzero entry). Rows stay fully reduced: every stored row is zero
        at every other row's pivot. After a dependent insert, ``dependency``
        holds the combination of inserted vectors that sums to zero.
        """
        v, comb = self.reduce(vec)
        self.count += 1
        nz = [k for k, t in enumerate(v) if t]
        if not nz:
            self.dependency = comb
            return None
        p = pivot_of(v) if pivot_of else nz[0]
        F = self.F
        inv = F.inv(v[p])
        row = F.mul_t[inv]
        v = [row[t] for t in v]
        if self.track:
            comb = {key: row[t] for key, t in comb.items()}
        # keep other rows free of the new pivot so reduce() order is irrelevant
        st, mt = F.sub_t, F.mul_t
        for r, rc in self.rows.values():
            c = r[p]
            if c:
                mrow = mt[c]
                for k, t in enumerate(v):
                    if t:
                        r[k] = st[r[k]][mrow[t]]
                if self.track:
                    for key, t in comb.items():
                        rc[key] = st[rc.get(key, 0)][mrow[t]]
        self.rows[p] = (v, comb)
        return p

    def contains(self, vec) -> bool:
        v, _ = self.reduce(vec)
        return not any(v)


def rank(F, rows) -> int:
    e = Echelon(F)
    for r in rows:
        e.insert(r)
    return len(e)


def inverse(F, mat):
    """Inverse of a square matrix, or None if singular."""
    n = len(mat)
    st, mt = F.sub_t, F.mul_t
    a = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = F.inv(a[col][col])
        a[col] = [mt[inv][t] for t in a[col]]
        for r in range(n):
            c = a[r][col]
            if r != col and c:
                mrow = mt[c]
                a[r] = [st[x][mrow[y]] for x, y in zip(a[r], a[col])]
    return [r[n:] for r in a]


def mat_vec(F, mat, vec):
    at, mt = F.add_t, F.mul_t
    out = []
    for r in mat:
        acc = 0
        for a, b in zip(r, vec):
            if a and b:
                acc = at[acc][mt[a][b]]
        out.append(acc)
    return out
