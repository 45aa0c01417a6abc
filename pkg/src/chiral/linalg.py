"""Sparse exact linear algebra over Gaussian rationals.

Gaussian elimination with the first nonzero entry in column order as pivot;
no pivot-size heuristics, so results are deterministic for a given matrix.
"""

from __future__ import annotations

from .scalar import Scalar, ZERO, ONE


class Matrix:
    """Sparse rows x cols matrix; entries is a map (row, col) -> Scalar."""

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (r, c), v in entries.items():
                if not (0 <= r < rows and 0 <= c < cols):
                    raise IndexError("entry (%d, %d) outside %dx%d" % (r, c, rows, cols))
                v = Scalar.coerce(v)
                if v:
                    self.entries[(r, c)] = v

    def __getitem__(self, rc):
        return self.entries.get(rc, ZERO)

    def row_lists(self):
        out = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def __repr__(self):
        return "Matrix(%dx%d, %d nonzero)" % (self.rows, self.cols, len(self.entries))


def _eliminate(m: Matrix):
    """Reduced row echelon form of m; returns (rows as dicts, pivot columns)."""
    rows = [r for r in m.row_lists() if r]
    pivots = []
    reduced = []
    for col in range(m.cols):
        pivot_row = None
        for i, r in enumerate(rows):
            if r.get(col):
                pivot_row = rows.pop(i)
                break
        if pivot_row is None:
            continue
        inv = pivot_row[col]
        pivot_row = {c: v / inv for c, v in pivot_row.items()}
        for r in rows + reduced:
            f = r.get(col)
            if f:
                for c, v in pivot_row.items():
                    w = r.get(c, ZERO) - f * v
                    if w:
                        r[c] = w
                    elif c in r:
                        del r[c]
        rows = [r for r in rows if r]
        pivots.append(col)
        reduced.append(pivot_row)
    return reduced, pivots


def rank(m: Matrix) -> int:
    return len(_eliminate(m)[1])


def kernel_basis(m: Matrix):
    """Basis of the right kernel, one vector per free column, in column order.

    Vector for free column f has a 1 in position f and the negated reduced
    column above the pivots, so the list is itself in reduced echelon form.
    """
    reduced, pivots = _eliminate(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        vec = [ZERO] * m.cols
        vec[f] = ONE
        for prow, pcol in zip(reduced, pivots):
            coeff = prow.get(f)
            if coeff:
                vec[pcol] = -coeff
        basis.append(vec)
    return basis


def mat_vec(m: Matrix, vec):
    out = [ZERO] * m.rows
    for (r, c), v in m.entries.items():
        x = vec[c]
        if x:
            out[r] = out[r] + v * x
    return out
