"""Exact integer matrices and Smith normal form.

All arithmetic is done with Python ints, so entries never overflow.  The
reduction works on sparse rows (``dict`` column -> value) because boundary
matrices of simplicial complexes are very sparse and mostly have unit
entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "IntMatrix",
    "SNFDecomposition",
    "snf",
    "invariant_factors",
    "cokernel_structure",
    "rank",
    "kernel_rank",
    "kernel_basis",
]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        """Build from a list of rows.  ``cols`` is needed only when there are no rows."""
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def from_sparse(cls, rows: int, cols: int, data: Iterable[dict[int, int]]) -> IntMatrix:
        out = [0] * (rows * cols)
        for i, row in enumerate(data):
            for j, v in row.items():
                out[i * cols + j] = v
        return cls(rows, cols, tuple(out))

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def tolist(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def sparse_rows(self) -> list[dict[int, int]]:
        out = []
        for i in range(self.rows):
            base = i * self.cols
            out.append({j: v for j, v in enumerate(self.entries[base:base + self.cols]) if v})
        return out

    @property
    def T(self) -> IntMatrix:
        return self.transpose()

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        left = self.sparse_rows()
        right = other.sparse_rows()
        out = []
        for lrow in left:
            acc: dict[int, int] = {}
            for k, a in lrow.items():
                for j, b in right[k].items():
                    acc[j] = acc.get(j, 0) + a * b
            out.append(acc)
        return IntMatrix.from_sparse(self.rows, other.cols, out)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> IntMatrix:
        return IntMatrix(
            len(row_idx),
            len(col_idx),
            tuple(self.entries[i * self.cols + j] for i in row_idx for j in col_idx),
        )

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})" if self.rows else f"IntMatrix.zeros(0, {self.cols})"


@dataclass(frozen=True)
class SNFDecomposition:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular.

    ``diagonal`` lists the nonzero invariant factors only, so its length is
    the rank of ``M``.  ``V_inv`` is the exact inverse of ``V``; the homology
    code needs it to write vectors in the kernel basis.
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    V_inv: IntMatrix
    diagonal: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def _axpy(target: dict[int, int], source: dict[int, int], q: int) -> None:
    """target -= q * source, in place."""
    for c, v in source.items():
        nv = target.get(c, 0) - q * v
        if nv:
            target[c] = nv
        else:
            target.pop(c, None)


def _min_abs_entry(work: list[dict[int, int]]) -> tuple[int, int] | None:
    best = None
    best_key = None
    for i, row in enumerate(work):
        if not row:
            continue
        a, j = min((abs(v), c) for c, v in row.items())
        key = (a, i, j)
        if best_key is None or key < best_key:
            best_key, best = key, (i, j)
            if a == 1:
                break
    return best


def _reduce(m: IntMatrix, track_u: bool, track_v: bool):
    """Diagonalize ``m`` in place on sparse rows.

    Returns the pivots ``(row, col, value)`` in selection order together with
    the accumulated row transform (as rows) and column transform (as columns,
    plus the inverse as rows).
    """
    nr, nc = m.rows, m.cols
    work = m.sparse_rows()
    U = [{i: 1} for i in range(nr)] if track_u else None
    Vcols = [{j: 1} for j in range(nc)] if track_v else None
    Vinv = [{j: 1} for j in range(nc)] if track_v else None
    pivots: list[tuple[int, int, int]] = []

    def col_op(c: int, j: int, q: int) -> None:
        # column c -= q * column j
        if track_v:
            _axpy(Vcols[c], Vcols[j], q)
            _axpy(Vinv[j], Vinv[c], -q)

    while True:
        found = _min_abs_entry(work)
        if found is None:
            break
        i, j = found
        while True:
            d = work[i][j]
            # clear column j with row operations
            rest = []
            for k in range(nr):
                if k == i or j not in work[k]:
                    continue
                q = work[k][j] // d
                if q:
                    _axpy(work[k], work[i], q)
                    if track_u:
                        _axpy(U[k], U[i], q)
                if j in work[k]:
                    rest.append(k)
            if rest:
                i = min(rest + [i], key=lambda k: (abs(work[k][j]), k))
                continue
            # clear row i with column operations; column j is zero off the pivot
            row = work[i]
            leftover = []
            for c in sorted(row):
                if c == j:
                    continue
                q = row[c] // d
                if q:
                    nv = row[c] - q * d
                    if nv:
                        row[c] = nv
                    else:
                        del row[c]
                    col_op(c, j, q)
                if c in row:
                    leftover.append(c)
            if leftover:
                j = min(leftover + [j], key=lambda c: (abs(row[c]), c))
                continue
            if abs(d) != 1:
                bad = None
                for k, other in enumerate(work):
                    if k == i:
                        continue
                    for c, v in other.items():
                        if v % d:
                            bad = k
                            break
                    if bad is not None:
                        break
                if bad is not None:
                    _axpy(work[i], work[bad], -1)
                    if track_u:
                        _axpy(U[i], U[bad], -1)
                    continue
            break
        d = work[i].pop(j)
        if d < 0:
            d = -d
            if track_u:
                U[i] = {c: -v for c, v in U[i].items()}
        pivots.append((i, j, d))
    return pivots, U, Vcols, Vinv


def snf(m: IntMatrix) -> SNFDecomposition:
    """Smith normal form with unimodular transforms.

    Pivot choice is the nonzero entry of least absolute value, ties broken
    by lowest row, then lowest column.
    """
    pivots, U, Vcols, Vinv = _reduce(m, track_u=True, track_v=True)
    prow = [p[0] for p in pivots]
    pcol = [p[1] for p in pivots]
    taken_r, taken_c = set(prow), set(pcol)
    row_order = prow + [i for i in range(m.rows) if i not in taken_r]
    col_order = pcol + [j for j in range(m.cols) if j not in taken_c]

    U_mat = IntMatrix.from_sparse(m.rows, m.rows, [U[i] for i in row_order])
    V_mat = IntMatrix.from_sparse(m.cols, m.cols, [Vcols[j] for j in col_order]).transpose()
    V_inv = IntMatrix.from_sparse(m.cols, m.cols, [Vinv[j] for j in col_order])
    diag = tuple(p[2] for p in pivots)
    D = IntMatrix.from_sparse(m.rows, m.cols, [{t: d} for t, d in enumerate(diag)] + [{}] * (m.rows - len(diag)))
    return SNFDecomposition(U_mat, D, V_mat, V_inv, diag)


def invariant_factors(m: IntMatrix) -> tuple[int, ...]:
    """Nonzero SNF diagonal of ``m`` (no transforms tracked)."""
    pivots, _, _, _ = _reduce(m, track_u=False, track_v=False)
    return tuple(p[2] for p in pivots)


def rank(m: IntMatrix) -> int:
    return len(invariant_factors(m))


def kernel_rank(m: IntMatrix) -> int:
    return m.cols - rank(m)


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Columns form a basis of the integer kernel of ``m`` (a saturated lattice)."""
    dec = snf(m)
    r = dec.rank
    return dec.V.submatrix(range(m.cols), range(r, m.cols))


def cokernel_structure(m: IntMatrix) -> tuple[int, list[int]]:
    """Structure of ``Z^rows / (column span of m)``.

    Returns ``(free_rank, torsion)`` with torsion the invariant factors > 1.
    To quotient by a row span instead, pass the transpose.
    """
    diag = invariant_factors(m)
    return m.rows - len(diag), [d for d in diag if d > 1]
