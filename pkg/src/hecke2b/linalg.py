"""Sparse exact matrices over :class:`ScalarValue` with Gaussian elimination.

Generator matrices of calibrated modules have at most two nonzero entries per
row, so a dict-of-dicts layout keeps products cheap.  Dense elimination is
used only for kernels, ranks and inverses.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from .errors import DivisionByZero, SizeMismatch
from .scalar import ONE, ZERO, ScalarValue, coerce, to_complex

__all__ = ["Matrix", "kernel", "rank", "span_rank", "row_reduce"]


class Matrix:
    """An immutable-by-convention sparse matrix with exact entries."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Dict[int, Dict[int, ScalarValue]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: Dict[int, Dict[int, ScalarValue]] = {}
        if rows:
            for i, row in rows.items():
                clean = {j: coerce(v) for j, v in row.items() if v}
                if clean:
                    self.rows[i] = clean

    # -- constructors ---------------------------------------------------------
    @staticmethod
    def zeros(n: int, m: int | None = None) -> "Matrix":
        return Matrix(n, n if m is None else m)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix.scalar(n, ONE)

    @staticmethod
    def scalar(n: int, value) -> "Matrix":
        value = coerce(value)
        return Matrix(n, n, {i: {i: value} for i in range(n)})

    @staticmethod
    def diag(values: Sequence) -> "Matrix":
        return Matrix(len(values), len(values), {i: {i: v} for i, v in enumerate(values)})

    @staticmethod
    def from_dense(data: Sequence[Sequence]) -> "Matrix":
        n = len(data)
        m = len(data[0]) if n else 0
        return Matrix(n, m, {i: {j: v for j, v in enumerate(row)} for i, row in enumerate(data)})

    # -- access ---------------------------------------------------------------
    def __getitem__(self, ij: Tuple[int, int]) -> ScalarValue:
        i, j = ij
        return self.rows.get(i, {}).get(j, ZERO)

    def items(self) -> Iterable[Tuple[int, int, ScalarValue]]:
        for i in sorted(self.rows):
            row = self.rows[i]
            for j in sorted(row):
                yield i, j, row[j]

    def to_dense(self) -> List[List[ScalarValue]]:
        out = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for i, row in self.rows.items():
            for j, v in row.items():
                out[i][j] = v
        return out

    def to_numpy(self) -> np.ndarray:
        arr = np.zeros((self.nrows, self.ncols), dtype=complex)
        for i, row in self.rows.items():
            for j, v in row.items():
                arr[i, j] = to_complex(v)
        return arr

    def diagonal(self) -> List[ScalarValue]:
        return [self[i, i] for i in range(min(self.nrows, self.ncols))]

    def is_diagonal(self) -> bool:
        return all(set(row) <= {i} for i, row in self.rows.items())

    def is_zero(self) -> bool:
        return not self.rows

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    # -- arithmetic -----------------------------------------------------------
    def _check_same(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise SizeMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        rows = {i: dict(r) for i, r in self.rows.items()}
        for i, r in other.rows.items():
            target = rows.setdefault(i, {})
            for j, v in r.items():
                target[j] = target.get(j, ZERO) + v
        return Matrix(self.nrows, self.ncols, rows)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix(self.nrows, self.ncols, {i: {j: -v for j, v in r.items()} for i, r in self.rows.items()})

    def __mul__(self, s) -> "Matrix":
        s = coerce(s)
        if s is NotImplemented:
            return NotImplemented
        return Matrix(self.nrows, self.ncols, {i: {j: s * v for j, v in r.items()} for i, r in self.rows.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise SizeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        rows: Dict[int, Dict[int, ScalarValue]] = {}
        orows = other.rows
        for i, r in self.rows.items():
            acc: Dict[int, ScalarValue] = {}
            for l, a in r.items():
                orow = orows.get(l)
                if not orow:
                    continue
                for j, b in orow.items():
                    prod = a * b
                    prev = acc.get(j)
                    acc[j] = prod if prev is None else prev + prod
            if acc:
                rows[i] = acc
        return Matrix(self.nrows, other.ncols, rows)

    def __pow__(self, n: int) -> "Matrix":
        if n < 0:
            return self.inverse() ** (-n)
        result = Matrix.identity(self.nrows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    __hash__ = None  # type: ignore[assignment]

    def transpose(self) -> "Matrix":
        rows: Dict[int, Dict[int, ScalarValue]] = {}
        for i, r in self.rows.items():
            for j, v in r.items():
                rows.setdefault(j, {})[i] = v
        return Matrix(self.ncols, self.nrows, rows)

    def apply(self, vec: Sequence[ScalarValue]) -> List[ScalarValue]:
        out = [ZERO] * self.nrows
        for i, r in self.rows.items():
            acc = ZERO
            for j, v in r.items():
                if vec[j]:
                    acc = acc + v * vec[j]
            out[i] = acc
        return out

    def inverse(self) -> "Matrix":
        """Gauss-Jordan inverse; diagonal matrices take a fast path."""
        if self.nrows != self.ncols:
            raise SizeMismatch("inverse of a non-square matrix")
        n = self.nrows
        if self.is_diagonal():
            if len(self.rows) != n:
                raise DivisionByZero("singular diagonal matrix")
            return Matrix.diag([self[i, i].inv() for i in range(n)])
        aug = [row + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(self.to_dense())]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col]), None)
            if piv is None:
                raise DivisionByZero("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv_p = aug[col][col].inv()
            aug[col] = [x * inv_p for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return Matrix.from_dense([row[n:] for row in aug])

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols}, nnz={sum(len(r) for r in self.rows.values())})"


def row_reduce(rows: List[List[ScalarValue]]) -> Tuple[List[List[ScalarValue]], List[int]]:
    """Reduced row echelon form of a dense matrix; returns (rref, pivot columns)."""
    a = [list(r) for r in rows]
    if not a:
        return a, []
    m = len(a[0])
    pivots: List[int] = []
    r = 0
    for col in range(m):
        piv = next((i for i in range(r, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv_p = a[r][col].inv()
        a[r] = [x * inv_p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(m: Matrix) -> int:
    return len(row_reduce(m.to_dense())[1])


def span_rank(vectors: Sequence[Sequence[ScalarValue]]) -> int:
    return len(row_reduce([list(v) for v in vectors])[1]) if vectors else 0


def kernel(m: Matrix) -> List[List[ScalarValue]]:
    """A basis of the right null space {v : m v = 0}."""
    rref, pivots = row_reduce(m.to_dense())
    free = [j for j in range(m.ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * m.ncols
        v[f] = ONE
        for row, p in zip(rref, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis
