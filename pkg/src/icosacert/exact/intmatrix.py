"""Integer matrices and the Smith normal form."""

from __future__ import annotations

from typing import Iterable, Sequence


class IntMatrix:
    """Immutable matrix of Python integers.

    Zero-row or zero-column shapes are allowed; the shape is carried
    explicitly so that e.g. a map out of the trivial group still knows its
    target rank.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[int]], rows: int | None = None, cols: int | None = None):
        grid = tuple(tuple(int(v) for v in row) for row in entries)
        if rows is None:
            rows = len(grid)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        if rows == 0 or cols == 0:
            grid = tuple(() for _ in range(rows))
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise ValueError(f"entry grid does not match shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self.entries = grid

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None, cols: int | None = None) -> IntMatrix:
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        return cls(
            [[diag[i] if i == j and i < len(diag) else 0 for j in range(cols)] for i in range(rows)],
            rows,
            cols,
        )

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.entries[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> IntMatrix:
        return IntMatrix([self.column(j) for j in range(self.cols)], self.cols, self.rows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ocols = [other.column(j) for j in range(other.cols)]
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, c)) for c in ocols] for row in self.entries],
            self.rows,
            other.cols,
        )

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.entries)

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return IntMatrix(
            [a + b for a, b in zip(self.entries, other.entries)] if self.rows else [],
            self.rows,
            self.cols + other.cols,
        )

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    def is_diagonal(self) -> bool:
        return all(v == 0 for i, row in enumerate(self.entries) for j, v in enumerate(row) if i != j)

    def diagonal_entries(self) -> list[int]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def determinant(self) -> int:
        """Bareiss fraction-free elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(r) for r in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"IntMatrix({self.tolist()}, rows={self.rows}, cols={self.cols})"


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, D, V)`` with ``U @ m @ V == D``.

    U and V are unimodular, D is diagonal with non-negative entries and
    d1 | d2 | ... (zeros last).
    """
    rows, cols = m.rows, m.cols
    a = [list(r) for r in m.entries] if cols else [[] for _ in range(rows)]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        # row_dst += f * row_src
        if f:
            a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
            u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):
        if f:
            for row in a:
                row[dst] += f * row[src]
            for row in v:
                row[dst] += f * row[src]

    t = 0
    while t < min(rows, cols):
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        done = False
            if done:
                # pivot must divide the remaining block
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % a[t][t]),
                    None,
                )
                if bad is None:
                    break
                add_row(t, bad[0], 1)
                continue
            nz = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            nz += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, pi, pj = min(nz)
            swap_rows(t, pi)
            swap_cols(t, pj)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    return (
        IntMatrix(u, rows, rows),
        IntMatrix(a, rows, cols),
        IntMatrix(v, cols, cols),
    )


def invariant_factors_of(m: IntMatrix) -> list[int]:
    """Nonzero diagonal of the Smith form."""
    _, d, _ = smith_normal_form(m)
    return [x for x in d.diagonal_entries() if x]


def integer_kernel(m: IntMatrix) -> IntMatrix:
    """Columns form a Z-basis of {x in Z^cols : m x = 0}."""
    _, d, v = smith_normal_form(m)
    rank = sum(1 for x in d.diagonal_entries() if x)
    basis = [v.column(j) for j in range(rank, m.cols)]
    return IntMatrix([list(r) for r in zip(*basis)], m.cols, len(basis)) if basis else IntMatrix.zeros(m.cols, 0)


def unimodular_inverse(m: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular matrix by exact elimination."""
    n = m.rows
    if m.cols != n:
        raise ValueError("not square")
    from fractions import Fraction

    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m.entries)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = []
    for row in aug:
        vals = row[n:]
        if any(x.denominator != 1 for x in vals):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in vals])
    return IntMatrix(out, n, n)
