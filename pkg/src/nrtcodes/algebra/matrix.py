"""Dense matrices over Q(sqrt 2)."""

from __future__ import annotations

from ..errors import DimensionError
from .quad import ONE, ZERO, Quad


class DenseMatrix:
    """An immutable rows x cols matrix with :class:`Quad` entries."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, entries):
        rows = tuple(tuple(Quad.coerce(x) for x in row) for row in entries)
        if not rows:
            raise DimensionError("empty matrix")
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise DimensionError("ragged matrix rows")
        self.entries = rows
        self.rows = len(rows)
        self.cols = cols
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> DenseMatrix:
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, values) -> DenseMatrix:
        values = list(values)
        n = len(values)
        return cls([[values[i] if i == j else ZERO for j in range(n)]
                    for i in range(n)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def __matmul__(self, other: DenseMatrix) -> DenseMatrix:
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.entries))
        out = []
        for r in self.entries:
            line = []
            for c in cols:
                acc = ZERO
                for x, y in zip(r, c):
                    if x and y:
                        acc = acc + x * y
                line.append(acc)
            out.append(line)
        return DenseMatrix(out)

    def __add__(self, other: DenseMatrix) -> DenseMatrix:
        if self.shape != other.shape:
            raise DimensionError("shape mismatch in addition")
        return DenseMatrix([[x + y for x, y in zip(r, s)]
                            for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: DenseMatrix) -> DenseMatrix:
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> DenseMatrix:
        c = Quad.coerce(c)
        return DenseMatrix([[c * x for x in r] for r in self.entries])

    def transpose(self) -> DenseMatrix:
        return DenseMatrix(list(zip(*self.entries)))

    def trace(self) -> Quad:
        if not self.is_square():
            raise DimensionError("trace of a non-square matrix")
        acc = ZERO
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def is_zero(self) -> bool:
        return not any(x for r in self.entries for x in r)

    def det(self) -> Quad:
        """Determinant by Gaussian elimination (exact field arithmetic)."""
        if not self.is_square():
            raise DimensionError("determinant of a non-square matrix")
        M = [list(r) for r in self.entries]
        n = self.rows
        det = ONE
        for c in range(n):
            piv = next((i for i in range(c, n) if M[i][c]), None)
            if piv is None:
                return ZERO
            if piv != c:
                M[c], M[piv] = M[piv], M[c]
                det = -det
            det = det * M[c][c]
            inv = M[c][c].inverse()
            for i in range(c + 1, n):
                if M[i][c]:
                    f = M[i][c] * inv
                    M[i] = [a - f * b for a, b in zip(M[i], M[c])]
        return det

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.entries)
        return self._hash

    def to_lists(self):
        return [[str(x) for x in r] for r in self.entries]

    def __repr__(self):
        return f"DenseMatrix({self.to_lists()!r})"

    def __str__(self):
        cells = self.to_lists()
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]"
                         for r in cells)


def rank_quad(rows) -> int:
    """Rank over Q(sqrt2) of a list of rows of Quad."""
    M = [list(r) for r in rows]
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = M[r][c].inverse()
        for i in range(r + 1, len(M)):
            if M[i][c]:
                f = M[i][c] * inv
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return r


def rref_quad(rows):
    """Reduced row-echelon form over Q(sqrt2); returns (nonzero rows, pivots)."""
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = M[r][c].inverse()
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def solve_quad(columns, target):
    """Solve ``sum_j x_j * columns[j] = target`` over Q(sqrt2).

    Returns one solution (free variables set to zero) or ``None``.
    """
    m = len(target)
    ncol = len(columns)
    aug = [[columns[j][i] for j in range(ncol)] + [target[i]] for i in range(m)]
    R, pivots = rref_quad(aug)
    if ncol in pivots:
        return None
    x = [ZERO] * ncol
    for row, pc in zip(R, pivots):
        x[pc] = row[ncol]
    return x
