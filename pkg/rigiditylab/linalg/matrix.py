"""
Exact matrices over Q or Q(i) and the linear-algebra kernel.

Every rank, nullspace and inertia decision in the package goes through this
module; no floating point is involved.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from rigiditylab.core.exceptions import (
    DimensionMismatch,
    NotReal,
    NotSymmetric,
    SingularMatrix,
)
from rigiditylab.linalg.scalars import (
    GaussianRational,
    Scalar,
    denominator_lcm,
    is_real_scalar,
    real_value,
    to_exact,
)

logger = logging.getLogger(__name__)

Vector = Tuple[Scalar, ...]


def _normalize_entries(values: Iterable) -> Tuple[Scalar, ...]:
    entries = tuple(to_exact(v) for v in values)
    if any(isinstance(e, GaussianRational) for e in entries):
        return tuple(
            e if isinstance(e, GaussianRational) else GaussianRational(e, 0)
            for e in entries
        )
    return entries


class ExactMatrix:
    """Immutable row-major matrix with entries of a single field kind."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = _normalize_entries(entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, cols or 0, ())
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), width, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "ExactMatrix":
        if not columns:
            return cls(rows or 0, 0, ())
        return cls.from_rows(columns).transpose()

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values: Sequence) -> "ExactMatrix":
        n = len(values)
        entries = [Fraction(0)] * (n * n)
        for i, v in enumerate(values):
            entries[i * n + i] = v
        return cls(n, n, entries)

    # -- access -------------------------------------------------------------

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def field(self) -> str:
        if self.entries and isinstance(self.entries[0], GaussianRational):
            return "gaussian"
        return "rational"

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_real(self) -> bool:
        return all(is_real_scalar(e) for e in self.entries)

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        n = self.rows
        return all(self[i, j] == self[j, i] for i in range(n) for j in range(i + 1, n))

    # -- algebra ------------------------------------------------------------

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols, self.rows,
            [self[i, j] for j in range(self.cols) for i in range(self.rows)],
        )

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def conjugate(self) -> "ExactMatrix":
        if self.field == "rational":
            return self
        return ExactMatrix(self.rows, self.cols, [e.conjugate() for e in self.entries])

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return ExactMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return ExactMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, factor) -> "ExactMatrix":
        factor = to_exact(factor)
        return ExactMatrix(self.rows, self.cols, [factor * a for a in self.entries])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        other_cols = [other.column(j) for j in range(other.cols)]
        for i in range(self.rows):
            r = self.row(i)
            for c in other_cols:
                out.append(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)))
        return ExactMatrix(self.rows, other.cols, out)

    def apply(self, vector: Sequence) -> Vector:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vector)} for {self.cols} columns")
        vector = [to_exact(x) for x in vector]
        return tuple(
            sum((a * b for a, b in zip(self.row(i), vector) if a and b), Fraction(0))
            for i in range(self.rows)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"ExactMatrix({self.rows}x{self.cols}: [{body}])"


@dataclass(frozen=True)
class InertiaSignature:
    """Counts of negative, positive and zero directions of a real symmetric form."""

    neg: int
    pos: int
    zero: int

    @property
    def rank(self) -> int:
        return self.neg + self.pos

    def as_tuple(self) -> Tuple[int, int, int]:
        return self.neg, self.pos, self.zero

    def to_dict(self) -> dict:
        return {"neg": self.neg, "pos": self.pos, "zero": self.zero}


# ---------------------------------------------------------------------------
# Fraction-free elimination
# ---------------------------------------------------------------------------

def _integral_rows(m: ExactMatrix) -> List[List[Scalar]]:
    """Rows scaled by the lcm of their denominators (same row space)."""
    rows = []
    for i in range(m.rows):
        row = list(m.row(i))
        scale = math.lcm(*(denominator_lcm(x) for x in row)) if row else 1
        rows.append([x * scale for x in row] if scale != 1 else row)
    return rows


def _bareiss_echelon(rows: List[List[Scalar]], ncols: int) -> List[int]:
    """In-place Bareiss elimination to row echelon form; returns pivot columns.

    Entries stay integral (they are minors of the input), so every division
    below is exact.
    """
    nrows = len(rows)
    pivots: List[int] = []
    prev = Fraction(1)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        if pivot != r:
            rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        for i in range(r + 1, nrows):
            lead = rows[i][c]
            row_i = rows[i]
            row_r = rows[r]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - lead * row_r[j]) / prev
            row_i[c] = Fraction(0)
        prev = p
        pivots.append(c)
        r += 1
    return pivots


def rank(m: ExactMatrix) -> int:
    """Exact rank over the matrix's field (fraction-free Gaussian elimination)."""
    if m.rows == 0 or m.cols == 0:
        return 0
    rows = _integral_rows(m)
    return len(_bareiss_echelon(rows, m.cols))


def nullspace_basis(m: ExactMatrix) -> List[Vector]:
    """Basis of {x : m x = 0}; its size is cols - rank(m)."""
    if m.cols == 0:
        return []
    if m.rows == 0:
        return [tuple(Fraction(int(i == j)) for i in range(m.cols)) for j in range(m.cols)]
    rows = _integral_rows(m)
    pivots = _bareiss_echelon(rows, m.cols)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    zero = GaussianRational(0) if m.field == "gaussian" else Fraction(0)
    basis: List[Vector] = []
    for f in free:
        x = [zero] * m.cols
        x[f] = zero + 1
        for k in range(len(pivots) - 1, -1, -1):
            c = pivots[k]
            row = rows[k]
            acc = sum((row[j] * x[j] for j in range(c + 1, m.cols) if row[j] and x[j]), zero)
            x[c] = -acc / row[c]
        basis.append(_primitive(x))
    return basis


def _primitive(x: List[Scalar]) -> Vector:
    """Scale a rational vector to integer entries; Gaussian vectors pass through."""
    if any(isinstance(e, GaussianRational) for e in x):
        return tuple(x)
    scale = math.lcm(*(Fraction(e).denominator for e in x))
    ints = [int(e * scale) for e in x]
    g = math.gcd(*ints)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(Fraction(v) for v in ints)


def inverse(m: ExactMatrix) -> ExactMatrix:
    """Exact inverse by Gauss-Jordan elimination."""
    if not m.is_square:
        raise DimensionMismatch("only square matrices have inverses")
    n = m.rows
    aug = [list(m.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if aug[i][c]), None)
        if pivot is None:
            raise SingularMatrix("matrix is singular")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                factor = aug[i][c]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[c])]
    return ExactMatrix.from_rows([row[n:] for row in aug]) if n else ExactMatrix(0, 0, ())


# ---------------------------------------------------------------------------
# Symmetric forms
# ---------------------------------------------------------------------------

def _require_real_symmetric(m: ExactMatrix) -> List[List[Fraction]]:
    if not m.is_square or not m.is_symmetric():
        raise NotSymmetric("matrix is not symmetric")
    if not m.is_real():
        raise NotReal("matrix has entries with nonzero imaginary part")
    return [[real_value(x) for x in m.row(i)] for i in range(m.rows)]


def ldl_terms(m: ExactMatrix) -> List[Tuple[Fraction, Tuple[Fraction, ...]]]:
    """Decompose a real symmetric m as sum_j d_j b_j b_j^T.

    Symmetric pivoting: a nonzero diagonal entry gives a 1x1 pivot; when the
    remaining diagonal is zero, an off-diagonal entry a gives a 2x2 pivot split
    into the terms 1/(2a) (r_i + r_j)(r_i + r_j)^T and -1/(2a) (r_i - r_j)(...)^T.
    The b_j are linearly independent and their count is rank(m).
    """
    a = _require_real_symmetric(m)
    n = len(a)
    terms: List[Tuple[Fraction, Tuple[Fraction, ...]]] = []

    def subtract(d: Fraction, b: List[Fraction]) -> None:
        for i in range(n):
            if b[i]:
                for j in range(n):
                    if b[j]:
                        a[i][j] -= d * b[i] * b[j]

    while True:
        k = next((i for i in range(n) if a[i][i] != 0), None)
        if k is not None:
            d = a[k][k]
            b = [x / d for x in a[k]]
            terms.append((d, tuple(b)))
            subtract(d, b)
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
        if pair is None:
            break
        i, j = pair
        off = a[i][j]
        ri, rj = list(a[i]), list(a[j])
        plus = [x + y for x, y in zip(ri, rj)]
        minus = [x - y for x, y in zip(ri, rj)]
        for d, b in ((1 / (2 * off), plus), (-1 / (2 * off), minus)):
            terms.append((d, tuple(b)))
            subtract(d, b)
    return terms


def inertia(m: ExactMatrix) -> InertiaSignature:
    """(neg, pos, zero) of a real symmetric matrix, exactly (Sylvester)."""
    terms = ldl_terms(m)
    neg = sum(1 for d, _ in terms if d < 0)
    pos = sum(1 for d, _ in terms if d > 0)
    return InertiaSignature(neg=neg, pos=pos, zero=m.rows - neg - pos)


def signature_matrix(dim: int, s: int) -> ExactMatrix:
    """S = diag(-1 x s, +1 x (dim - s))."""
    return ExactMatrix.diagonal([-1] * s + [1] * (dim - s))
