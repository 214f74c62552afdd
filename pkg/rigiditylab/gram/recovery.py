"""
Recovering configurations from real g-matrices, and signature bookkeeping.

A real symmetric M of rank d' <= d decomposes as M = sum_j D_j b_j b_j^T.
Coordinate j of vertex t is then sqrt(|D_j|) * b_j[t], multiplied by i when
D_j < 0. The square roots generally leave Q, so the configuration is kept in
scaled-row form: each row stores b_j exactly together with |D_j| and the
imaginary flag, and every check runs on that representation.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
import sympy

from rigiditylab.core.exceptions import RankExceedsDimension
from rigiditylab.frameworks.models import Configuration
from rigiditylab.gram.gmatrix import GMatrix, gmatrix_signature
from rigiditylab.linalg.matrix import ExactMatrix, InertiaSignature, ldl_terms
from rigiditylab.linalg.scalars import GaussianRational, rational_sqrt

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScaledRow:
    """One coordinate of every non-origin vertex: sqrt(squared_scale) * row, times i if imaginary."""

    row: Tuple[Fraction, ...]
    squared_scale: Fraction
    imaginary: bool

    @property
    def weight(self) -> Fraction:
        """Contribution sign times scale in the bilinear sum."""
        return -self.squared_scale if self.imaginary else self.squared_scale


@dataclass(frozen=True)
class ScaledConfiguration:
    """An s-valued complex configuration with vertex 0 at the origin."""

    rows: Tuple[ScaledRow, ...]
    vertex_count: int

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def s(self) -> int:
        return sum(1 for r in self.rows if r.imaginary)

    @property
    def is_s_valued(self) -> bool:
        """Imaginary coordinates come first, which is the s-valued shape."""
        flags = [r.imaginary for r in self.rows]
        return flags == sorted(flags, reverse=True)

    def gram(self) -> GMatrix:
        """Exact g-matrix: G[t][u] = sum_j weight_j * b_j[t] * b_j[u]."""
        n = self.vertex_count - 1
        entries = [Fraction(0)] * (n * n)
        for r in self.rows:
            w = r.weight
            if not w:
                continue
            for t in range(n):
                if r.row[t]:
                    for u in range(n):
                        entries[t * n + u] += w * r.row[t] * r.row[u]
        return GMatrix(ExactMatrix(n, n, entries))

    def to_configuration(self) -> Optional[Configuration]:
        """Exact complex configuration when every scale is a rational square."""
        roots = [rational_sqrt(r.squared_scale) for r in self.rows]
        if any(root is None for root in roots):
            return None
        points = [tuple(GaussianRational(0) for _ in self.rows)]
        for t in range(self.vertex_count - 1):
            coords = []
            for r, root in zip(self.rows, roots):
                value = root * r.row[t]
                coords.append(GaussianRational(0, value) if r.imaginary else GaussianRational(value, 0))
            points.append(tuple(coords))
        return Configuration(tuple(points))

    def to_sympy(self) -> sympy.Matrix:
        """v x d symbolic matrix with exact square roots."""
        rows = [[sympy.Integer(0)] * self.dim]
        for t in range(self.vertex_count - 1):
            coords = []
            for r in self.rows:
                root = sympy.sqrt(sympy.Rational(r.squared_scale.numerator, r.squared_scale.denominator))
                value = root * sympy.Rational(r.row[t].numerator, r.row[t].denominator)
                coords.append(sympy.I * value if r.imaginary else value)
            rows.append(coords)
        return sympy.Matrix(rows)

    def to_float(self) -> np.ndarray:
        out = np.zeros((self.vertex_count, self.dim), dtype=complex)
        for j, r in enumerate(self.rows):
            root = np.sqrt(float(r.squared_scale))
            column = np.array([float(x) for x in r.row]) * root
            out[1:, j] = 1j * column if r.imaginary else column
        return out


def configuration_from_real_gmatrix(m: GMatrix, d: int) -> ScaledConfiguration:
    """s-valued configuration p with gram(p) = m, where s is the negative inertia of m."""
    terms = ldl_terms(m.matrix)
    if len(terms) > d:
        raise RankExceedsDimension(f"g-matrix has rank {len(terms)} > dimension {d}")
    if len(terms) < d:
        logger.warning(
            "g-matrix has rank %d < %d; other signatures may share this congruence class",
            len(terms), d,
        )
    negative = [ScaledRow(b, -dj, True) for dj, b in terms if dj < 0]
    positive = [ScaledRow(b, dj, False) for dj, b in terms if dj > 0]
    padding = [
        ScaledRow(tuple(Fraction(0) for _ in range(m.side)), Fraction(0), False)
        for _ in range(d - len(terms))
    ]
    return ScaledConfiguration(tuple(negative + positive + padding), m.vertex_count)


@dataclass
class SignatureReport:
    expected: InertiaSignature
    checked: int = 0
    mismatches: List[dict] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "expected": self.expected.to_dict(),
            "checked": self.checked,
            "consistent": self.consistent,
            "mismatches": self.mismatches,
        }


def signature_consistency_check(ms: Sequence[GMatrix], expected: InertiaSignature) -> SignatureReport:
    """List every g-matrix whose inertia differs from the expected triple."""
    report = SignatureReport(expected=expected)
    for index, m in enumerate(ms):
        report.checked += 1
        if not m.is_real():
            report.mismatches.append({"index": index, "observed": None, "reason": "not real"})
            continue
        observed = gmatrix_signature(m)
        if observed != expected:
            report.mismatches.append(
                {"index": index, "observed": observed.to_dict(), "reason": "signature differs"}
            )
    return report


def nonreal_solutions_pair_up(ms: Sequence[GMatrix]) -> bool:
    """True when the non-real members are closed under entrywise conjugation."""
    nonreal = {m.matrix for m in ms if not m.is_real()}
    return all(m.conjugate() in nonreal for m in nonreal)
