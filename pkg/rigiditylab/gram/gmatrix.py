"""
The conjugation-free Gram matrix of a configuration.

For a configuration p with vertex 0 translated to the origin, G(p) is the
(v-1)x(v-1) matrix of bilinear products beta(p(t), p(u)), t, u >= 1. Two
configurations are congruent exactly when their g-matrices agree, and every
squared length can be read off G(p) through the pi maps.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from rigiditylab.core.exceptions import (
    DimensionMismatch,
    GraphMismatch,
    NotSymmetric,
    SameVertex,
    ValidationError,
)
from rigiditylab.frameworks.measurements import bilinear, difference
from rigiditylab.frameworks.models import Configuration, Graph, SpaceDescriptor
from rigiditylab.linalg.matrix import ExactMatrix, InertiaSignature, inertia
from rigiditylab.linalg.scalars import Scalar


@dataclass(frozen=True)
class GMatrix:
    matrix: ExactMatrix
    origin_vertex: int = 0

    def __post_init__(self):
        if self.origin_vertex != 0:
            raise ValidationError("g-matrices are always taken relative to vertex 0")
        if not self.matrix.is_square:
            raise DimensionMismatch(f"g-matrix must be square, got {self.matrix.shape}")
        if not self.matrix.is_symmetric():
            raise NotSymmetric("g-matrix must be symmetric")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "GMatrix":
        return cls(ExactMatrix.from_rows(rows, cols=len(rows)) if rows else ExactMatrix(0, 0, ()))

    @property
    def side(self) -> int:
        return self.matrix.rows

    @property
    def vertex_count(self) -> int:
        return self.side + 1

    def __getitem__(self, index) -> Scalar:
        return self.matrix[index]

    def is_real(self) -> bool:
        return self.matrix.is_real()

    def conjugate(self) -> "GMatrix":
        return GMatrix(self.matrix.conjugate())


def gram(p: Configuration, space: SpaceDescriptor) -> GMatrix:
    if len(p) < 1:
        raise ValidationError("a g-matrix needs at least one vertex")
    origin = p[0]
    vectors = [difference(x, origin) for x in p.points[1:]]
    n = len(vectors)
    entries: List[Scalar] = [Fraction(0)] * (n * n)
    for t in range(n):
        for u in range(t, n):
            value = bilinear(space, vectors[t], vectors[u])
            entries[t * n + u] = value
            entries[u * n + t] = value
    return GMatrix(ExactMatrix(n, n, entries))


def _check_vertex(m: GMatrix, t: int) -> None:
    if not 0 <= t < m.vertex_count:
        raise ValidationError(f"vertex {t} outside 0..{m.vertex_count - 1}")


def pi_tu(m: GMatrix, t: int, u: int) -> Scalar:
    """Squared length of {t, u} read from the g-matrix."""
    if t == u:
        raise SameVertex(f"pi_tu needs two distinct vertices, got {t} twice")
    _check_vertex(m, t)
    _check_vertex(m, u)
    if t == 0:
        return m[u - 1, u - 1]
    if u == 0:
        return m[t - 1, t - 1]
    return m[t - 1, t - 1] + m[u - 1, u - 1] - 2 * m[t - 1, u - 1]


def pi_K(m: GMatrix) -> ExactMatrix:
    """All-pairs squared-length matrix (v x v, zero diagonal)."""
    v = m.vertex_count
    entries: List[Scalar] = [Fraction(0)] * (v * v)
    for t in range(v):
        for u in range(t + 1, v):
            value = pi_tu(m, t, u)
            entries[t * v + u] = value
            entries[u * v + t] = value
    return ExactMatrix(v, v, entries)


def pi_E(m: GMatrix, graph: Graph) -> List[Scalar]:
    if graph.v != m.vertex_count:
        raise GraphMismatch(f"graph has {graph.v} vertices, g-matrix describes {m.vertex_count}")
    return [pi_tu(m, t, u) for t, u in graph.edges]


def gmatrix_signature(m: GMatrix) -> InertiaSignature:
    return inertia(m.matrix)
