"""Congruence and strong congruence of configurations."""
import logging
from dataclasses import dataclass
from typing import List

from rigiditylab.core.exceptions import DegenerateSpan, LengthMismatch, NotCongruent
from rigiditylab.frameworks.measurements import difference
from rigiditylab.frameworks.models import Configuration, Point, SpaceDescriptor
from rigiditylab.gram.gmatrix import gram
from rigiditylab.linalg.matrix import ExactMatrix, inverse, rank

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StrongCongruence:
    """q(t) = orthogonal @ p(t) + translation for every vertex t."""

    orthogonal: ExactMatrix
    translation: Point

    def apply(self, x: Point) -> Point:
        return tuple(a + b for a, b in zip(self.orthogonal.apply(x), self.translation))


def is_congruent(p: Configuration, q: Configuration, space: SpaceDescriptor) -> bool:
    if len(p) != len(q):
        raise LengthMismatch(f"configurations have {len(p)} and {len(q)} points")
    if len(p) <= 1:
        return True
    return gram(p, space).matrix == gram(q, space).matrix


def _relative_vectors(p: Configuration) -> List[Point]:
    return [difference(x, p[0]) for x in p.points[1:]]


def affine_span_dim(p: Configuration) -> int:
    """Rank of the vectors p(t) - p(0)."""
    vectors = _relative_vectors(p) if len(p) else []
    if not vectors or not p.dim:
        return 0
    return rank(ExactMatrix.from_rows(vectors))


def _spanning_vertices(p: Configuration, d: int) -> List[int]:
    """First d vertices (after 0) whose relative vectors are independent."""
    chosen: List[int] = []
    rows: List[Point] = []
    for t, vec in enumerate(_relative_vectors(p), start=1):
        if rank(ExactMatrix.from_rows(rows + [vec])) > len(rows):
            chosen.append(t)
            rows.append(vec)
            if len(chosen) == d:
                break
    return chosen


def strong_congruence_witness(p: Configuration, q: Configuration,
                              space: SpaceDescriptor) -> StrongCongruence:
    """Solve for (O, tau) on an affinely independent vertex basis, then verify every vertex."""
    if not is_congruent(p, q, space):
        raise NotCongruent("configurations are not congruent")
    d = space.ambient_dim
    basis = _spanning_vertices(p, d)
    if len(basis) < d:
        raise DegenerateSpan(f"affine span has dimension {len(basis)} < {d}")

    p_cols = ExactMatrix.from_columns([difference(p[t], p[0]) for t in basis])
    q_cols = ExactMatrix.from_columns([difference(q[t], q[0]) for t in basis])
    orthogonal = q_cols @ inverse(p_cols)
    translation = tuple(a - b for a, b in zip(q[0], orthogonal.apply(p[0])))
    witness = StrongCongruence(orthogonal, translation)

    s_mat = space.signature_matrix()
    if orthogonal.T @ s_mat @ orthogonal != s_mat:
        raise NotCongruent("recovered map does not preserve the bilinear form")
    for t in range(len(p)):
        if witness.apply(p[t]) != tuple(q[t]):
            raise NotCongruent(f"recovered map sends vertex {t} to the wrong point")
    logger.debug("strong congruence recovered on basis vertices %s", basis)
    return witness
