"""Squared-length measurements and framework equivalence."""
from fractions import Fraction
from typing import List, Sequence

from rigiditylab.core.exceptions import (
    DimensionMismatch,
    GraphMismatch,
    SpaceMismatch,
    UnsupportedSpace,
)
from rigiditylab.frameworks.models import Framework, SpaceDescriptor, SpaceKind
from rigiditylab.linalg.scalars import Scalar


def bilinear(space: SpaceDescriptor, x: Sequence[Scalar], y: Sequence[Scalar]) -> Scalar:
    """beta(x, y) = x^T S y, with no conjugation in complex space."""
    signs = space.metric_signs
    if len(x) != len(signs) or len(y) != len(signs):
        raise DimensionMismatch(
            f"vectors of length {len(x)} and {len(y)} in ambient dimension {len(signs)}"
        )
    total = Fraction(0)
    for sgn, a, b in zip(signs, x, y):
        total = total + a * b if sgn > 0 else total - a * b
    return total


def squared_length(space: SpaceDescriptor, w: Sequence[Scalar]) -> Scalar:
    if space.kind is SpaceKind.HYPERBOLIC:
        raise UnsupportedSpace("hyperbolic lengths come from inner products of locus points")
    return bilinear(space, w, w)


def difference(x: Sequence[Scalar], y: Sequence[Scalar]) -> tuple:
    return tuple(a - b for a, b in zip(x, y))


def edge_measurements(f: Framework) -> List[Scalar]:
    """Squared length of every edge, in graph edge order."""
    return [squared_length(f.space, difference(f[t], f[u])) for t, u in f.graph.edges]


def require_comparable(f: Framework, g: Framework) -> None:
    if f.graph != g.graph:
        raise GraphMismatch("frameworks are on different graphs")
    if f.space != g.space:
        raise SpaceMismatch(f"frameworks live in {f.space} and {g.space}")


def is_equivalent(f: Framework, g: Framework) -> bool:
    require_comparable(f, g)
    return edge_measurements(f) == edge_measurements(g)
