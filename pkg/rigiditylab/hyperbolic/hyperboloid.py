"""
The hyperboloid model of H^d inside Minkowski space M^(d+1).

Points are positive rays x with <x, x>_M < 0 and x_0 > 0; the canonical
representative is the ray scaled onto the locus <x, x>_M = -1. Since
cosh dist(x, y) = -<x, y> / sqrt(<x, x><y, y>), two distances agree exactly
when the signs of the inner products agree and the cross-multiplied squares
agree, which keeps every comparison rational.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

import numpy as np

from rigiditylab.core.exceptions import (
    DimensionMismatch,
    GraphMismatch,
    LengthMismatch,
    NonCanonicalPoint,
    OutsideBall,
    UnsupportedSpace,
    ValidationError,
)
from rigiditylab.frameworks.models import Configuration, Framework, SpaceKind
from rigiditylab.linalg.scalars import rational_sqrt, real_value, to_exact


def minkowski_inner(x: Sequence, y: Sequence) -> Fraction:
    """-x_0 y_0 + sum_{i >= 1} x_i y_i."""
    if len(x) != len(y):
        raise DimensionMismatch(f"vectors of length {len(x)} and {len(y)}")
    if not x:
        return Fraction(0)
    x = [real_value(to_exact(a)) for a in x]
    y = [real_value(to_exact(b)) for b in y]
    return -x[0] * y[0] + sum((a * b for a, b in zip(x[1:], y[1:])), Fraction(0))


@dataclass(frozen=True)
class HyperbolicPoint:
    """A positive ray in the upper timelike cone; ``norm`` is -<ray, ray>_M."""

    ray: Tuple[Fraction, ...]
    norm: Fraction

    @classmethod
    def from_ray(cls, ray: Sequence) -> "HyperbolicPoint":
        ray = tuple(real_value(to_exact(a)) for a in ray)
        if len(ray) < 2:
            raise DimensionMismatch("hyperbolic rays need at least 2 coordinates")
        norm = -minkowski_inner(ray, ray)
        if norm <= 0 or ray[0] <= 0:
            raise ValidationError(f"{ray} is not in the upper timelike cone")
        return cls(ray, norm)

    @property
    def dim(self) -> int:
        return len(self.ray) - 1

    def canonical(self) -> Tuple[Fraction, ...]:
        """The representative on the locus; rational only when norm is a square."""
        root = rational_sqrt(self.norm)
        if root is None:
            raise NonCanonicalPoint(f"-<x,x> = {self.norm} is not a rational square")
        return tuple(a / root for a in self.ray)

    def representative(self) -> Tuple[Fraction, ...]:
        """An exact point on the ray: the locus point when norm is a square, else the ray itself."""
        root = rational_sqrt(self.norm)
        if root is None:
            return self.ray
        return tuple(a / root for a in self.ray)

    def to_float(self) -> np.ndarray:
        return np.array([float(a) for a in self.ray]) / math.sqrt(float(self.norm))


def hyperbolic_point_from_ball(u: Sequence, d: int) -> HyperbolicPoint:
    """x = ((1 + |u|^2) / (1 - |u|^2), 2u / (1 - |u|^2)), exactly on the locus."""
    if len(u) != d:
        raise DimensionMismatch(f"ball parameter has {len(u)} coordinates, expected {d}")
    u = [real_value(to_exact(a)) for a in u]
    n = sum((a * a for a in u), Fraction(0))
    if n >= 1:
        raise OutsideBall(f"|u|^2 = {n} is not below 1")
    scale = 1 / (1 - n)
    return HyperbolicPoint(tuple([(1 + n) * scale] + [2 * a * scale for a in u]), Fraction(1))


def _same_cosh(x, y, x2, y2) -> bool:
    a = -minkowski_inner(x, y)
    a2 = -minkowski_inner(x2, y2)
    if (a > 0) != (a2 > 0) or (a < 0) != (a2 < 0):
        return False
    b = minkowski_inner(x, x) * minkowski_inner(y, y)
    b2 = minkowski_inner(x2, x2) * minkowski_inner(y2, y2)
    return a * a * b2 == a2 * a2 * b


def _require_hyperbolic(f: Framework) -> None:
    if f.space.kind is not SpaceKind.HYPERBOLIC:
        raise UnsupportedSpace(f"expected a hyperbolic framework, got {f.space.kind.value}")
    for p in f.config:
        HyperbolicPoint.from_ray(p)


def hyperbolic_equivalent(f: Framework, g: Framework) -> bool:
    """Same hyperbolic distance on every edge."""
    if f.graph != g.graph:
        raise GraphMismatch("frameworks are on different graphs")
    _require_hyperbolic(f)
    _require_hyperbolic(g)
    return all(_same_cosh(f[t], f[u], g[t], g[u]) for t, u in f.graph.edges)


def hyperbolic_congruent(p: Configuration, q: Configuration) -> bool:
    """Same hyperbolic distance between every pair of vertices."""
    if len(p) != len(q):
        raise LengthMismatch(f"configurations have {len(p)} and {len(q)} points")
    n = len(p)
    return all(
        _same_cosh(p[t], p[u], q[t], q[u]) for t in range(n) for u in range(t + 1, n)
    )


def hyperbolic_distance(x: Sequence, y: Sequence) -> float:
    """arcosh(-<x^, y^>_M) of the normalized rays; float, for reporting."""
    a = HyperbolicPoint.from_ray(x).to_float()
    b = HyperbolicPoint.from_ray(y).to_float()
    value = -(-a[0] * b[0] + float(np.dot(a[1:], b[1:])))
    return float(np.arccosh(max(1.0, value)))
