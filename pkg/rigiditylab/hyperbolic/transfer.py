"""
Moving frameworks between H^d, M^(d+1) and E^(d+1) through coning.

Coned frameworks keep the cone vertex last. All predicates look at the
vectors w_t = p(t) - p(c) from the cone vertex c to the base vertices.
"""
import enum
import logging
from dataclasses import replace
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from rigiditylab.core.config import GenericityConfig, HyperbolicConfig
from rigiditylab.core.exceptions import (
    BaseRigidityError,
    Disconnected,
    DimensionMismatch,
    NoReflectableVertex,
    NonpositiveScale,
    NotEquivalent,
    NotSpiky,
    NotUpperConed,
    NotUpperCylindrical,
    SheetAmbiguous,
    ToleranceExceeded,
    UnsupportedSpace,
)
from rigiditylab.core.services.metrics import nongeneric_samples_total
from rigiditylab.frameworks.measurements import difference, is_equivalent
from rigiditylab.frameworks.models import Configuration, Framework, Graph, SpaceDescriptor, SpaceKind
from rigiditylab.hyperbolic.coning import ConedGraph, cone_graph
from rigiditylab.hyperbolic.hyperboloid import (
    HyperbolicPoint,
    hyperbolic_congruent,
    hyperbolic_equivalent,
    minkowski_inner,
)
from rigiditylab.linalg.sampling import random_rational_vector
from rigiditylab.pogorelov.builder import build_noncongruent_equivalent_pair
from rigiditylab.pogorelov.maps import pogorelov
from rigiditylab.pogorelov.pairs import FrameworkPair
from rigiditylab.rigidity.verdicts import GGRVerdict, Verdict, ggr_test, has_simplex_subgraph

logger = logging.getLogger(__name__)


class Sheet(str, enum.Enum):
    UPPER = "upper"
    LOWER = "lower"


def _cone_vectors(f: Framework) -> List[Tuple[Fraction, ...]]:
    ConedGraph.from_graph(f.graph)
    c = f.graph.v - 1
    return [difference(f[t], f[c]) for t in range(c)]


def _euclidean_norm(w: Sequence) -> Fraction:
    return sum((a * a for a in w), Fraction(0))


# -- predicates -------------------------------------------------------------

def is_spiky(f: Framework) -> bool:
    """Some base vertex at squared distance > 4 from the cone, every base edge shorter than 1/v."""
    vectors = _cone_vectors(f)
    v = len(vectors)
    if not v:
        return False
    if not any(_euclidean_norm(w) > 4 for w in vectors):
        return False
    limit = Fraction(1, v * v)
    base = ConedGraph.from_graph(f.graph).base
    return all(_euclidean_norm(difference(f[t], f[u])) < limit for t, u in base.edges)


def is_upper_cylindrical(f: Framework) -> bool:
    """w_t[0] > 1 and sum_{i >= 1} w_t[i]^2 < 1 for every base vertex."""
    return all(w[0] > 1 and _euclidean_norm(w[1:]) < 1 for w in _cone_vectors(f))


def is_upper_coned(f: Framework) -> bool:
    return all(minkowski_inner(w, w) < 0 and w[0] > 0 for w in _cone_vectors(f))


def is_lower_coned(f: Framework) -> bool:
    return all(minkowski_inner(w, w) < 0 and w[0] < 0 for w in _cone_vectors(f))


# -- H^d <-> M^(d+1) ----------------------------------------------------------

def cone_to_minkowski(f: Framework, scales: Optional[Sequence] = None,
                      offset: Optional[Sequence] = None, seed: Optional[int] = None,
                      bound: Optional[int] = None) -> Framework:
    """Base vertex t at scales[t] * (point on the ray of t) + offset; cone vertex at offset.

    The point is the locus point when it is rational and the stored ray otherwise;
    any point on the open positive ray gives the same rays back.

    Missing scales and offset are drawn from ``seed`` when given, and default to
    1 and 0 otherwise.
    """
    if f.space.kind is not SpaceKind.HYPERBOLIC:
        raise UnsupportedSpace(f"expected a hyperbolic framework, got {f.space.kind.value}")
    v, dim = f.graph.v, f.space.ambient_dim
    bound = bound or GenericityConfig.get_bound()
    if scales is None:
        if seed is None:
            scales = [Fraction(1)] * v
        else:
            scales = [2 + x for x in random_rational_vector(v, bound, seed, denominator=bound, stream=2)]
    if offset is None:
        offset = [Fraction(0)] * dim if seed is None else random_rational_vector(dim, bound, seed, stream=3)
    if len(scales) != v:
        raise DimensionMismatch(f"{len(scales)} scales for {v} vertices")
    if len(offset) != dim:
        raise DimensionMismatch(f"offset has {len(offset)} coordinates, expected {dim}")
    scales = [Fraction(a) for a in scales]
    if any(a <= 0 for a in scales):
        raise NonpositiveScale("every scale must be positive")

    points = []
    for t in range(v):
        ray = HyperbolicPoint.from_ray(f[t]).representative()
        points.append(tuple(scales[t] * x + o for x, o in zip(ray, offset)))
    points.append(tuple(Fraction(o) for o in offset))
    return Framework(cone_graph(f.graph).graph, Configuration(tuple(points)), SpaceDescriptor.minkowski(dim))


def minkowski_to_hyperbolic(f: Framework) -> Framework:
    """Rays w_t = p(t) - p(c) of an upper coned framework, as a hyperbolic framework on the base."""
    if f.space.kind is not SpaceKind.MINKOWSKI:
        raise UnsupportedSpace(f"expected a minkowski framework, got {f.space.kind.value}")
    if not is_upper_coned(f):
        raise NotUpperConed("every base vertex must lie in the upper cone of the cone vertex")
    base = ConedGraph.from_graph(f.graph).base
    rays = Configuration(tuple(_cone_vectors(f)))
    return Framework(base, rays, SpaceDescriptor.hyperbolic(f.space.d - 1))


# -- E^(d+1) pipeline -----------------------------------------------------------

def random_spiky_framework(base: Graph, d: int, seed: int, bound: Optional[int] = None) -> Framework:
    """Coned framework in E^(d+1): a tight cluster of base vertices at distance >= 3 from the cone."""
    bound = bound or GenericityConfig.get_bound()
    dim = d + 1
    direction = random_rational_vector(dim, bound, seed, denominator=bound)
    if not any(direction):
        direction = (Fraction(1),) + direction[1:]
    peak = max(abs(x) for x in direction)
    center = [3 * x / peak for x in direction]
    jitter = random_rational_vector(base.v * dim, bound, seed, denominator=4 * max(base.v, 1) * dim * bound,
                                    stream=1)
    points = [
        tuple(c + jitter[t * dim + i] for i, c in enumerate(center)) for t in range(base.v)
    ]
    points.append(tuple(Fraction(0) for _ in range(dim)))
    return Framework(cone_graph(base).graph, Configuration(tuple(points)), SpaceDescriptor.euclidean(dim))


def _float_distances(points: np.ndarray) -> np.ndarray:
    diff = points[:, None, :] - points[None, :, :]
    return np.einsum("ijk,ijk->ij", diff, diff)


def rotate_spiky_to_cylindrical(f: Framework, tol: Optional[float] = None) -> Framework:
    """Householder reflection about the cone vertex taking the farthest base vector to the +x_0 axis.

    The reflected coordinates are floats converted exactly to rationals; the
    result is congruent to the input up to ``tol`` on all squared distances.
    """
    tol = HyperbolicConfig.get_rotation_tol() if tol is None else tol
    if f.space.kind is not SpaceKind.EUCLIDEAN:
        raise UnsupportedSpace("the spiky rotation acts on euclidean frameworks")
    if not ConedGraph.from_graph(f.graph).base.is_connected():
        raise Disconnected("the base graph must be connected")
    if not is_spiky(f):
        raise NotSpiky("framework is not spiky")

    c = f.graph.v - 1
    original = np.array([[float(x) for x in p] for p in f.config])
    vectors = original - original[c]
    t0 = int(np.argmax(np.einsum("ij,ij->i", vectors[:c], vectors[:c])))
    axis = vectors[t0] / np.linalg.norm(vectors[t0])
    target = np.zeros_like(axis)
    target[0] = 1.0
    h = axis - target
    if np.linalg.norm(h) < 1e-15:
        # already on the axis
        if not is_upper_cylindrical(f):
            raise ToleranceExceeded("axis-aligned framework is not upper cylindrical")
        return f
    h = h / np.linalg.norm(h)
    rotated = vectors - 2.0 * np.outer(vectors @ h, h)
    moved = rotated + original[c]

    residual = float(np.max(np.abs(_float_distances(moved) - _float_distances(original))))
    if residual > tol:
        raise ToleranceExceeded(f"rotation residual {residual:.3e} exceeds {tol:.1e}")
    points = [tuple(Fraction(x) for x in row) for row in moved]
    points[c] = tuple(f[c])
    out = f.with_config(Configuration(tuple(points)))
    if not is_upper_cylindrical(out):
        raise ToleranceExceeded("rotated framework is not upper cylindrical")
    logger.debug("spiky rotation residual %.3e", residual)
    return out


def pogorelov_preserves_cylindrical(pair: FrameworkPair) -> Tuple[FrameworkPair, bool]:
    """s=1 Pogorelov image of an upper-cylindrical Euclidean pair, read in M^(d+1)."""
    if not (is_upper_cylindrical(pair.first) and is_upper_cylindrical(pair.second)):
        raise NotUpperCylindrical("both frameworks must be upper cylindrical")
    image = pogorelov(pair, 1).with_space(SpaceDescriptor.minkowski(pair.space.d))
    return image, is_upper_cylindrical(image.first) and is_upper_cylindrical(image.second)


def sheet_classification(pair: FrameworkPair) -> Sheet:
    """Which sheet of the cone the second framework occupies, given an upper-coned first."""
    if pair.space.kind is not SpaceKind.MINKOWSKI:
        raise UnsupportedSpace("sheet classification compares minkowski frameworks")
    if not is_upper_coned(pair.first):
        raise NotUpperConed("the reference framework must be upper coned")
    if not is_equivalent(pair.first, pair.second):
        raise NotEquivalent("sheet classification needs equivalent frameworks")
    if is_upper_coned(pair.second):
        return Sheet.UPPER
    if is_lower_coned(pair.second):
        return Sheet.LOWER
    nongeneric_samples_total.labels(operation="sheet_classification").inc()
    raise SheetAmbiguous("second framework is neither upper nor lower coned")


# -- verdicts -----------------------------------------------------------------

def cylindrical_coned_configuration(base: Graph, d: int, seed: int,
                                    bound: Optional[int] = None) -> Configuration:
    """Cone at the origin, base vertices at (5/2, 0, ..., 0) plus offsets of at most 1/20."""
    bound = bound or GenericityConfig.get_bound()
    dim = d + 1
    jitter = random_rational_vector(base.v * dim, bound, seed, denominator=20 * bound)
    anchor = [Fraction(5, 2)] + [Fraction(0)] * d
    points = [tuple(a + jitter[t * dim + i] for i, a in enumerate(anchor)) for t in range(base.v)]
    points.append(tuple(Fraction(0) for _ in range(dim)))
    return Configuration(tuple(points))


def hyperbolic_witness_pair(graph: Graph, d: int, seed: int,
                            bound: Optional[int] = None) -> FrameworkPair:
    """Equivalent, non-congruent pair in H^d built through E^(d+1) and M^(d+1)."""
    coned = cone_graph(graph)
    config = cylindrical_coned_configuration(graph, d, seed, bound)
    euclidean_pair = build_noncongruent_equivalent_pair(
        coned.graph, d + 1, config=config, candidates=range(graph.v)
    )
    minkowski_pair, cylindrical = pogorelov_preserves_cylindrical(euclidean_pair)
    if not cylindrical:
        raise NotUpperCylindrical("Pogorelov image left the cylinder")
    sheet_classification(minkowski_pair)
    first = minkowski_to_hyperbolic(minkowski_pair.first)
    second = minkowski_to_hyperbolic(minkowski_pair.second)
    return FrameworkPair(first, second)


def hyperbolic_ggr_verdict(graph: Graph, d: int, seed: Optional[int] = None, witness: bool = False,
                           bound: Optional[int] = None, retries: Optional[int] = None) -> GGRVerdict:
    """Graph-level verdict in H^d via the Euclidean one."""
    seed = GenericityConfig.get_seed() if seed is None else seed
    base = ggr_test(graph, d, "real", seed, bound, retries)
    verdict = replace(
        base,
        space=SpaceKind.HYPERBOLIC.value,
        s=None,
        transfer_derived=True,
        generic_property_certified=base.is_globally_rigid or has_simplex_subgraph(graph, d),
        notes=list(base.notes) + [f"transferred from euclidean d={d}"],
    )
    if witness and verdict.verdict is Verdict.GGF:
        try:
            pair = hyperbolic_witness_pair(graph, d, seed, bound)
        except NoReflectableVertex as e:
            verdict.notes.append(f"no constructive witness: {e}")
            return verdict
        except BaseRigidityError as e:
            logger.warning("hyperbolic witness construction failed: %s", e)
            verdict.notes.append(f"witness construction failed: {e}")
            return verdict
        if hyperbolic_equivalent(pair.first, pair.second) and not hyperbolic_congruent(
            pair.first.config, pair.second.config
        ):
            verdict.witness_pair = pair
        else:
            nongeneric_samples_total.labels(operation="hyperbolic_witness").inc()
            verdict.notes.append("witness pair failed verification; sample suspected non-generic")
    return verdict
