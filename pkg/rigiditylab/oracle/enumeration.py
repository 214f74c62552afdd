"""
Realization enumeration at desk scale.

In d=1 the fiber of a measurement vector is finite and small, so every sign
choice along a spanning tree is tried and kept when the remaining edges close
up exactly. In d=2 the fiber is probed numerically: many seeded starts of a
Levenberg-Marquardt solve on the squared-length system, with the gauge pinned
and solutions merged by g-matrix distance. The 2D count is a lower bound.
"""
import logging
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from scipy.optimize import least_squares

from rigiditylab.core.config import GenericityConfig, OracleConfig
from rigiditylab.core.exceptions import (
    DimensionMismatch,
    Disconnected,
    LengthMismatch,
    NoConvergence,
    NotLocallyRigid,
)
from rigiditylab.core.services.metrics import oracle_starts_total
from rigiditylab.frameworks.measurements import edge_measurements
from rigiditylab.frameworks.models import Configuration, Framework, Graph, SpaceDescriptor
from rigiditylab.frameworks.sampling import random_configuration
from rigiditylab.gram.gmatrix import GMatrix, gram
from rigiditylab.linalg.sampling import rng_for
from rigiditylab.linalg.scalars import real_value
from rigiditylab.oracle.models import Exactness, RealizationSet
from rigiditylab.rigidity.matrices import is_locally_rigid_generic

logger = logging.getLogger(__name__)

START_STREAM = 4

LINE = SpaceDescriptor.euclidean(1)
PLANE = SpaceDescriptor.euclidean(2)


# ============================================================================
# Exact enumeration on the line
# ============================================================================

def _placement_order(graph: Graph) -> List[Tuple[int, int]]:
    return list(nx.bfs_edges(graph.to_networkx(), 0))


def _sign_assignments(tree: List[Tuple[int, int]], lengths: Dict[Tuple[int, int], Fraction],
                      checks: Dict[int, List[Tuple[int, Fraction]]],
                      positions: Dict[int, Fraction], k: int = 0) -> Iterator[Dict[int, Fraction]]:
    if k == len(tree):
        yield dict(positions)
        return
    parent, child = tree[k]
    # the first tree edge keeps its sign: the global flip is a congruence
    for sign in ((1,) if k == 0 else (1, -1)):
        x = positions[parent] + sign * lengths[(parent, child)]
        positions[child] = x
        if all((x - positions[w]) ** 2 == m for w, m in checks[child] if w in positions):
            yield from _sign_assignments(tree, lengths, checks, positions, k + 1)
        del positions[child]


def enumerate_1d(graph: Graph, base_config: Configuration) -> RealizationSet:
    """Every non-congruent realization on the line of the measurements of base_config."""
    if len(base_config) != graph.v:
        raise LengthMismatch(f"configuration has {len(base_config)} points for {graph.v} vertices")
    if base_config.dim != 1:
        raise DimensionMismatch(f"expected a 1-dimensional configuration, got dimension {base_config.dim}")
    if not graph.is_connected():
        raise Disconnected("exact enumeration needs a connected graph")

    measurements = edge_measurements(Framework(graph, base_config, LINE))
    x = [real_value(p[0]) for p in base_config]
    tree = _placement_order(graph)
    lengths = {(t, u): abs(x[u] - x[t]) for t, u in tree}
    checks: Dict[int, List[Tuple[int, Fraction]]] = {t: [] for t in range(graph.v)}
    for (t, u), m in zip(graph.edges, measurements):
        checks[t].append((u, m))
        checks[u].append((t, m))

    seen = set()
    representatives: List[Configuration] = []
    for placed in _sign_assignments(tree, lengths, checks, {0: Fraction(0)}):
        config = Configuration.of([(placed[t],) for t in range(graph.v)])
        key = gram(config, LINE)
        if key in seen:
            continue
        seen.add(key)
        representatives.append(config)

    logger.debug("1D enumeration on %r: %d classes", graph, len(representatives))
    return RealizationSet(
        graph=graph,
        d=1,
        measurements=list(measurements),
        representatives=representatives,
        exactness=Exactness.EXACT,
    )


def exact_gmatrices(rs: RealizationSet) -> List[GMatrix]:
    return [gram(config, SpaceDescriptor.euclidean(rs.d)) for config in rs.representatives]


# ============================================================================
# Heuristic enumeration in the plane
# ============================================================================

def _unpack(z: np.ndarray, v: int) -> np.ndarray:
    """Vertex 0 at the origin, vertex 1 at (z[0], 0), the rest free."""
    points = np.zeros((v, 2))
    if v > 1:
        points[1, 0] = z[0]
        points[2:] = z[1:].reshape(v - 2, 2)
    return points


def _residuals(z: np.ndarray, v: int, edges: np.ndarray, targets: np.ndarray, scale: float) -> np.ndarray:
    points = _unpack(z, v)
    delta = points[edges[:, 0]] - points[edges[:, 1]]
    return (np.einsum("ij,ij->i", delta, delta) - targets) / scale


def _fix_reflection(points: np.ndarray) -> np.ndarray:
    points = points.copy()
    if points.shape[0] > 1 and points[1, 0] < 0:
        points[:, 0] = -points[:, 0]
    off_axis = np.flatnonzero(np.abs(points[:, 1]) > 1e-12)
    if off_axis.size and points[off_axis[0], 1] < 0:
        points[:, 1] = -points[:, 1]
    return points


def float_gmatrix(points: np.ndarray) -> np.ndarray:
    shifted = np.asarray(points, dtype=float) - np.asarray(points, dtype=float)[0]
    return shifted[1:] @ shifted[1:].T


def gmatrix_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Frobenius distance relative to the larger of the two norms."""
    norm = max(np.linalg.norm(a), np.linalg.norm(b), 1e-300)
    return float(np.linalg.norm(a - b) / norm)


def _targets(graph: Graph, measurements: Optional[Sequence], seed: int) -> List:
    if measurements is None:
        config = random_configuration(graph.v, PLANE, seed)
        return list(edge_measurements(Framework(graph, config, PLANE)))
    if len(measurements) != graph.e:
        raise LengthMismatch(f"{len(measurements)} measurements for {graph.e} edges")
    return list(measurements)


def enumerate_2d_heuristic(graph: Graph, measurements: Optional[Sequence] = None,
                           n_starts: Optional[int] = None, seed: Optional[int] = None,
                           dedup_tol: Optional[float] = None,
                           residual_tol: Optional[float] = None) -> RealizationSet:
    """
    Multi-start search for the plane realizations of the given squared lengths.

    Without measurements, they are taken from a generic configuration drawn
    with the seed. Starts whose relative residual stays above residual_tol
    are counted as rejected; the run fails only when no start converges.
    """
    seed = GenericityConfig.get_seed() if seed is None else seed
    n_starts = n_starts or OracleConfig.get_starts()
    dedup_tol = dedup_tol or OracleConfig.get_dedup_tol()
    residual_tol = residual_tol or OracleConfig.get_residual_tol()

    if not is_locally_rigid_generic(graph, PLANE, seed):
        raise NotLocallyRigid(f"{graph!r} is not generically locally rigid in the plane")
    targets = _targets(graph, measurements, seed)
    if graph.v < 2:
        return RealizationSet(graph, 2, targets, [((0.0, 0.0),)] if graph.v else [],
                              Exactness.HEURISTIC, 0.0, n_starts, n_starts)

    values = np.array([float(real_value(m)) for m in targets])
    edges = np.array(graph.edges, dtype=int)
    scale = float(np.mean(np.abs(values))) or 1.0
    spread = np.sqrt(scale)
    n = 2 * graph.v - 3
    rng = rng_for(seed, START_STREAM)

    solutions: List[Tuple[np.ndarray, float]] = []
    for _ in range(n_starts):
        z0 = rng.standard_normal(n) * spread
        result = least_squares(
            _residuals, z0, method="lm", args=(graph.v, edges, values, scale),
            xtol=1e-15, ftol=1e-15, gtol=1e-15,
        )
        residual = float(np.max(np.abs(result.fun)))
        if residual > residual_tol:
            oracle_starts_total.labels(status="rejected").inc()
            continue
        oracle_starts_total.labels(status="converged").inc()
        solutions.append((_fix_reflection(_unpack(result.x, graph.v)), residual))

    if not solutions:
        raise NoConvergence(f"none of {n_starts} starts reached residual {residual_tol}")
    if len(solutions) < n_starts:
        logger.warning("%d of %d starts did not converge", n_starts - len(solutions), n_starts)

    keyed = [(tuple(np.round(float_gmatrix(p).ravel() / scale, 8)), p, r) for p, r in solutions]
    keyed.sort(key=lambda item: item[0])
    kept: List[Tuple[np.ndarray, np.ndarray, float]] = []
    for _, points, residual in keyed:
        g = float_gmatrix(points)
        if all(gmatrix_distance(g, other) > dedup_tol for other, _, _ in kept):
            kept.append((g, points, residual))

    logger.info("2D enumeration on %r: %d classes from %d converged starts",
                graph, len(kept), len(solutions))
    return RealizationSet(
        graph=graph,
        d=2,
        measurements=targets,
        representatives=[_as_tuples(p) for _, p, _ in kept],
        exactness=Exactness.HEURISTIC,
        residual_max=max(r for _, _, r in kept),
        starts=n_starts,
        converged=len(solutions),
    )


def _as_tuples(points: np.ndarray) -> Tuple[Tuple[float, ...], ...]:
    return tuple(tuple(float(a) for a in row) for row in points)


def find_class(rs: RealizationSet, points: Sequence[Sequence], tol: Optional[float] = None) -> Optional[int]:
    """Index of the representative within tol of points in g-matrix distance, if any."""
    tol = tol or OracleConfig.get_dedup_tol()
    target = float_gmatrix(np.array([[float(real_value(a)) for a in p] for p in points]))
    for index, rep in enumerate(rs.representatives):
        rep = np.array([[float(real_value(a)) for a in p] for p in rep])
        if gmatrix_distance(float_gmatrix(rep), target) <= tol:
            return index
    return None
