"""
Exact equivalent but non-congruent Euclidean pairs.

A vertex w of degree at most d has neighbours whose affine hull is a proper
flat at a generic configuration. Reflecting w across that flat keeps every
edge length and, generically, changes some non-edge length.
"""
import logging
from typing import Iterable, List, Optional, Sequence

from rigiditylab.core.config import GenericityConfig
from rigiditylab.core.exceptions import GeometryError, NoReflectableVertex
from rigiditylab.frameworks.congruence import is_congruent
from rigiditylab.frameworks.measurements import difference, is_equivalent
from rigiditylab.frameworks.models import Configuration, Framework, Graph, Point, SpaceDescriptor
from rigiditylab.frameworks.sampling import random_configuration
from rigiditylab.linalg.matrix import ExactMatrix, inverse, rank
from rigiditylab.pogorelov.pairs import FrameworkPair

logger = logging.getLogger(__name__)


def _independent(vectors: Sequence[Point]) -> List[Point]:
    kept: List[Point] = []
    for vec in vectors:
        if rank(ExactMatrix.from_rows(kept + [vec])) > len(kept):
            kept.append(vec)
    return kept


def reflect_across_flat(x: Point, flat: Sequence[Point]) -> Point:
    """Euclidean reflection x -> 2 proj(x) - x across the affine hull of ``flat``."""
    base = flat[0]
    directions = _independent([difference(q, base) for q in flat[1:]])
    offset = difference(x, base)
    if not directions:
        projection = base
    else:
        d_mat = ExactMatrix.from_columns(directions)
        coefficients = inverse(d_mat.T @ d_mat).apply((d_mat.T).apply(offset))
        projection = tuple(b + y for b, y in zip(base, d_mat.apply(coefficients)))
    return tuple(2 * p - y for p, y in zip(projection, x))


def build_noncongruent_equivalent_pair(graph: Graph, d: int, seed: Optional[int] = None,
                                       config: Optional[Configuration] = None,
                                       candidates: Optional[Iterable[int]] = None,
                                       bound: Optional[int] = None) -> FrameworkPair:
    """(rho, sigma) with sigma = rho except one vertex reflected across its neighbours' flat.

    Candidates are tried by increasing degree. An isolated vertex is reflected
    through another vertex instead.
    """
    space = SpaceDescriptor.euclidean(d)
    if config is None:
        seed = GenericityConfig.get_seed() if seed is None else seed
        config = random_configuration(graph.v, space, seed, bound)
    rho = Framework(graph, config, space)
    pool = range(graph.v) if candidates is None else candidates
    ordered = sorted((w for w in pool if graph.degree(w) <= d), key=lambda w: (graph.degree(w), w))

    for w in ordered:
        neighbors = graph.neighbors(w)
        if neighbors:
            image = reflect_across_flat(rho[w], [rho[t] for t in neighbors])
        elif graph.v > 1:
            pivot = rho[0 if w != 0 else 1]
            image = tuple(2 * c - x for c, x in zip(pivot, rho[w]))
        else:
            continue
        points = list(rho.config.points)
        points[w] = image
        sigma = rho.with_config(Configuration(tuple(points)))
        if not is_equivalent(rho, sigma):
            raise GeometryError(f"reflection of vertex {w} changed an edge length")
        if is_congruent(rho.config, sigma.config, space):
            logger.debug("reflecting vertex %d gave a congruent framework, trying next", w)
            continue
        logger.debug("reflected vertex %d across neighbours %s", w, neighbors)
        return FrameworkPair(rho, sigma)

    raise NoReflectableVertex(
        f"no vertex of degree <= {d} yields a non-congruent reflection"
    )
