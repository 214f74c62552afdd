"""
Rigidity matrices, trivial motions and generic local rigidity.

Row k of R belongs to edge {t, u}: its block for t is (p(t) - p(u))^T S and
its block for u is (p(u) - p(t))^T S. The factor 2 of the squared-length
gradient is dropped throughout.
"""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from rigiditylab.core.config import GenericityConfig
from rigiditylab.core.exceptions import AveragingViolation, NotEquivalent, UnsupportedSpace
from rigiditylab.core.services.metrics import nongeneric_samples_total, trials_total
from rigiditylab.frameworks.measurements import difference, is_equivalent
from rigiditylab.frameworks.models import Configuration, Framework, Graph, SpaceDescriptor, SpaceKind
from rigiditylab.frameworks.sampling import random_configuration
from rigiditylab.linalg.matrix import ExactMatrix, rank
from rigiditylab.linalg.scalars import Scalar

logger = logging.getLogger(__name__)

Flex = Tuple[Scalar, ...]


def rigidity_matrix(f: Framework) -> ExactMatrix:
    if f.space.kind is SpaceKind.HYPERBOLIC:
        raise UnsupportedSpace("cone a hyperbolic framework into Minkowski space first")
    dim = f.space.ambient_dim
    signs = f.space.metric_signs
    width = f.graph.v * dim
    entries: List[Scalar] = [Fraction(0)] * (f.graph.e * width)
    for k, (t, u) in enumerate(f.graph.edges):
        delta = difference(f[t], f[u])
        base = k * width
        for i in range(dim):
            value = delta[i] if signs[i] > 0 else -delta[i]
            entries[base + t * dim + i] = value
            entries[base + u * dim + i] = -value
    return ExactMatrix(f.graph.e, width, entries)


def flatten(points: Sequence[Sequence[Scalar]]) -> Flex:
    return tuple(x for p in points for x in p)


def is_infinitesimal_flex(f: Framework, flex: Sequence[Sequence[Scalar]]) -> bool:
    """R(f) applied to the per-vertex velocity field is zero."""
    return not any(rigidity_matrix(f).apply(flatten(flex)))


def trivial_motions(f: Framework) -> List[Flex]:
    """The translations and the S-skew infinitesimal rotations of f's configuration."""
    dim = f.space.ambient_dim
    signs = f.space.metric_signs
    motions: List[Flex] = []
    for k in range(dim):
        motions.append(flatten([[Fraction(int(i == k)) for i in range(dim)] for _ in range(f.graph.v)]))
    # A = S K with K = e_i e_j^T - e_j e_i^T, so S A is skew
    for i in range(dim):
        for j in range(i + 1, dim):
            field = []
            for p in f.config:
                velocity = [Fraction(0)] * dim
                velocity[i] = signs[i] * p[j]
                velocity[j] = -signs[j] * p[i]
                field.append(velocity)
            motions.append(flatten(field))
    return motions


def expected_rank(v: int, d: int) -> int:
    return v * d - d * (d + 1) // 2


def is_locally_rigid_generic(graph: Graph, space: SpaceDescriptor, seed: Optional[int] = None,
                             bound: Optional[int] = None, retries: Optional[int] = None) -> bool:
    """Rank test of R at seeded random configurations.

    Graphs on at most d+1 vertices are rigid exactly when complete. Trial k
    uses seed + k; a full-rank trial settles the answer.
    """
    seed = GenericityConfig.get_seed() if seed is None else seed
    retries = retries or GenericityConfig.get_retries()
    d = space.ambient_dim
    if graph.v < d + 1:
        return graph.is_complete()
    target = expected_rank(graph.v, d)
    observed = []
    for k in range(retries):
        trials_total.labels(kind="local_rigidity").inc()
        config = random_configuration(graph.v, space, seed + k, bound)
        r = rank(rigidity_matrix(Framework(graph, config, space)))
        observed.append(r)
        logger.debug("local rigidity trial seed=%d rank=%d target=%d", seed + k, r, target)
        if r == target:
            if k > 0:
                nongeneric_samples_total.labels(operation="local_rigidity").inc()
                logger.warning("rigidity matrix rank dropped on %d earlier sample(s)", k)
            return True
    return False


def averaging_flex(rho: Framework, sigma: Framework) -> Tuple[Framework, Tuple[Tuple[Scalar, ...], ...]]:
    """Average a = (rho + sigma)/2 and flex f = (rho - sigma)/2 with R(a) f = 0."""
    if not is_equivalent(rho, sigma):
        raise NotEquivalent("averaging needs equivalent frameworks")
    half = Fraction(1, 2)
    average = Configuration(tuple(
        tuple((x + y) * half for x, y in zip(p, q)) for p, q in zip(rho.config, sigma.config)
    ))
    flex = tuple(tuple((x - y) * half for x, y in zip(p, q)) for p, q in zip(rho.config, sigma.config))
    a = rho.with_config(average)
    if not is_infinitesimal_flex(a, flex):
        raise AveragingViolation("R(a) f is nonzero for an equivalent pair")
    return a, flex
