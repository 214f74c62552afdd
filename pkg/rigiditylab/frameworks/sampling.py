"""Seeded generic configurations and frameworks."""
from typing import Optional

from rigiditylab.core.config import GenericityConfig
from rigiditylab.frameworks.models import Configuration, Framework, Graph, SpaceDescriptor
from rigiditylab.linalg.sampling import random_gaussian_vector, random_rational_vector


def random_configuration(v: int, space: SpaceDescriptor, seed: int,
                         bound: Optional[int] = None, denominator: int = 1) -> Configuration:
    """v points of the space's ambient dimension, drawn from one seed.

    Complex spaces get Gaussian rationals; every other kind gets rationals.
    """
    bound = bound or GenericityConfig.get_bound()
    dim = space.ambient_dim
    if space.is_complex:
        flat = random_gaussian_vector(v * dim, bound, seed, denominator)
    else:
        flat = random_rational_vector(v * dim, bound, seed, denominator)
    return Configuration(tuple(tuple(flat[t * dim:(t + 1) * dim]) for t in range(v)))


def random_framework(graph: Graph, space: SpaceDescriptor, seed: int,
                     bound: Optional[int] = None) -> Framework:
    return Framework(graph, random_configuration(graph.v, space, seed, bound), space)
