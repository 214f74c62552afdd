"""Embeddings between real, s-valued and complex models of a framework."""
from rigiditylab.core.exceptions import NotReal, UnsupportedSpace
from rigiditylab.frameworks.models import Configuration, Framework, SpaceDescriptor, SpaceKind
from rigiditylab.linalg.scalars import GaussianRational, as_gaussian


def embed_real_as_complex(f: Framework) -> Framework:
    if f.space.kind is not SpaceKind.EUCLIDEAN:
        raise UnsupportedSpace(f"expected a euclidean framework, got {f.space.kind.value}")
    return f.with_space(SpaceDescriptor.complex(f.space.d))


def embed_s_valued(f: Framework) -> Framework:
    """Multiply the first s coordinates by i; measurements carry over exactly."""
    if f.space.kind not in (SpaceKind.PSEUDO, SpaceKind.EUCLIDEAN, SpaceKind.MINKOWSKI):
        raise UnsupportedSpace(f"expected a pseudo-euclidean framework, got {f.space.kind.value}")
    s = f.space.s
    config = f.config.map_points(
        lambda p: [GaussianRational(0, x) if j < s else GaussianRational(x, 0) for j, x in enumerate(p)]
    )
    return Framework(f.graph, config, SpaceDescriptor.complex(f.space.d))


def is_s_valued(f: Framework, s: int) -> bool:
    """First s coordinates purely imaginary, the rest purely real."""
    for p in f.config:
        for j, x in enumerate(p):
            x = as_gaussian(x)
            if j < s and not x.is_imaginary:
                return False
            if j >= s and not x.is_real:
                return False
    return True


def complex_to_real(f: Framework) -> Framework:
    """Inverse of embed_real_as_complex; NotReal if any coordinate is non-real."""
    if not f.space.is_complex:
        raise UnsupportedSpace(f"expected a complex framework, got {f.space.kind.value}")
    if not f.config.is_real():
        raise NotReal("configuration has non-real coordinates")
    return Framework(f.graph, f.config, SpaceDescriptor.euclidean(f.space.d))


def s_valued_to_pseudo(f: Framework, s: int) -> Framework:
    """Inverse of embed_s_valued."""
    if not is_s_valued(f, s):
        raise NotReal(f"configuration is not {s}-valued")
    config = Configuration(tuple(
        tuple(as_gaussian(x).im if j < s else as_gaussian(x).re for j, x in enumerate(p))
        for p in f.config
    ))
    return Framework(f.graph, config, SpaceDescriptor.pseudo(f.space.d, s))
