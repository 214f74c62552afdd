"""
Pogorelov maps and their Haar factorization.

With a = (rho + sigma)/2 and f = (rho - sigma)/2, the real map sends an
equivalent Euclidean pair to (a + f~, a - f~), where f~ negates the first s
coordinates of f. Coordinate by coordinate this is a swap: the first output
takes sigma's first s coordinates and rho's remaining ones.
"""
from fractions import Fraction
from typing import Callable

from rigiditylab.core.exceptions import (
    HaarCoordinatesRequired,
    SignatureOutOfRange,
    SpaceMismatch,
    UnsupportedSpace,
    ZeroScale,
)
from rigiditylab.frameworks.models import Configuration, SpaceDescriptor, SpaceKind
from rigiditylab.linalg.scalars import I, Scalar, to_exact
from rigiditylab.pogorelov.pairs import FrameworkPair

HALF = Fraction(1, 2)


def _combine(pair: FrameworkPair, fn: Callable[[int, Scalar, Scalar], Scalar]) -> Configuration:
    return Configuration(tuple(
        tuple(fn(j, x, y) for j, (x, y) in enumerate(zip(p, q)))
        for p, q in zip(pair.first.config, pair.second.config)
    ))


def _map_each(config: Configuration, fn: Callable[[int, Scalar], Scalar]) -> Configuration:
    return Configuration(tuple(tuple(fn(j, x) for j, x in enumerate(p)) for p in config))


def _require_euclidean(pair: FrameworkPair, s: int) -> None:
    if pair.space.kind is not SpaceKind.EUCLIDEAN:
        raise SpaceMismatch(f"the real Pogorelov map takes euclidean pairs, got {pair.space.kind.value}")
    if not 0 <= s <= pair.space.d:
        raise SignatureOutOfRange(f"signature {s} outside 0..{pair.space.d}")


def _require_complex(pair: FrameworkPair) -> None:
    if not pair.space.is_complex:
        raise UnsupportedSpace(f"expected a complex pair, got {pair.space.kind.value}")


def pogorelov(pair: FrameworkPair, s: int) -> FrameworkPair:
    """Equivalent Euclidean pair -> equivalent pair in pseudo-Euclidean (d, s) space."""
    _require_euclidean(pair, s)
    target = SpaceDescriptor.pseudo(pair.space.d, s)

    def twisted(j: int, x: Scalar, y: Scalar) -> Scalar:
        flex = (x - y) * HALF
        return -flex if j < s else flex

    average = _combine(pair, lambda j, x, y: (x + y) * HALF)
    flex = _combine(pair, twisted)
    first = Configuration(tuple(
        tuple(a + f for a, f in zip(p, q)) for p, q in zip(average, flex)
    ))
    second = Configuration(tuple(
        tuple(a - f for a, f in zip(p, q)) for p, q in zip(average, flex)
    ))
    return FrameworkPair(pair.first.with_config(first, target), pair.second.with_config(second, target))


def coordinate_swap(pair: FrameworkPair, s: int) -> FrameworkPair:
    """First output: sigma's first s coordinates, then rho's. Second output: the reverse."""
    _require_euclidean(pair, s)
    target = SpaceDescriptor.pseudo(pair.space.d, s)
    first = _combine(pair, lambda j, x, y: y if j < s else x)
    second = _combine(pair, lambda j, x, y: x if j < s else y)
    return FrameworkPair(pair.first.with_config(first, target), pair.second.with_config(second, target))


def haar(pair: FrameworkPair) -> FrameworkPair:
    """(rho, sigma) -> ((rho + sigma)/2, (rho - sigma)/2)."""
    _require_complex(pair)
    average = _combine(pair, lambda j, x, y: (x + y) * HALF)
    flex = _combine(pair, lambda j, x, y: (x - y) * HALF)
    return FrameworkPair(pair.first.with_config(average), pair.second.with_config(flex), haar_coords=True)


def haar_inverse(pair: FrameworkPair) -> FrameworkPair:
    """(a, f) -> (a + f, a - f)."""
    _require_complex(pair)
    if not pair.haar_coords:
        raise HaarCoordinatesRequired("haar_inverse expects a pair in (average, flex) form")
    first = _combine(pair, lambda j, a, f: a + f)
    second = _combine(pair, lambda j, a, f: a - f)
    return FrameworkPair(pair.first.with_config(first), pair.second.with_config(second))


def s_twist(pair: FrameworkPair, s: int) -> FrameworkPair:
    """First s coordinates times i in the first element and times -i in the second."""
    _require_complex(pair)
    if not 0 <= s <= pair.space.d:
        raise SignatureOutOfRange(f"signature {s} outside 0..{pair.space.d}")
    first = _map_each(pair.first.config, lambda j, x: I * x if j < s else x)
    second = _map_each(pair.second.config, lambda j, x: -I * x if j < s else x)
    return FrameworkPair(pair.first.with_config(first), pair.second.with_config(second), pair.haar_coords)


def complex_pogorelov(pair: FrameworkPair, s: int) -> FrameworkPair:
    """haar_inverse . s_twist . haar."""
    return haar_inverse(s_twist(haar(pair), s))


def coordinate_scaling(pair: FrameworkPair, coord: int, factor) -> FrameworkPair:
    """Scale coordinate ``coord`` of the average by factor and of the flex by 1/factor."""
    if not pair.haar_coords:
        raise HaarCoordinatesRequired("coordinate scaling acts on (average, flex) pairs")
    factor = to_exact(factor)
    if not factor:
        raise ZeroScale("scaling factor must be nonzero")
    if not 0 <= coord < pair.space.ambient_dim:
        raise SignatureOutOfRange(f"coordinate {coord} outside 0..{pair.space.ambient_dim - 1}")
    inverse = 1 / factor
    first = _map_each(pair.first.config, lambda j, x: x * factor if j == coord else x)
    second = _map_each(pair.second.config, lambda j, x: x * inverse if j == coord else x)
    return FrameworkPair(pair.first.with_config(first), pair.second.with_config(second), haar_coords=True)


def congruence_reflects(pair: FrameworkPair, s: int) -> bool:
    """Input pair congruent exactly when its Pogorelov image is congruent."""
    return pair.is_congruent() == pogorelov(pair, s).is_congruent()
