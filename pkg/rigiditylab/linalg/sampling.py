"""
Seeded random generation of exact vectors and matrices.

Genericity is approximated by drawing integers from a large range with a
deterministic generator; nothing here certifies algebraic independence.
"""
import logging
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from rigiditylab.core.config import GenericityConfig
from rigiditylab.core.exceptions import (
    SignatureOutOfRange,
    SingularCayley,
    SingularMatrix,
    ValidationError,
)
from rigiditylab.linalg.matrix import ExactMatrix, inverse, rank, signature_matrix
from rigiditylab.linalg.scalars import GaussianRational

logger = logging.getLogger(__name__)

CAYLEY_MAX_DRAWS = 16
INVERTIBLE_MAX_DRAWS = 16


def rng_for(seed: int, stream: int = 0) -> np.random.Generator:
    """Generator for (seed, stream); stream 0 is the plain seed."""
    if seed < 0:
        raise ValidationError(f"seed must be non-negative, got {seed}")
    if stream == 0:
        return np.random.default_rng(seed)
    return np.random.default_rng([seed, stream])


def _integers(rng: np.random.Generator, bound: int, size: int) -> list:
    if bound < 2:
        raise ValidationError(f"bound must be at least 2, got {bound}")
    if bound < 2**62:
        return [int(x) for x in rng.integers(-bound, bound, size=size, endpoint=True)]
    # numpy integers are 64-bit; draw wide values digit by digit
    span = 2 * bound + 1
    out = []
    for _ in range(size):
        value = 0
        scale = 1
        while scale < span * 2**16:
            value = value * 2**32 + int(rng.integers(0, 2**32))
            scale *= 2**32
        out.append(value % span - bound)
    return out


def random_rational_vector(dim: int, bound: int, seed: int, denominator: int = 1,
                           stream: int = 0) -> Tuple[Fraction, ...]:
    """Uniform integers in [-bound, bound] divided by a fixed denominator."""
    if denominator <= 0:
        raise ValidationError("denominator must be positive")
    rng = rng_for(seed, stream)
    return tuple(Fraction(x, denominator) for x in _integers(rng, bound, dim))


def random_gaussian_vector(dim: int, bound: int, seed: int, denominator: int = 1,
                           stream: int = 0) -> Tuple[GaussianRational, ...]:
    """Gaussian rationals whose real and imaginary parts are drawn as above."""
    rng = rng_for(seed, stream)
    values = _integers(rng, bound, 2 * dim)
    return tuple(
        GaussianRational(Fraction(values[2 * k], denominator), Fraction(values[2 * k + 1], denominator))
        for k in range(dim)
    )


def random_skew(dim: int, bound: int, rng: np.random.Generator) -> ExactMatrix:
    """Random skew-symmetric integer matrix."""
    upper = _integers(rng, bound, dim * (dim - 1) // 2) if dim > 1 else []
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    k = 0
    for i in range(dim):
        for j in range(i + 1, dim):
            rows[i][j] = Fraction(upper[k])
            rows[j][i] = -Fraction(upper[k])
            k += 1
    return ExactMatrix.from_rows(rows) if dim else ExactMatrix(0, 0, ())


def cayley_transform(a: ExactMatrix) -> ExactMatrix:
    """O = (I - A)(I + A)^-1."""
    ident = ExactMatrix.identity(a.rows)
    return (ident - a) @ inverse(ident + a)


def cayley_orthogonal(skew_seed: int, dim: int, signature_s: int = 0, bound: Optional[int] = None,
                      flip: bool = False) -> ExactMatrix:
    """Exact element O of the orthogonal group of S = diag(-1 x s, +1 x (dim - s)).

    A = S K with K skew satisfies (SA)^T = -SA, so its Cayley transform has
    O^T S O = S. With ``flip`` the result is composed with a random diagonal
    +-1 matrix, which reaches the other components of the group.
    """
    if not 0 <= signature_s <= dim:
        raise SignatureOutOfRange(f"signature {signature_s} outside 0..{dim}")
    bound = GenericityConfig.get_skew_bound() if bound is None else bound
    s_mat = signature_matrix(dim, signature_s)
    rng = rng_for(skew_seed)
    for draw in range(CAYLEY_MAX_DRAWS):
        a = s_mat @ random_skew(dim, bound, rng)
        try:
            o = cayley_transform(a)
        except SingularMatrix:
            logger.debug("I + A singular on draw %d for seed %d, redrawing", draw, skew_seed)
            continue
        if flip:
            signs = [1 if int(x) % 2 == 0 else -1 for x in rng.integers(0, 2, size=dim)]
            o = o @ ExactMatrix.diagonal(signs)
        return o
    raise SingularCayley(f"I + A singular on {CAYLEY_MAX_DRAWS} draws for seed {skew_seed}")


def random_invertible(dim: int, bound: int, seed: int) -> ExactMatrix:
    """Random integer matrix with nonzero determinant, redrawn at most INVERTIBLE_MAX_DRAWS times."""
    rng = rng_for(seed)
    for draw in range(INVERTIBLE_MAX_DRAWS):
        m = ExactMatrix(dim, dim, [Fraction(x) for x in _integers(rng, bound, dim * dim)])
        if rank(m) == dim:
            return m
        logger.debug("singular draw %d for seed %d, redrawing", draw, seed)
    raise SingularMatrix(f"no invertible {dim}x{dim} matrix in {INVERTIBLE_MAX_DRAWS} draws for seed {seed}")


def random_combination(vectors: Sequence[Sequence], bound: int, seed: int, stream: int = 1):
    """Random integer combination of vectors (same field as the vectors)."""
    if not vectors:
        return ()
    rng = rng_for(seed, stream)
    coefficients = _integers(rng, bound, len(vectors))
    length = len(vectors[0])
    out = []
    for i in range(length):
        out.append(sum((c * v[i] for c, v in zip(coefficients, vectors)), Fraction(0)))
    return tuple(out)
