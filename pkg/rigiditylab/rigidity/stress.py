"""Equilibrium stresses and stress matrices."""
import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from rigiditylab.core.exceptions import LengthMismatch, LinearAlgebraError
from rigiditylab.frameworks.measurements import difference
from rigiditylab.frameworks.models import Framework, Graph
from rigiditylab.linalg.matrix import ExactMatrix, nullspace_basis
from rigiditylab.linalg.scalars import Scalar
from rigiditylab.rigidity.matrices import rigidity_matrix

logger = logging.getLogger(__name__)

StressVector = Tuple[Scalar, ...]


def is_equilibrium(f: Framework, omega: Sequence[Scalar]) -> bool:
    """sum over neighbours u of omega_tu (p(t) - p(u)) vanishes at every vertex t."""
    if len(omega) != f.graph.e:
        raise LengthMismatch(f"stress has {len(omega)} entries, graph has {f.graph.e} edges")
    dim = f.space.ambient_dim
    sums = [[Fraction(0)] * dim for _ in range(f.graph.v)]
    for w, (t, u) in zip(omega, f.graph.edges):
        if not w:
            continue
        delta = difference(f[t], f[u])
        for i in range(dim):
            sums[t][i] = sums[t][i] + w * delta[i]
            sums[u][i] = sums[u][i] - w * delta[i]
    return not any(x for row in sums for x in row)


def equilibrium_stress_basis(f: Framework) -> List[StressVector]:
    """Basis of the left nullspace of the rigidity matrix."""
    basis = nullspace_basis(rigidity_matrix(f).T)
    for omega in basis:
        if not is_equilibrium(f, omega):
            raise LinearAlgebraError("nullspace vector fails the equilibrium sums")
    return basis


def stress_matrix(graph: Graph, omega: Sequence[Scalar]) -> ExactMatrix:
    """Omega_tu = -omega_tu on edges, Omega_tt = sum of incident stresses."""
    if len(omega) != graph.e:
        raise LengthMismatch(f"stress has {len(omega)} entries, graph has {graph.e} edges")
    v = graph.v
    entries: List[Scalar] = [Fraction(0)] * (v * v)
    for w, (t, u) in zip(omega, graph.edges):
        entries[t * v + u] = entries[t * v + u] - w
        entries[u * v + t] = entries[u * v + t] - w
        entries[t * v + t] = entries[t * v + t] + w
        entries[u * v + u] = entries[u * v + u] + w
    return ExactMatrix(v, v, entries)
