"""
Randomized decision of generic global rigidity.

A stress matrix of rank v - d - 1 at one generic configuration certifies
GGR. Failing to reach that rank on every retried sample gives GGF, which is
therefore correct only up to sampling error.
"""
import enum
import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx

from rigiditylab.core.config import GenericityConfig
from rigiditylab.core.exceptions import BaseRigidityError, NoReflectableVertex
from rigiditylab.core.services.metrics import (
    nongeneric_samples_total,
    trials_total,
    verdict_duration_seconds,
    verdicts_total,
)
from rigiditylab.frameworks.models import Framework, Graph, SpaceDescriptor
from rigiditylab.frameworks.sampling import random_configuration
from rigiditylab.linalg.matrix import rank
from rigiditylab.linalg.sampling import random_combination
from rigiditylab.linalg.scalars import Scalar, scalar_to_json
from rigiditylab.pogorelov.builder import build_noncongruent_equivalent_pair
from rigiditylab.pogorelov.maps import pogorelov
from rigiditylab.rigidity.matrices import is_locally_rigid_generic
from rigiditylab.rigidity.stress import equilibrium_stress_basis, stress_matrix

logger = logging.getLogger(__name__)

FIELDS = ("real", "complex")


class Verdict(str, enum.Enum):
    GGR = "GGR"
    GGF = "GGF"
    FLEXIBLE = "FLEXIBLE"
    SMALL_COMPLETE = "SMALL_COMPLETE"
    SMALL_INCOMPLETE = "SMALL_INCOMPLETE"


@dataclass
class GGRVerdict:
    verdict: Verdict
    d: int
    field: str
    space: str
    s: Optional[int] = None
    ranks: List[int] = field(default_factory=list)
    seeds: List[int] = field(default_factory=list)
    witness_stress: Optional[Tuple[Scalar, ...]] = None
    transfer_derived: bool = False
    generic_property_certified: Optional[bool] = None
    witness_pair: Any = None
    notes: List[str] = field(default_factory=list)

    @property
    def is_globally_rigid(self) -> bool:
        return self.verdict in (Verdict.GGR, Verdict.SMALL_COMPLETE)

    def to_dict(self) -> Dict:
        payload = {
            "verdict": self.verdict.value,
            "d": self.d,
            "s": self.s,
            "field": self.field,
            "space": self.space,
            "ranks": list(self.ranks),
            "seeds": list(self.seeds),
            "witness_stress": (
                [scalar_to_json(x) for x in self.witness_stress]
                if self.witness_stress is not None else None
            ),
            "transfer_derived": self.transfer_derived,
        }
        if self.generic_property_certified is not None:
            payload["generic_property_certified"] = self.generic_property_certified
        if self.witness_pair is not None:
            payload["witness_pair"] = self.witness_pair.to_json()
        if self.notes:
            payload["notes"] = list(self.notes)
        return payload


def _record(verdict: GGRVerdict) -> GGRVerdict:
    verdicts_total.labels(verdict=verdict.verdict.value, field=verdict.field, space=verdict.space).inc()
    return verdict


def ggr_test(graph: Graph, d: int, field: str = "real", seed: Optional[int] = None,
             bound: Optional[int] = None, retries: Optional[int] = None) -> GGRVerdict:
    """Stress-rank test over E^d (field="real") or C^d (field="complex")."""
    if field not in FIELDS:
        raise ValueError(f"field must be one of {FIELDS}, got {field!r}")
    seed = GenericityConfig.get_seed() if seed is None else seed
    retries = retries or GenericityConfig.get_retries()
    space = SpaceDescriptor.euclidean(d) if field == "real" else SpaceDescriptor.complex(d)
    label = space.kind.value

    with verdict_duration_seconds.time():
        if graph.v <= d + 1:
            outcome = Verdict.SMALL_COMPLETE if graph.is_complete() else Verdict.SMALL_INCOMPLETE
            return _record(GGRVerdict(outcome, d, field, label))

        seeds = [seed + k for k in range(retries)]
        if not is_locally_rigid_generic(graph, space, seed, bound, retries):
            return _record(GGRVerdict(Verdict.FLEXIBLE, d, field, label, seeds=seeds))

        target = graph.v - d - 1
        ranks: List[int] = []
        for trial_seed in seeds:
            trials_total.labels(kind="stress").inc()
            config = random_configuration(graph.v, space, trial_seed, bound)
            basis = equilibrium_stress_basis(Framework(graph, config, space))
            omega = random_combination(basis, bound or GenericityConfig.get_bound(), trial_seed)
            r = rank(stress_matrix(graph, omega)) if basis else 0
            ranks.append(r)
            logger.debug("stress trial seed=%d basis=%d rank=%d target=%d",
                         trial_seed, len(basis), r, target)
            if r == target:
                if len(set(ranks)) > 1:
                    nongeneric_samples_total.labels(operation="stress").inc()
                    logger.warning("stress rank varied across samples: %s", ranks)
                return _record(GGRVerdict(
                    Verdict.GGR, d, field, label,
                    ranks=ranks, seeds=seeds[:len(ranks)], witness_stress=tuple(omega),
                ))

        if len(set(ranks)) > 1:
            nongeneric_samples_total.labels(operation="stress").inc()
            logger.warning("stress rank varied across samples: %s", ranks)
        logger.info("no stress of rank %d in %d samples", target, retries)
        return _record(GGRVerdict(Verdict.GGF, d, field, label, ranks=ranks, seeds=seeds))


def has_simplex_subgraph(graph: Graph, d: int) -> bool:
    """A clique on d+1 vertices: a GGR subgraph large enough for the generic-property argument."""
    if graph.v < d + 1:
        return False
    return any(len(c) >= d + 1 for c in nx.find_cliques(graph.to_networkx()))


def pseudo_ggr_verdict(graph: Graph, d: int, s: int, seed: Optional[int] = None,
                       witness: bool = False, bound: Optional[int] = None,
                       retries: Optional[int] = None) -> GGRVerdict:
    """Graph-level verdict in pseudo-Euclidean (d, s) space via the Euclidean one."""
    space = SpaceDescriptor.pseudo(d, s)
    base = ggr_test(graph, d, "real", seed, bound, retries)
    verdict = replace(
        base,
        space=space.kind.value,
        s=s,
        transfer_derived=True,
        generic_property_certified=base.is_globally_rigid or has_simplex_subgraph(graph, d),
        notes=list(base.notes) + [f"transferred from euclidean d={d}"],
    )
    if witness and verdict.verdict is Verdict.GGF:
        verdict.witness_pair = _pseudo_witness(graph, d, s, seed, bound, verdict.notes)
    return verdict


def _pseudo_witness(graph: Graph, d: int, s: int, seed: Optional[int], bound: Optional[int],
                    notes: List[str]):
    try:
        pair = pogorelov(build_noncongruent_equivalent_pair(graph, d, seed, bound=bound), s)
    except NoReflectableVertex as e:
        notes.append(f"no constructive witness: {e}")
        return None
    except BaseRigidityError as e:
        logger.warning("witness construction failed: %s", e)
        notes.append(f"witness construction failed: {e}")
        return None
    if not pair.is_equivalent() or pair.is_congruent():
        nongeneric_samples_total.labels(operation="pseudo_witness").inc()
        notes.append("witness pair failed verification; sample suspected non-generic")
        return None
    return pair
