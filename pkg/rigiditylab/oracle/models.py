"""Realization sets returned by the enumeration oracle."""
import enum
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from rigiditylab.frameworks.models import Graph
from rigiditylab.linalg.scalars import scalar_to_json


class Exactness(str, enum.Enum):
    EXACT = "exact"
    HEURISTIC = "heuristic"


@dataclass
class RealizationSet:
    """Pairwise non-congruent realizations of one measurement vector.

    Exact sets hold Configurations; heuristic sets hold float coordinate
    tuples with vertex 0 at the origin and vertex 1 on the positive x axis.
    """

    graph: Graph
    d: int
    measurements: List[Any]
    representatives: List[Any]
    exactness: Exactness
    residual_max: Optional[float] = None
    starts: int = 0
    converged: int = 0

    @property
    def classes(self) -> int:
        return len(self.representatives)

    def to_dict(self) -> Dict:
        if self.exactness is Exactness.EXACT:
            measurements = [scalar_to_json(m) for m in self.measurements]
        else:
            measurements = [float(m) for m in self.measurements]
        payload = {
            "d": self.d,
            "classes": self.classes,
            "exactness": self.exactness.value,
            "measurements": measurements,
            "residual_max": self.residual_max,
        }
        if self.exactness is Exactness.HEURISTIC:
            payload["starts"] = self.starts
            payload["converged"] = self.converged
        return payload


@dataclass
class ParityReport:
    classes: int
    exactness: Exactness
    verdict: str
    theorem_applies: bool
    consistent_with_theory: bool
    residual_max: Optional[float] = None
    notes: List[str] = field(default_factory=list)

    @property
    def parity(self) -> str:
        return "even" if self.classes % 2 == 0 else "odd"

    def to_dict(self) -> Dict:
        return {
            "classes": self.classes,
            "parity": self.parity,
            "exactness": self.exactness.value,
            "residual_max": self.residual_max,
            "verdict": self.verdict,
            "theorem_applies": self.theorem_applies,
            "consistent_with_theory": self.consistent_with_theory,
            "notes": list(self.notes),
        }
