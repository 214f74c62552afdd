"""Pairs of frameworks on one graph in one space."""
from dataclasses import dataclass
from typing import Dict

from rigiditylab.core.exceptions import BaseRigidityError, GraphMismatch, ParseError, SpaceMismatch
from rigiditylab.frameworks.congruence import is_congruent
from rigiditylab.frameworks.measurements import is_equivalent
from rigiditylab.frameworks.models import Framework
from rigiditylab.frameworks.serializers import framework_from_json, framework_to_json


@dataclass(frozen=True)
class FrameworkPair:
    """(first, second) sharing graph and space.

    ``haar_coords`` marks a pair stored as (average, half-difference) rather
    than as two frameworks.
    """

    first: Framework
    second: Framework
    haar_coords: bool = False

    def __post_init__(self):
        if self.first.graph != self.second.graph:
            raise GraphMismatch("pair members are on different graphs")
        if self.first.space != self.second.space:
            raise SpaceMismatch(f"pair members live in {self.first.space} and {self.second.space}")

    @property
    def graph(self):
        return self.first.graph

    @property
    def space(self):
        return self.first.space

    def is_equivalent(self) -> bool:
        return is_equivalent(self.first, self.second)

    def is_congruent(self) -> bool:
        return is_congruent(self.first.config, self.second.config, self.space)

    def with_space(self, space) -> "FrameworkPair":
        return FrameworkPair(self.first.with_space(space), self.second.with_space(space), self.haar_coords)

    def to_json(self) -> Dict:
        return {
            "first": framework_to_json(self.first),
            "second": framework_to_json(self.second),
            "haar_coords": self.haar_coords,
        }

    @classmethod
    def from_json(cls, raw: Dict) -> "FrameworkPair":
        if not isinstance(raw, dict) or "first" not in raw or "second" not in raw:
            raise ParseError("pair needs 'first' and 'second' frameworks")
        haar = raw.get("haar_coords", False)
        if not isinstance(haar, bool):
            raise ParseError("haar_coords must be a boolean")
        try:
            return cls(framework_from_json(raw["first"]), framework_from_json(raw["second"]), haar)
        except ParseError:
            raise
        except BaseRigidityError as e:
            raise ParseError(f"invalid pair: {e}") from e
