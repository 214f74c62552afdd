"""Coned graphs and the coning verdict transfer."""
from dataclasses import dataclass
from typing import Dict, Optional

from rigiditylab.core.exceptions import ValidationError
from rigiditylab.frameworks.models import Graph
from rigiditylab.rigidity.verdicts import GGRVerdict, ggr_test


@dataclass(frozen=True)
class ConedGraph:
    """base plus a cone vertex (index base.v) joined to every base vertex."""

    base: Graph

    @property
    def cone_vertex(self) -> int:
        return self.base.v

    @property
    def graph(self) -> Graph:
        return self.base.with_vertex(range(self.base.v))

    @property
    def v(self) -> int:
        return self.base.v + 1

    @property
    def e(self) -> int:
        return self.base.e + self.base.v

    @classmethod
    def from_graph(cls, graph: Graph) -> "ConedGraph":
        """Recover the base of a graph whose last vertex is adjacent to all others."""
        if graph.v == 0:
            raise ValidationError("the empty graph is not coned")
        c = graph.v - 1
        if graph.degree(c) != c:
            raise ValidationError(f"vertex {c} is not adjacent to every other vertex")
        return cls(Graph(c, [e for e in graph.edges if c not in e]))


def cone_graph(g: Graph) -> ConedGraph:
    return ConedGraph(g)


@dataclass
class ConeTransfer:
    base: GGRVerdict
    coned: GGRVerdict

    @property
    def agree(self) -> bool:
        return self.base.is_globally_rigid == self.coned.is_globally_rigid

    def to_dict(self) -> Dict:
        return {"base": self.base.to_dict(), "coned": self.coned.to_dict(), "agree": self.agree}


def cone_verdict_transfer(graph: Graph, d: int, seed: Optional[int] = None,
                          bound: Optional[int] = None, retries: Optional[int] = None) -> ConeTransfer:
    """Independent verdicts for the graph in E^d and its cone in E^(d+1)."""
    base = ggr_test(graph, d, "real", seed, bound, retries)
    coned = ggr_test(cone_graph(graph).graph, d + 1, "real", seed, bound, retries)
    return ConeTransfer(base, coned)
