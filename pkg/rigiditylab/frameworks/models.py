"""Graphs, metric spaces, configurations and frameworks."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from rigiditylab.core.exceptions import (
    DimensionMismatch,
    LengthMismatch,
    NotReal,
    SignatureOutOfRange,
    ValidationError,
)
from rigiditylab.linalg.matrix import ExactMatrix, signature_matrix
from rigiditylab.linalg.scalars import GaussianRational, Scalar, as_gaussian, real_value, to_exact

Point = Tuple[Scalar, ...]


class Graph:
    """Simple undirected graph on vertices 0..v-1 with ordered edges (t, u), t < u."""

    __slots__ = ("v", "edges", "_edge_set")

    def __init__(self, v: int, edges: Iterable[Sequence[int]] = ()):
        if v < 0:
            raise ValidationError("vertex count must be non-negative")
        normalized: List[Tuple[int, int]] = []
        seen = set()
        for edge in edges:
            t, u = (int(x) for x in edge)
            if t == u:
                raise ValidationError(f"self-loop at vertex {t}")
            t, u = min(t, u), max(t, u)
            if t < 0 or u >= v:
                raise ValidationError(f"edge ({t}, {u}) outside 0..{v - 1}")
            if (t, u) in seen:
                raise ValidationError(f"duplicate edge ({t}, {u})")
            seen.add((t, u))
            normalized.append((t, u))
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "_edge_set", frozenset(seen))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def e(self) -> int:
        return len(self.edges)

    def has_edge(self, t: int, u: int) -> bool:
        return (min(t, u), max(t, u)) in self._edge_set

    def neighbors(self, t: int) -> List[int]:
        return sorted({u for a, b in self.edges for u in (a, b) if t in (a, b) and u != t})

    def degree(self, t: int) -> int:
        return sum(1 for a, b in self.edges if t in (a, b))

    def is_complete(self) -> bool:
        return self.e == self.v * (self.v - 1) // 2

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.v))
        g.add_edges_from(self.edges)
        return g

    def is_connected(self) -> bool:
        if self.v <= 1:
            return True
        return nx.is_connected(self.to_networkx())

    def with_vertex(self, neighbors: Sequence[int]) -> "Graph":
        """Append vertex v joined to the given vertices."""
        return Graph(self.v + 1, list(self.edges) + [(t, self.v) for t in neighbors])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.v == other.v and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.v, self.edges))

    def __repr__(self) -> str:
        return f"Graph(v={self.v}, edges={list(self.edges)})"

    # -- catalogue ----------------------------------------------------------

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, itertools.combinations(range(n), 2))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def wheel(cls, rim: int) -> "Graph":
        """Hub 0 joined to a cycle on 1..rim."""
        rim_edges = [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
        return cls(rim + 1, [(0, i) for i in range(1, rim + 1)] + rim_edges)

    @classmethod
    def prism(cls, n: int = 3) -> "Graph":
        """Two n-cycles joined by a perfect matching."""
        top = [(i, (i + 1) % n) for i in range(n)]
        bottom = [(n + i, n + (i + 1) % n) for i in range(n)]
        rungs = [(i, n + i) for i in range(n)]
        return cls(2 * n, top + bottom + rungs)

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls(a + b, [(i, a + j) for i in range(a) for j in range(b)])

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        nodes = sorted(g.nodes)
        index = {n: i for i, n in enumerate(nodes)}
        return cls(len(nodes), [(index[a], index[b]) for a, b in g.edges])


class SpaceKind(str, enum.Enum):
    EUCLIDEAN = "euclidean"
    PSEUDO = "pseudo"
    COMPLEX = "complex"
    MINKOWSKI = "minkowski"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class SpaceDescriptor:
    """Which metric geometry a framework lives in.

    ``minkowski`` with dimension d is M^d (ambient dimension d, one negative
    direction); ``hyperbolic`` with dimension d is H^d, modeled on rays in
    M^(d+1).
    """

    kind: SpaceKind
    d: int
    s: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", SpaceKind(self.kind))
        if self.d < 0:
            raise ValidationError("dimension must be non-negative")
        if self.kind in (SpaceKind.EUCLIDEAN, SpaceKind.COMPLEX, SpaceKind.HYPERBOLIC) and self.s != 0:
            raise SignatureOutOfRange(f"{self.kind.value} space has no signature (s={self.s})")
        if self.kind is SpaceKind.MINKOWSKI and (self.s != 1 or self.d < 1):
            raise SignatureOutOfRange("minkowski space has exactly one negative direction")
        if not 0 <= self.s <= self.d:
            raise SignatureOutOfRange(f"signature {self.s} outside 0..{self.d}")

    @classmethod
    def euclidean(cls, d: int) -> "SpaceDescriptor":
        return cls(SpaceKind.EUCLIDEAN, d)

    @classmethod
    def pseudo(cls, d: int, s: int) -> "SpaceDescriptor":
        return cls(SpaceKind.PSEUDO, d, s)

    @classmethod
    def complex(cls, d: int) -> "SpaceDescriptor":
        return cls(SpaceKind.COMPLEX, d)

    @classmethod
    def minkowski(cls, d: int) -> "SpaceDescriptor":
        return cls(SpaceKind.MINKOWSKI, d, 1)

    @classmethod
    def hyperbolic(cls, d: int) -> "SpaceDescriptor":
        return cls(SpaceKind.HYPERBOLIC, d)

    @property
    def ambient_dim(self) -> int:
        return self.d + 1 if self.kind is SpaceKind.HYPERBOLIC else self.d

    @property
    def negative_count(self) -> int:
        """Number of negative directions of the ambient bilinear form."""
        return 1 if self.kind is SpaceKind.HYPERBOLIC else self.s

    @property
    def is_complex(self) -> bool:
        return self.kind is SpaceKind.COMPLEX

    @property
    def metric_signs(self) -> Tuple[int, ...]:
        neg = self.negative_count
        return (-1,) * neg + (1,) * (self.ambient_dim - neg)

    def signature_matrix(self) -> ExactMatrix:
        return signature_matrix(self.ambient_dim, self.negative_count)

    def to_dict(self) -> Dict:
        return {"kind": self.kind.value, "d": self.d, "s": self.s}


def _coerce_point(point: Sequence, space: SpaceDescriptor) -> Point:
    if len(point) != space.ambient_dim:
        raise DimensionMismatch(
            f"point has {len(point)} coordinates, {space.kind.value} space needs {space.ambient_dim}"
        )
    values = [to_exact(x) for x in point]
    if space.is_complex:
        return tuple(as_gaussian(x) for x in values)
    try:
        return tuple(real_value(x) for x in values)
    except NotReal as e:
        raise ValidationError(f"{space.kind.value} coordinates must be real") from e


@dataclass(frozen=True)
class Configuration:
    """An assignment of a coordinate vector to every vertex."""

    points: Tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(tuple(to_exact(x) for x in p) for p in self.points))
        if self.points:
            dim = len(self.points[0])
            if any(len(p) != dim for p in self.points):
                raise DimensionMismatch("points have different dimensions")

    @classmethod
    def of(cls, points: Iterable[Sequence]) -> "Configuration":
        return cls(tuple(tuple(p) for p in points))

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, t: int) -> Point:
        return self.points[t]

    def __iter__(self):
        return iter(self.points)

    @property
    def dim(self) -> int:
        return len(self.points[0]) if self.points else 0

    def is_real(self) -> bool:
        return all(not isinstance(x, GaussianRational) or x.is_real for p in self.points for x in p)

    def map_points(self, fn) -> "Configuration":
        return Configuration(tuple(tuple(fn(p)) for p in self.points))


@dataclass(frozen=True)
class Framework:
    """A graph together with a configuration of its vertices in a space."""

    graph: Graph
    config: Configuration
    space: SpaceDescriptor

    def __post_init__(self):
        if len(self.config) != self.graph.v:
            raise LengthMismatch(
                f"configuration has {len(self.config)} points, graph has {self.graph.v} vertices"
            )
        coerced = Configuration(tuple(_coerce_point(p, self.space) for p in self.config.points))
        object.__setattr__(self, "config", coerced)

    @classmethod
    def build(cls, graph: Graph, points: Iterable[Sequence], space: SpaceDescriptor) -> "Framework":
        return cls(graph, Configuration.of(points), space)

    def __getitem__(self, t: int) -> Point:
        return self.config[t]

    def with_config(self, config: Configuration, space: Optional[SpaceDescriptor] = None) -> "Framework":
        return Framework(self.graph, config, space or self.space)

    def with_space(self, space: SpaceDescriptor) -> "Framework":
        return Framework(self.graph, self.config, space)
