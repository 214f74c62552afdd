"""
JSON forms of graphs, frameworks, pairs and g-matrices.

Scalars use the "p/q" string form; complex scalars are {"re": ..., "im": ...}.
Output is deterministic: keys are sorted and no float formatting is involved
on exact paths.
"""
import json
from pathlib import Path
from typing import Any, Dict, Union

from rigiditylab.core.exceptions import BaseRigidityError, ParseError
from rigiditylab.frameworks.models import Configuration, Framework, Graph, SpaceDescriptor, SpaceKind
from rigiditylab.linalg.matrix import ExactMatrix
from rigiditylab.linalg.scalars import scalar_from_json, scalar_to_json

FRAMEWORK_SUFFIX = ".rfw.json"


def dumps(payload: Any) -> str:
    """Canonical JSON text; identical payloads give byte-identical output."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load_json(path: Union[str, Path]) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: malformed JSON ({e.msg} at line {e.lineno})") from e
    except OSError as e:
        raise ParseError(f"{path}: cannot read ({e.strerror})") from e


def _require(raw: Dict, key: str, kind: type):
    if not isinstance(raw, dict) or key not in raw:
        raise ParseError(f"missing field {key!r}")
    value = raw[key]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is int:
        raise ParseError(f"field {key!r} must be {kind.__name__}")
    return value


# -- graphs -----------------------------------------------------------------

def graph_to_json(g: Graph) -> Dict:
    return {"v": g.v, "edges": [list(e) for e in g.edges]}


def graph_from_json(raw: Dict) -> Graph:
    v = _require(raw, "v", int)
    edges = _require(raw, "edges", list)
    if any(not isinstance(e, list) or len(e) != 2 for e in edges):
        raise ParseError("edges must be [t, u] pairs")
    try:
        return Graph(v, edges)
    except BaseRigidityError as e:
        raise ParseError(f"invalid graph: {e}") from e


# -- spaces and frameworks --------------------------------------------------

def space_from_json(raw: Dict) -> SpaceDescriptor:
    kind = _require(raw, "kind", str)
    d = _require(raw, "d", int)
    s = raw.get("s", 1 if kind == SpaceKind.MINKOWSKI.value else 0)
    if s is None:
        s = 0
    try:
        return SpaceDescriptor(SpaceKind(kind), d, int(s))
    except ValueError as e:
        raise ParseError(f"unknown space kind {kind!r}") from e
    except BaseRigidityError as e:
        raise ParseError(f"invalid space: {e}") from e


def framework_to_json(f: Framework) -> Dict:
    payload = graph_to_json(f.graph)
    payload["space"] = f.space.to_dict()
    payload["config"] = [[scalar_to_json(x) for x in p] for p in f.config]
    return payload


def framework_from_json(raw: Dict) -> Framework:
    graph = graph_from_json(raw)
    space = space_from_json(_require(raw, "space", dict))
    points = _require(raw, "config", list)
    try:
        parsed = [[scalar_from_json(x) for x in p] for p in points]
    except TypeError as e:
        raise ParseError("config must be a list of coordinate lists") from e
    if space.kind is SpaceKind.HYPERBOLIC and raw.get("ball_model"):
        from rigiditylab.hyperbolic.hyperboloid import hyperbolic_point_from_ball
        try:
            parsed = [list(hyperbolic_point_from_ball(u, space.d).ray) for u in parsed]
        except BaseRigidityError as e:
            raise ParseError(f"invalid ball parameter: {e}") from e
    try:
        return Framework(graph, Configuration.of(parsed), space)
    except BaseRigidityError as e:
        raise ParseError(f"invalid framework: {e}") from e


def load_framework(path: Union[str, Path]) -> Framework:
    return framework_from_json(load_json(path))


def load_graph(path: Union[str, Path]) -> Graph:
    """A graph file, or the graph of a framework file."""
    return graph_from_json(load_json(path))


# -- g-matrices -------------------------------------------------------------

def matrix_to_json(m: ExactMatrix):
    return [[scalar_to_json(x) for x in m.row(i)] for i in range(m.rows)]


def gmatrix_to_json(m) -> Dict:
    return {"side": m.side, "entries": matrix_to_json(m.matrix)}


def gmatrix_from_json(raw: Dict):
    from rigiditylab.gram.gmatrix import GMatrix

    side = _require(raw, "side", int)
    entries = _require(raw, "entries", list)
    if len(entries) != side or any(not isinstance(r, list) or len(r) != side for r in entries):
        raise ParseError(f"entries must be a {side}x{side} array")
    try:
        return GMatrix.from_rows([[scalar_from_json(x) for x in row] for row in entries])
    except BaseRigidityError as e:
        raise ParseError(f"invalid g-matrix: {e}") from e
