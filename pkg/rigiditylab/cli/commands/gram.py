"""
Report the g-matrix of a framework file with its inertia.

For a full-span configuration with s negative directions the inertia is
(s, d - s, v - 1 - d). Edge measurements are recomputed from the g-matrix as a
consistency check, and real g-matrices are recovered back into coordinates.
"""
from typing import Optional

from rigiditylab.cli.base import BaseCommand, CommandResult, RunConfig
from rigiditylab.core.exceptions import UnsupportedSpace
from rigiditylab.frameworks.congruence import affine_span_dim
from rigiditylab.frameworks.embeddings import is_s_valued
from rigiditylab.frameworks.measurements import edge_measurements
from rigiditylab.frameworks.models import Framework, SpaceKind
from rigiditylab.frameworks.serializers import gmatrix_to_json, load_framework
from rigiditylab.gram.gmatrix import gmatrix_signature, gram, pi_E
from rigiditylab.gram.recovery import configuration_from_real_gmatrix


def _negative_directions(f: Framework) -> Optional[int]:
    if f.space.kind is not SpaceKind.COMPLEX:
        return f.space.negative_count
    for s in range(f.space.d + 1):
        if is_s_valued(f, s):
            return s
    return None


class Command(BaseCommand):
    name = "gram"
    help = "Compute the g-matrix of a framework and its signature"

    def add_arguments(self, parser):
        parser.add_argument("framework", help="framework JSON file")

    def handle(self, run_config: RunConfig) -> CommandResult:
        f = load_framework(run_config.inputs[0])
        if f.space.kind is SpaceKind.HYPERBOLIC:
            raise UnsupportedSpace("hyperbolic frameworks have no g-matrix; cone them first")

        m = gram(f.config, f.space)
        d, v = f.space.ambient_dim, f.graph.v
        result = {
            "gmatrix": gmatrix_to_json(m),
            "space": f.space.to_dict(),
            "affine_span_dim": affine_span_dim(f.config),
            "measurements_match": pi_E(m, f.graph) == edge_measurements(f),
            "signature": None,
            "expected_signature": None,
            "recovery": None,
        }
        if not m.is_real():
            return CommandResult(result=result, summary=f"g-matrix of side {m.side} is not real")

        signature = gmatrix_signature(m)
        result["signature"] = signature.to_dict()
        s = _negative_directions(f)
        if s is not None and result["affine_span_dim"] == d and v > d:
            result["expected_signature"] = {"neg": s, "pos": d - s, "zero": v - 1 - d}
            result["signature_matches"] = (s, d - s, v - 1 - d) == signature.as_tuple()

        recovered = configuration_from_real_gmatrix(m, d)
        result["recovery"] = {
            "s": recovered.s,
            "round_trip": recovered.gram().matrix == m.matrix,
            "rational": recovered.to_configuration() is not None,
        }
        return CommandResult(
            result=result,
            summary=f"g-matrix of side {m.side}, signature {signature.as_tuple()}",
        )
