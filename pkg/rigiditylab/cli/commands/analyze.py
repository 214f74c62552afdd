"""
Decide generic global rigidity of a graph file.

Euclidean and complex verdicts come from the stress-rank test directly;
pseudo-Euclidean, Minkowski and hyperbolic verdicts are transferred from the
Euclidean one and can carry an exact witness pair.
"""
from dataclasses import replace

from rigiditylab.cli.base import EXIT_NEGATIVE, EXIT_OK, BaseCommand, CommandError, CommandResult, RunConfig
from rigiditylab.frameworks.models import SpaceKind
from rigiditylab.frameworks.serializers import load_graph
from rigiditylab.hyperbolic.coning import cone_verdict_transfer
from rigiditylab.hyperbolic.transfer import hyperbolic_ggr_verdict
from rigiditylab.rigidity.verdicts import ggr_test, pseudo_ggr_verdict


class Command(BaseCommand):
    name = "analyze"
    help = "Decide generic global rigidity of a graph in the requested space"

    def add_arguments(self, parser):
        parser.add_argument("graph", help="graph or framework JSON file")
        parser.add_argument("--d", type=int, required=True, help="dimension")
        parser.add_argument("--space", default=SpaceKind.EUCLIDEAN.value,
                            choices=[k.value for k in SpaceKind])
        parser.add_argument("--s", type=int, default=0, help="negative directions (pseudo space)")
        parser.add_argument("--witness", action="store_true",
                            help="attach an equivalent non-congruent pair when not globally rigid")
        parser.add_argument("--cone", action="store_true",
                            help="also decide the coned graph one dimension up")
        parser.add_argument("--pair-out", help="write the witness pair to this file")

    def handle(self, run_config: RunConfig) -> CommandResult:
        graph = load_graph(run_config.inputs[0])
        d, space = run_config.d, SpaceKind(run_config.space)
        common = dict(seed=run_config.seed, bound=run_config.bound, retries=run_config.retries)

        if space is SpaceKind.EUCLIDEAN:
            verdict = ggr_test(graph, d, "real", **common)
        elif space is SpaceKind.COMPLEX:
            verdict = ggr_test(graph, d, "complex", **common)
        elif space is SpaceKind.PSEUDO:
            verdict = pseudo_ggr_verdict(graph, d, run_config.s, witness=run_config.witness, **common)
        elif space is SpaceKind.MINKOWSKI:
            verdict = pseudo_ggr_verdict(graph, d, 1, witness=run_config.witness, **common)
            verdict = replace(verdict, space=space.value)
        elif space is SpaceKind.HYPERBOLIC:
            verdict = hyperbolic_ggr_verdict(graph, d, witness=run_config.witness, **common)
        else:
            raise CommandError(f"cannot analyze in {space.value} space")

        result = verdict.to_dict()
        if run_config.cone:
            result["cone_transfer"] = cone_verdict_transfer(graph, d, **common).to_dict()

        artifacts = {}
        if run_config.pair_out and verdict.witness_pair is not None:
            artifacts[run_config.pair_out] = verdict.witness_pair.to_json()

        return CommandResult(
            result=result,
            exit_code=EXIT_OK if verdict.is_globally_rigid else EXIT_NEGATIVE,
            summary=f"{graph!r} in {space.value} d={d}: {verdict.verdict.value}",
            artifacts=artifacts,
        )
