"""Count non-congruent realizations of a generic measurement vector and check their parity."""
from rigiditylab.cli.base import BaseCommand, CommandError, CommandResult, RunConfig
from rigiditylab.frameworks.models import SpaceDescriptor
from rigiditylab.frameworks.sampling import random_configuration
from rigiditylab.frameworks.serializers import load_graph
from rigiditylab.oracle.enumeration import enumerate_1d, enumerate_2d_heuristic
from rigiditylab.oracle.parity import parity_report
from rigiditylab.rigidity.verdicts import ggr_test


class Command(BaseCommand):
    name = "enumerate"
    help = "Enumerate realizations (exact on the line, heuristic in the plane) and report parity"

    def add_arguments(self, parser):
        parser.add_argument("graph", help="graph or framework JSON file")
        parser.add_argument("--d", type=int, required=True, choices=(1, 2))
        parser.add_argument("--mode", choices=("exact", "float"),
                            help="exact for d=1, float for d=2 (default follows d)")
        parser.add_argument("--starts", type=int, help="solver starts in the plane")
        parser.add_argument("--dedup-tol", type=float, help="g-matrix distance merging two solutions")

    def handle(self, run_config: RunConfig) -> CommandResult:
        graph = load_graph(run_config.inputs[0])
        d = run_config.d
        mode = run_config.mode or ("exact" if d == 1 else "float")
        if (d, mode) not in ((1, "exact"), (2, "float")):
            raise CommandError(f"d={d} enumeration has no {mode} mode")

        if d == 1:
            base = random_configuration(graph.v, SpaceDescriptor.euclidean(1), run_config.seed, run_config.bound)
            realizations = enumerate_1d(graph, base)
        else:
            realizations = enumerate_2d_heuristic(
                graph,
                n_starts=run_config.starts,
                seed=run_config.seed,
                dedup_tol=run_config.dedup_tol,
            )

        verdict = ggr_test(graph, d, "real", run_config.seed, run_config.bound, run_config.retries)
        report = parity_report(realizations, verdict)
        result = report.to_dict()
        result["realizations"] = realizations.to_dict()
        return CommandResult(
            result=result,
            exactness=realizations.exactness.value,
            summary=f"{report.classes} classes ({report.parity}), verdict {report.verdict}",
        )
