"""Map an equivalent Euclidean pair into pseudo-Euclidean space and verify the image."""
from rigiditylab.cli.base import BaseCommand, CommandResult, RunConfig
from rigiditylab.core.exceptions import NotEquivalent
from rigiditylab.frameworks.serializers import load_json
from rigiditylab.pogorelov.maps import coordinate_swap, pogorelov
from rigiditylab.pogorelov.pairs import FrameworkPair


class Command(BaseCommand):
    name = "pogorelov"
    help = "Apply the Pogorelov map to an equivalent euclidean pair"

    def add_arguments(self, parser):
        parser.add_argument("pair", help="pair JSON file with 'first' and 'second' frameworks")
        parser.add_argument("--s", type=int, required=True, help="negative directions of the target space")

    def handle(self, run_config: RunConfig) -> CommandResult:
        pair = FrameworkPair.from_json(load_json(run_config.inputs[0]))
        s = run_config.s
        image = pogorelov(pair, s)
        if not pair.is_equivalent():
            raise NotEquivalent("input frameworks do not have equal edge measurements")

        input_congruent = pair.is_congruent()
        output_congruent = image.is_congruent()
        verification = {
            "equivalent": image.is_equivalent(),
            "input_congruent": input_congruent,
            "output_congruent": output_congruent,
            "congruence_reflects": input_congruent == output_congruent,
            "matches_coordinate_swap": image == coordinate_swap(pair, s),
        }
        return CommandResult(
            result={"pair": image.to_json(), "verification": verification},
            summary=f"pogorelov s={s}: equivalent={verification['equivalent']}, "
                    f"congruent={output_congruent}",
        )
