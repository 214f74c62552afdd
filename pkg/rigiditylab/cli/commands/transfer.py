"""
Move frameworks and pairs between E^(d+1), M^(d+1) and H^d.

Supported routes:
    hyperbolic framework  -> minkowski   cone with positive scales, round trip back
    minkowski framework   -> hyperbolic  rays from the cone vertex
    euclidean framework   -> minkowski   (spiky ->) upper cylindrical -> Pogorelov s=1
    euclidean pair        -> minkowski   Pogorelov s=1 with cylinder and sheet checks
    euclidean pair        -> hyperbolic  the route above, then rays
    minkowski pair        -> hyperbolic  rays, with the sheet of the second member
"""
from typing import Dict

from rigiditylab.cli.base import BaseCommand, CommandError, CommandResult, RunConfig
from rigiditylab.core.exceptions import NotSpiky, UnsupportedSpace
from rigiditylab.frameworks.models import Framework, SpaceKind
from rigiditylab.frameworks.serializers import framework_from_json, framework_to_json, load_json
from rigiditylab.hyperbolic.hyperboloid import hyperbolic_congruent, hyperbolic_equivalent
from rigiditylab.hyperbolic.transfer import (
    cone_to_minkowski,
    is_spiky,
    is_upper_coned,
    is_upper_cylindrical,
    minkowski_to_hyperbolic,
    pogorelov_preserves_cylindrical,
    rotate_spiky_to_cylindrical,
    sheet_classification,
)
from rigiditylab.pogorelov.pairs import FrameworkPair

TARGETS = (SpaceKind.MINKOWSKI.value, SpaceKind.HYPERBOLIC.value)


class Command(BaseCommand):
    name = "transfer"
    help = "Transfer a framework or pair between euclidean, minkowski and hyperbolic space"

    def add_arguments(self, parser):
        parser.add_argument("source", help="framework or pair JSON file")
        parser.add_argument("--space", required=True, choices=TARGETS, help="target space")
        parser.add_argument("--mode", default="exact", choices=("exact", "float"),
                            help="float allows the spiky rotation")

    def handle(self, run_config: RunConfig) -> CommandResult:
        raw = load_json(run_config.inputs[0])
        target = SpaceKind(run_config.space)
        if isinstance(raw, dict) and "first" in raw:
            return self._pair(FrameworkPair.from_json(raw), target)
        return self._framework(framework_from_json(raw), target, run_config)

    # -- single frameworks ---------------------------------------------------

    def _framework(self, f: Framework, target: SpaceKind, run_config: RunConfig) -> CommandResult:
        source = f.space.kind
        if source is SpaceKind.HYPERBOLIC and target is SpaceKind.MINKOWSKI:
            coned = cone_to_minkowski(f, seed=run_config.seed, bound=run_config.bound)
            back = minkowski_to_hyperbolic(coned)
            flags = {
                "upper_coned": is_upper_coned(coned),
                "round_trip_equivalent": hyperbolic_equivalent(back, f),
                "round_trip_congruent": hyperbolic_congruent(back.config, f.config),
            }
            return self._done(framework_to_json(coned), flags, "exact")

        if source is SpaceKind.MINKOWSKI and target is SpaceKind.HYPERBOLIC:
            rays = minkowski_to_hyperbolic(f)
            return self._done(framework_to_json(rays), {"upper_coned": True}, "exact")

        if source is SpaceKind.EUCLIDEAN and target is SpaceKind.MINKOWSKI:
            flags: Dict[str, bool] = {"spiky": is_spiky(f), "upper_cylindrical": is_upper_cylindrical(f)}
            exactness = "exact"
            if not flags["upper_cylindrical"]:
                if not flags["spiky"]:
                    raise NotSpiky("framework is neither spiky nor upper cylindrical")
                if run_config.mode != "float":
                    raise CommandError("the spiky rotation is a float step; rerun with --mode float")
                f = rotate_spiky_to_cylindrical(f)
                exactness = "float"
                flags["rotated_upper_cylindrical"] = is_upper_cylindrical(f)
            image, cylindrical = pogorelov_preserves_cylindrical(FrameworkPair(f, f))
            flags["minkowski_upper_cylindrical"] = cylindrical
            flags["upper_coned"] = is_upper_coned(image.first)
            return self._done(framework_to_json(image.first), flags, exactness)

        raise UnsupportedSpace(f"no transfer from a {source.value} framework to {target.value}")

    # -- pairs ---------------------------------------------------------------

    def _pair(self, pair: FrameworkPair, target: SpaceKind) -> CommandResult:
        source = pair.space.kind
        flags: Dict[str, object] = {}
        if source is SpaceKind.EUCLIDEAN:
            pair, cylindrical = pogorelov_preserves_cylindrical(pair)
            flags["upper_cylindrical"] = cylindrical
            source = SpaceKind.MINKOWSKI
            if target is SpaceKind.MINKOWSKI:
                flags["equivalent"] = pair.is_equivalent()
                flags["sheet"] = sheet_classification(pair).value
                return self._done(pair.to_json(), flags, "exact", key="pair")

        if source is SpaceKind.MINKOWSKI and target is SpaceKind.HYPERBOLIC:
            flags["sheet"] = sheet_classification(pair).value
            rays = FrameworkPair(minkowski_to_hyperbolic(pair.first), minkowski_to_hyperbolic(pair.second))
            flags["equivalent"] = hyperbolic_equivalent(rays.first, rays.second)
            flags["congruent"] = hyperbolic_congruent(rays.first.config, rays.second.config)
            return self._done(rays.to_json(), flags, "exact", key="pair")

        raise UnsupportedSpace(f"no transfer from a {source.value} pair to {target.value}")

    def _done(self, artifact: Dict, flags: Dict, exactness: str, key: str = "framework") -> CommandResult:
        summary = ", ".join(f"{k}={v}" for k, v in flags.items())
        return CommandResult(result={key: artifact, "flags": flags}, exactness=exactness, summary=summary)
