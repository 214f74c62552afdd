"""Entry point: ``rigiditylab <command> [options]``."""
import argparse
import sys
from typing import Dict, List, Optional, Type

from rigiditylab import __version__
from rigiditylab.cli.base import EXIT_PARSE, BaseCommand, RunConfig
from rigiditylab.cli.commands import analyze, enumerate as enumerate_cmd, gram, pogorelov, transfer
from rigiditylab.core.config import (
    ConfigError,
    GenericityConfig,
    LoggingConfig,
    OracleConfig,
    validate_required_config,
)
from rigiditylab.core.logging_config import get_logger, setup_logging

logger = get_logger(__name__)

COMMANDS: Dict[str, Type[BaseCommand]] = {
    "analyze": analyze.Command,
    "pogorelov": pogorelov.Command,
    "gram": gram.Command,
    "transfer": transfer.Command,
    "enumerate": enumerate_cmd.Command,
}

INPUT_ARGUMENTS = ("graph", "framework", "pair", "source")


def build_parser(commands: Dict[str, BaseCommand]) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rigiditylab", description="Exact rigidity-transfer toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, command in commands.items():
        sub = subparsers.add_parser(name, help=command.help, description=command.help)
        sub.add_argument("--seed", type=int, default=None,
                         help="base seed (default: RIGIDITYLAB_SEED or 0)")
        sub.add_argument("--bound", type=int, default=None, help="coordinate bound for generic sampling")
        sub.add_argument("--retries", type=int, default=None, help="fresh samples before a negative answer")
        sub.add_argument("--out", default=None, help="write the report here instead of stdout")
        command.add_arguments(sub)
    return parser


def run_config_from(options: argparse.Namespace) -> RunConfig:
    """Resolve every default so the report shows what the run actually used."""
    get = vars(options).get
    starts = get("starts")
    dedup_tol = get("dedup_tol")
    if options.command == "enumerate":
        starts = starts or OracleConfig.get_starts()
        dedup_tol = dedup_tol or OracleConfig.get_dedup_tol()
    return RunConfig(
        command=options.command,
        inputs=[get(name) for name in INPUT_ARGUMENTS if get(name) is not None],
        seed=GenericityConfig.get_seed() if get("seed") is None else get("seed"),
        bound=get("bound") or GenericityConfig.get_bound(),
        retries=get("retries") or GenericityConfig.get_retries(),
        d=get("d"),
        s=get("s"),
        space=get("space"),
        mode=get("mode"),
        witness=bool(get("witness")),
        cone=bool(get("cone")),
        starts=starts,
        dedup_tol=dedup_tol,
        out=get("out"),
        pair_out=get("pair_out"),
    )


def main(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    try:
        setup_logging(level=LoggingConfig.get_level(), use_colors=LoggingConfig.use_colors(), stream=stderr)
        validate_required_config()
        commands = {name: cls(stdout=stdout, stderr=stderr) for name, cls in COMMANDS.items()}
        options = build_parser(commands).parse_args(argv)
        run_config = run_config_from(options)
    except ConfigError as e:
        (stderr or sys.stderr).write(f"configuration error: {e}\n")
        return EXIT_PARSE
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_PARSE

    logger.debug("running %s with %s", run_config.command, run_config)
    return commands[run_config.command].execute(run_config)


def execute_from_command_line(argv: Optional[List[str]] = None) -> None:
    """Run the command named in argv (argv[0] is the program name) and exit with its code."""
    argv = sys.argv if argv is None else argv
    sys.exit(main(argv[1:]))
