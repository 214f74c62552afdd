"""
Base class for rigiditylab subcommands.

A command declares its options in ``add_arguments`` and does its work in
``handle``, which returns a CommandResult. ``execute`` wraps the result in the
report envelope, maps exceptions to exit codes and writes the report.
"""
import logging
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO

from rigiditylab import __version__
from rigiditylab.core.exceptions import BaseRigidityError, ConfigurationError, ParseError
from rigiditylab.core.services.metrics import cli_commands_total
from rigiditylab.frameworks.serializers import dumps

logger = logging.getLogger(__name__)

TOOL = "rigiditylab"

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_INTERNAL = 3


@dataclass
class RunConfig:
    """Every option a run was made with, defaults resolved."""

    command: str
    inputs: List[str]
    seed: int
    bound: int
    retries: int
    d: Optional[int] = None
    s: Optional[int] = None
    space: Optional[str] = None
    mode: Optional[str] = None
    witness: bool = False
    cone: bool = False
    starts: Optional[int] = None
    dedup_tol: Optional[float] = None
    out: Optional[str] = None
    pair_out: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class CommandResult:
    result: Dict[str, Any]
    exit_code: int = EXIT_OK
    exactness: str = "exact"
    summary: str = ""
    artifacts: Dict[str, Any] = field(default_factory=dict)


class CommandError(BaseRigidityError):
    """A command was asked for a combination it does not support."""


class BaseCommand:
    name = ""
    help = ""

    def __init__(self, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr

    def add_arguments(self, parser) -> None:
        pass

    def handle(self, run_config: RunConfig) -> CommandResult:
        raise NotImplementedError("subclasses of BaseCommand must provide a handle() method")

    def execute(self, run_config: RunConfig) -> int:
        error = None
        outcome = None
        try:
            outcome = self.handle(run_config)
            exit_code = outcome.exit_code
        except (ParseError, ConfigurationError) as e:
            exit_code = EXIT_PARSE
            error = e
        except BaseRigidityError as e:
            exit_code = EXIT_NEGATIVE
            error = e
        except Exception as e:
            logger.exception("internal error in %s", self.name)
            exit_code = EXIT_INTERNAL
            error = e

        report = {
            "tool": TOOL,
            "version": __version__,
            "run_config": run_config.to_dict(),
            "exactness": outcome.exactness if outcome else None,
            "result": outcome.result if outcome else None,
        }
        if error is not None:
            report["error"] = {"type": type(error).__name__, "message": str(error)}
            self.stderr.write(f"{self.name}: {type(error).__name__}: {error}\n")
        elif outcome.summary:
            self.stderr.write(outcome.summary + "\n")

        self.write(dumps(report), run_config.out)
        if outcome is not None:
            for path, payload in outcome.artifacts.items():
                self.write(dumps(payload), path)

        cli_commands_total.labels(command=self.name, exit_code=str(exit_code)).inc()
        return exit_code

    def write(self, text: str, path: Optional[str]) -> None:
        if path is None:
            self.stdout.write(text)
            return
        Path(path).write_text(text, encoding="utf-8")
        logger.info("wrote %s", path)
