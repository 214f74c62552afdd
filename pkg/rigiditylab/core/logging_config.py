"""Logging setup for the rigiditylab command line and library."""
import logging
import sys
from typing import Optional, TextIO

DEFAULT_FORMAT = "%(levelname)s %(name)s: %(message)s"


class ColoredFormatter(logging.Formatter):
    """Colors the level name of console records."""

    COLORS = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
    }
    RESET = "\033[0m"

    def format(self, record: logging.LogRecord) -> str:
        color = self.COLORS.get(record.levelname, "")
        record = logging.makeLogRecord(record.__dict__)
        record.levelname = f"{color}{record.levelname}{self.RESET}"
        return super().format(record)


def setup_logging(
    level: str = "WARNING",
    use_colors: bool = True,
    stream: Optional[TextIO] = None,
    format_string: str = DEFAULT_FORMAT,
) -> None:
    """
    Route every rigiditylab record to one stderr-style handler.

    Reports own stdout, so the handler never writes there. Calling this again
    replaces the previous handler rather than stacking a second one.

    Args:
        level: Level name; unknown names fall back to WARNING
        use_colors: Color level names when the stream is a terminal
        stream: Destination, sys.stderr when omitted
        format_string: Record format
    """
    stream = stream or sys.stderr
    log_level = getattr(logging, level.upper(), logging.WARNING)

    isatty = getattr(stream, "isatty", lambda: False)
    formatter_cls = ColoredFormatter if use_colors and isatty() else logging.Formatter

    handler = logging.StreamHandler(stream)
    handler.setLevel(log_level)
    handler.setFormatter(formatter_cls(format_string))

    package_logger = logging.getLogger("rigiditylab")
    package_logger.setLevel(log_level)
    for old in package_logger.handlers[:]:
        package_logger.removeHandler(old)
    package_logger.addHandler(handler)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
