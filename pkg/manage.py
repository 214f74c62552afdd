#!/usr/bin/env python
"""rigiditylab's command-line utility."""
import sys


def main():
    """Run a rigiditylab command."""
    try:
        from rigiditylab.cli.main import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import rigiditylab. Are its dependencies installed and "
            "is the repository root on your PYTHONPATH?"
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == "__main__":
    main()
