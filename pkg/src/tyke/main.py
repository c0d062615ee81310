"""
Main entry point for Tyke.

Exit codes: 0 success, 1 evaluation below threshold, 2 validation error,
3 I/O error, 4 unexpected internal error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from loguru import logger
from pydantic import ValidationError

from . import __version__
from .commands.registry import create_command_registry
from .config import load_settings, settings
from .core.errors import TykeError
from .models import ConstantsPreset

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IO = 3
EXIT_INTERNAL = 4

# Keys of the parsed namespace that are not Settings fields
_NON_SETTINGS = {"command", "config"}


class InterceptHandler(logging.Handler):
    """Route stdlib logging records into loguru."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno
        logger.opt(depth=6, exception=record.exc_info).log(level, record.getMessage())


def setup_logging(level: str) -> None:
    """Single stderr sink at `level`; stdlib loggers forward into it.

    Raises ValueError for an unknown level name, leaving the current sinks in place.
    """
    level = logger.level(level.upper()).name
    logger.remove()
    logger.add(sys.stderr, level=level, format="<level>{level: <8}</level> {name}: {message}")
    logging.basicConfig(handlers=[InterceptHandler()], level=0, force=True)


def build_parser(registry=None) -> argparse.ArgumentParser:
    """Top-level parser with one subparser per registered command."""
    registry = registry or create_command_registry()
    parser = argparse.ArgumentParser(
        prog="tyke",
        description="Quantized spiking neuron model: Planck curves, tykes, STDP and spike trains",
        epilog=registry.describe(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", default=None, help="Flat JSON config file")
    parser.add_argument(
        "--log-level", default=None, help=f"Diagnostics level (default: {settings.log_level})"
    )
    parser.add_argument(
        "--constants",
        choices=[preset.value for preset in ConstantsPreset],
        default=None,
        help="Physical constants preset (default: listing)",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    for command in registry.get_enabled_commands():
        subparser = subparsers.add_parser(command.name, help=command.description, description=command.description)
        command.add_arguments(subparser)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    registry = create_command_registry()
    parser = build_parser(registry)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_VALIDATION

    command = registry.get_command(args.command)
    overrides = {key: value for key, value in vars(args).items() if key not in _NON_SETTINGS}

    try:
        setup_logging(args.log_level or settings.log_level)
        resolved = load_settings(args.config, overrides, defaults={"format": command.default_format})
        setup_logging(resolved.log_level)
        result = command.execute(resolved)
    except (ValidationError, TykeError, ValueError) as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_VALIDATION
    except OSError as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_IO
    except Exception:
        logger.exception(f"{args.command}: unexpected error")
        return EXIT_INTERNAL

    logger.debug(f"{command.name} finished with exit code {result.exit_code}")
    return result.exit_code


def main():
    """Main entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
