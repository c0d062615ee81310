"""
Base command classes and the command registry.
"""

import argparse
import logging
from abc import ABC, abstractmethod
from typing import Dict, List, Optional

from ..config import Settings
from ..models import CommandCategory, CommandDefinition, CommandResult, OutputFormat, PlanckVariant

logger = logging.getLogger(__name__)


class BaseCommand(ABC):
    """Base class for all subcommands."""

    formats: List[OutputFormat] = [OutputFormat.CSV, OutputFormat.JSON, OutputFormat.SVG]
    default_format: OutputFormat = OutputFormat.CSV

    def __init__(self, name: str, category: CommandCategory, description: str):
        self.name = name
        self.category = category
        self.description = description
        self.enabled = True

    def execute(self, settings: Settings) -> CommandResult:
        """Run the command with resolved settings."""
        if settings.format not in self.formats:
            raise ValueError(f"{self.name} does not support {settings.format.value} output")
        try:
            result = self._execute(settings)
        except Exception as e:
            logger.debug(f"Error executing command {self.name}: {e}")
            raise
        logger.info(f"Command {self.name} wrote {len(result.outputs)} file(s)")
        return result

    @abstractmethod
    def _execute(self, settings: Settings) -> CommandResult:
        """Command implementation."""
        pass

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Declare the subcommand's flags. Defaults must stay None so config files apply."""
        pass

    def default_output(self, settings: Settings) -> str:
        """Output path used when --output is not given."""
        return settings.output or f"{self.name}.{settings.format.value}"

    def get_definition(self) -> CommandDefinition:
        """Get command definition."""
        return CommandDefinition(
            name=self.name,
            category=self.category,
            description=self.description,
            formats=list(self.formats),
            enabled=self.enabled,
        )


def add_output_arguments(
    parser: argparse.ArgumentParser, formats: List[OutputFormat], default_format: OutputFormat = OutputFormat.CSV
) -> None:
    """--output / --format, shared by every command."""
    parser.add_argument("--output", default=None, help="Output path ('-' for stdout)")
    parser.add_argument(
        "--format",
        choices=[fmt.value for fmt in formats],
        default=None,
        help=f"Output format (default: {default_format.value})",
    )


def add_grid_arguments(parser: argparse.ArgumentParser) -> None:
    """Wavelength grid and Planck variant flags."""
    parser.add_argument("--lambda-start", type=float, default=None, help="First wavelength in m (default: 1e-9)")
    parser.add_argument("--lambda-step", type=float, default=None, help="Wavelength step in m (default: 1e-8)")
    parser.add_argument("--count", type=int, default=None, help="Samples per curve (default: 300)")
    parser.add_argument(
        "--variant",
        choices=[variant.value for variant in PlanckVariant],
        default=None,
        help="Planck prefactor (default: energy_density)",
    )


def add_transform_arguments(parser: argparse.ArgumentParser) -> None:
    """Area and current of the intensity-to-potential transform."""
    parser.add_argument("--area", type=float, default=None, help="Area A in m^2 (default: 1)")
    parser.add_argument("--current", type=float, default=None, help="Current I in A (default: 1)")


def parse_float_list(text: str) -> List[float]:
    """Parse '4500,6000,7500'."""
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


class CommandRegistry:
    """Registry for managing subcommands."""

    def __init__(self):
        self.commands: Dict[str, BaseCommand] = {}
        self.categories: Dict[CommandCategory, List[str]] = {
            category: [] for category in CommandCategory
        }

    def register_command(self, command: BaseCommand):
        """Register a command."""
        if command.name in self.commands:
            raise ValueError(f"Command {command.name} already registered")
        self.commands[command.name] = command
        self.categories[command.category].append(command.name)
        logger.debug(f"Registered command: {command.name}")

    def get_command(self, name: str) -> Optional[BaseCommand]:
        """Get a command by name."""
        return self.commands.get(name)

    def get_commands_by_category(self, category: CommandCategory) -> List[BaseCommand]:
        """Get all commands in a category."""
        return [self.commands[name] for name in self.categories[category] if name in self.commands]

    def get_enabled_commands(self) -> List[BaseCommand]:
        """Get all enabled commands."""
        return [command for command in self.commands.values() if command.enabled]

    def describe(self) -> str:
        """Enabled commands grouped by category with their output formats, for --help."""
        lines = ["commands by category:"]
        for category in CommandCategory:
            commands = [command for command in self.get_commands_by_category(category) if command.enabled]
            if not commands:
                continue
            lines.append(f"  {category.value}:")
            for command in commands:
                definition = command.get_definition()
                formats = ", ".join(fmt.value for fmt in definition.formats)
                lines.append(f"    {definition.name:<12} {formats}")
        return "\n".join(lines)
