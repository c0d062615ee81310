"""
Command registry for all available subcommands.
"""

from .base import CommandRegistry
from .quantization_commands import QuantizeCommand
from .spectrum_commands import PlanckCommand
from .spike_commands import EvaluateCommand, SpikeTrainCommand
from .synapse_commands import MemristorCommand, StdpCommand


def create_command_registry() -> CommandRegistry:
    """Create and populate the command registry."""
    registry = CommandRegistry()

    # Spectrum
    registry.register_command(PlanckCommand())

    # Spikes
    registry.register_command(SpikeTrainCommand())

    # Quantization
    registry.register_command(QuantizeCommand())

    # Synapse
    registry.register_command(StdpCommand())
    registry.register_command(MemristorCommand())

    # Evaluation
    registry.register_command(EvaluateCommand())

    return registry
