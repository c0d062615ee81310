"""
Resistance ladder command.
"""

import argparse

from .base import BaseCommand, add_output_arguments
from .writers import PlotSeries, write_csv, write_json, write_svg
from ..config import Settings
from ..core.errors import ModelDomainError
from ..core.quantization import resistance_ladder, smallest_resistance
from ..models import CommandCategory, CommandResult, OutputFormat


class QuantizeCommand(BaseCommand):
    """Tabulate R = n*h/Q^2 and the potential I*R of each rung."""

    def __init__(self):
        super().__init__(
            name="quantize",
            category=CommandCategory.QUANTIZATION,
            description="Tabulate quantized resistances n*h/Q^2 and their potentials",
        )

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--n-min", type=int, default=None, help="First quantum number (default: 1)")
        parser.add_argument("--n-max", type=int, default=None, help="Last quantum number (default: 5)")
        parser.add_argument("--charge", type=float, default=None, help="Charge Q in C (required)")
        parser.add_argument("--current", type=float, default=None, help="Current I in A (default: 1)")
        add_output_arguments(parser, self.formats, self.default_format)

    def _execute(self, settings: Settings) -> CommandResult:
        if settings.charge is None:
            raise ModelDomainError("quantize needs --charge (no default charge is assumed)")
        constants = settings.physical_constants()
        ladder = resistance_ladder(settings.n_max, settings.charge, constants, n_min=settings.n_min)
        # rung n carries n tykes: I*n*h/Q^2
        rows = [(rung.n, rung.resistance, settings.current * rung.resistance) for rung in ladder]
        output = self.default_output(settings)

        if settings.format is OutputFormat.CSV:
            path = write_csv(output, ["n", "resistance_ohm", "tyke_potential_v"], rows)
        elif settings.format is OutputFormat.JSON:
            path = write_json(output, {
                "config": settings.echo(),
                "smallest_resistance_ohm": smallest_resistance(settings.charge, constants),
                "rungs": [
                    {"n": n, "resistance_ohm": resistance, "tyke_potential_v": potential}
                    for n, resistance, potential in rows
                ],
            })
        else:
            series = [PlotSeries(label="R = nh/Q^2", xs=[float(r[0]) for r in rows], ys=[r[1] for r in rows])]
            path = write_svg(output, series, "Quantized Resistance", "n", "Resistance (ohm)")

        return CommandResult(
            command=self.name,
            outputs=[path],
            summary={"rungs": len(rows), "smallest_resistance_ohm": smallest_resistance(settings.charge, constants)},
        )
