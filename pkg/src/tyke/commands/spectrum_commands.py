"""
Planck curve command.
"""

import argparse
import logging

from .base import BaseCommand, add_grid_arguments, add_output_arguments, parse_float_list
from .writers import STDOUT, PlotSeries, with_suffix_tag, write_csv, write_json, write_svg
from ..config import Settings
from ..core.errors import ModelDomainError
from ..core.planck import peak_wavelength, sample_curve, wavelength_array
from ..models import CommandCategory, CommandResult, OutputFormat

logger = logging.getLogger(__name__)


def temperature_tag(temperature: float) -> str:
    """'4500' for whole kelvins, the round-trip repr otherwise."""
    return str(int(temperature)) if float(temperature).is_integer() else repr(float(temperature))


class PlanckCommand(BaseCommand):
    """Sample Planck curves for a list of temperatures."""

    def __init__(self):
        super().__init__(
            name="planck",
            category=CommandCategory.SPECTRUM,
            description="Sample Planck curves (wavelength vs intensity) for several temperatures",
        )

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "--temperatures",
            dest="planck_temperatures",
            type=parse_float_list,
            default=None,
            help="Comma-separated temperatures in K (default: 4500,6000,7500)",
        )
        add_grid_arguments(parser)
        add_output_arguments(parser, self.formats, self.default_format)

    def _execute(self, settings: Settings) -> CommandResult:
        temperatures = settings.planck_temperatures
        if len(set(temperatures)) != len(temperatures):
            raise ModelDomainError(f"duplicate temperatures in {list(temperatures)}")
        constants = settings.physical_constants()
        grid = settings.wavelength_grid()
        curves = [
            sample_curve(grid, temperature, settings.variant, constants)
            for temperature in temperatures
        ]
        wavelengths = wavelength_array(grid).tolist()
        output = self.default_output(settings)
        outputs = []

        if settings.format is OutputFormat.CSV and output == STDOUT:
            rows = [
                (curve.temperature, wavelength, value)
                for curve in curves
                for wavelength, value in zip(wavelengths, curve.values)
            ]
            outputs.append(write_csv(output, ["temperature_k", "wavelength_m", "intensity"], rows))
        elif settings.format is OutputFormat.CSV:
            for curve in curves:
                path = with_suffix_tag(output, f"_T{temperature_tag(curve.temperature)}")
                outputs.append(
                    write_csv(path, ["wavelength_m", "intensity"], zip(wavelengths, curve.values))
                )
        elif settings.format is OutputFormat.JSON:
            payload = {
                "config": settings.echo(),
                "curves": [
                    {
                        "temperature_k": curve.temperature,
                        "variant": curve.variant.value,
                        "peak_wavelength_m": peak_wavelength(curve),
                        "wavelength_m": wavelengths,
                        "intensity": list(curve.values),
                    }
                    for curve in curves
                ],
            }
            outputs.append(write_json(output, payload))
        else:
            series = [
                PlotSeries(label=f"T = {temperature_tag(curve.temperature)}", xs=wavelengths, ys=curve.values)
                for curve in curves
            ]
            outputs.append(
                write_svg(output, series, "Relation Between Wavelength and Intensity", "Wavelength (m)", "Intensity")
            )

        peaks = {temperature_tag(curve.temperature): peak_wavelength(curve) for curve in curves}
        logger.info(f"Sampled {len(curves)} curves of {grid.count} points")
        return CommandResult(command=self.name, outputs=outputs, summary={"peak_wavelength_m": peaks})
