"""
Spike-train generation and matched-point evaluation commands.
"""

import argparse
import logging
from typing import List

from .base import (
    BaseCommand,
    add_grid_arguments,
    add_output_arguments,
    add_transform_arguments,
    parse_float_list,
)
from .writers import PlotSeries, write_csv, write_json, write_svg
from ..config import Settings
from ..core.evaluation import (
    compare_segments,
    evaluation_grid,
    match_mask,
    model_reference,
    summarize_segments,
)
from ..core.spiketrain import (
    generate_train,
    segment_accumulation,
    segment_peaks,
    train_times,
    wavelength_to_time,
)
from ..models import CommandCategory, CommandResult, OutputFormat, PlanckVariant, SegmentComparison

logger = logging.getLogger(__name__)

EXIT_BELOW_THRESHOLD = 1


def _add_temperature_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--temperatures",
        dest="train_temperatures",
        type=parse_float_list,
        default=None,
        help="Comma-separated segment temperatures in K (default: 4500,5000,...,7500)",
    )


class SpikeTrainCommand(BaseCommand):
    """Generate the spike train: zero prefix plus one transformed curve per temperature."""

    def __init__(self):
        super().__init__(
            name="spike-train",
            category=CommandCategory.SPIKES,
            description="Generate a spike train from transformed Planck curves",
        )

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_temperature_argument(parser)
        add_grid_arguments(parser)
        add_transform_arguments(parser)
        add_output_arguments(parser, self.formats, self.default_format)

    def _execute(self, settings: Settings) -> CommandResult:
        constants = settings.physical_constants()
        config = settings.train_config()
        train = generate_train(config, constants)
        t0 = wavelength_to_time(config.grid.start, constants)
        times = train_times(train, t0)
        segment_ids = [0] * train.prefix_length
        for segment_id, segment in enumerate(train.segments, start=1):
            segment_ids.extend([segment_id] * segment.length)
        output = self.default_output(settings)

        if settings.format is OutputFormat.CSV:
            path = write_csv(output, ["time_s", "potential_v", "segment_id"], zip(times, train.potentials, segment_ids))
        elif settings.format is OutputFormat.JSON:
            peaks = segment_peaks(train)
            path = write_json(output, {
                "config": settings.echo(),
                "sample_period_s": train.sample_period,
                "t0_s": t0,
                "prefix_length": train.prefix_length,
                "segments": [
                    {
                        "segment_id": segment_id,
                        "temperature_k": segment.temperature,
                        "start_index": segment.start_index,
                        "length": segment.length,
                        "peak_index": peaks[segment_id - 1][0],
                        "peak_potential_v": peaks[segment_id - 1][1],
                        "accumulation": segment_accumulation(train, segment_id),
                    }
                    for segment_id, segment in enumerate(train.segments, start=1)
                ],
                "time_s": times,
                "potential_v": list(train.potentials),
            })
        else:
            series = [PlotSeries(label="spike train", xs=times, ys=train.potentials)]
            path = write_svg(output, series, "Generated Spike Train", "Time (s)", "Potential")

        return CommandResult(
            command=self.name,
            outputs=[path],
            summary={"samples": len(train.potentials), "segments": len(train.segments)},
        )


def _overlay_series(
    comparisons: List[SegmentComparison], t0: float, dt: float, tolerance: float
) -> List[PlotSeries]:
    """Model and reference drawn segment after segment on the evaluation time grid, matches marked."""
    times, model, reference, matched_times, matched_values = [], [], [], [], []
    for comparison in comparisons:
        offset = len(times)
        segment_times = [t0 + (offset + i) * dt for i in range(len(comparison.model))]
        mask = match_mask(comparison.model, comparison.reference, tolerance)
        times.extend(segment_times)
        model.extend(comparison.model)
        reference.extend(comparison.reference)
        matched_times.extend(t for t, hit in zip(segment_times, mask) if hit)
        matched_values.extend(v for v, hit in zip(comparison.model, mask) if hit)
    return [
        PlotSeries(label="model", xs=times, ys=model),
        PlotSeries(label="reference", xs=times, ys=reference),
        PlotSeries(label="matched", xs=matched_times, ys=matched_values, markers=True),
    ]


class EvaluateCommand(BaseCommand):
    """Count matched points between the model and the listing reference."""

    formats = [OutputFormat.JSON, OutputFormat.CSV, OutputFormat.SVG]
    default_format = OutputFormat.JSON

    def __init__(self):
        super().__init__(
            name="evaluate",
            category=CommandCategory.EVALUATION,
            description="Evaluate the generated train against the listing reference by matched points",
        )

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--t0", type=float, default=None, help="First time in s (default: 3.3357e-18)")
        parser.add_argument("--t-max", type=float, default=None, help="Last time in s (default: 9.9770e-15)")
        parser.add_argument("--dt", type=float, default=None, help="Time step in s (default: 3.3357e-17)")
        parser.add_argument("--tolerance", type=float, default=None, help="Relative tolerance (default: 1e-6)")
        parser.add_argument("--threshold", type=float, default=None, help="Passing fraction (default: 0.97)")
        parser.add_argument(
            "--self-check", action="store_const", const=True, default=None,
            help="Compare the model against itself instead of the listing reference",
        )
        _add_temperature_argument(parser)
        parser.add_argument("--variant", choices=[variant.value for variant in PlanckVariant], default=None,
                            help="Planck prefactor of the model (default: energy_density). The listing "
                                 "reference is always energy density, so radiance does not match it")
        add_transform_arguments(parser)
        add_output_arguments(parser, self.formats, self.default_format)

    def _execute(self, settings: Settings) -> CommandResult:
        constants = settings.physical_constants()
        eval_config = settings.eval_config()
        train_config = settings.train_config()
        reference = model_reference(train_config.variant) if settings.self_check else None
        comparisons = compare_segments(eval_config, train_config, constants, reference=reference)
        report = summarize_segments(comparisons, eval_config.tolerance)
        passed = report.fraction >= settings.threshold
        grid = evaluation_grid(eval_config, constants)
        output = self.default_output(settings)

        if settings.format is OutputFormat.JSON:
            payload = report.model_dump(mode="json")
            payload.update({
                "config": settings.echo(),
                "threshold": settings.threshold,
                "passed": passed,
                "lambda_start_m": grid.start,
                "lambda_step_m": grid.step,
            })
            path = write_json(output, payload)
        elif settings.format is OutputFormat.CSV:
            path = write_csv(
                output,
                ["total", "matched", "fraction", "tolerance", "threshold", "passed"],
                [(report.total, report.matched, report.fraction, report.tolerance, settings.threshold, passed)],
            )
        else:
            path = write_svg(
                output,
                _overlay_series(comparisons, eval_config.t0, eval_config.dt, eval_config.tolerance),
                f"Matched Points: {report.matched}/{report.total}",
                "Time (s)",
                "Potential",
            )

        if passed:
            logger.info(f"Matched {report.matched}/{report.total} ({report.fraction:.4f})")
        else:
            logger.warning(
                f"Match fraction {report.fraction:.4f} below threshold {settings.threshold}"
            )
        return CommandResult(
            command=self.name,
            exit_code=0 if passed else EXIT_BELOW_THRESHOLD,
            outputs=[path],
            summary={"total": report.total, "matched": report.matched, "fraction": report.fraction},
        )
