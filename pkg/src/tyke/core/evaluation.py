"""
Matched-point evaluation of generated spike trains.

Two samples match when |a - b| <= tolerance * max(|a|, |b|, floor). The
absolute floor keeps exact zeros (the train prefix, underflowed tails)
comparable.
"""

import math
from typing import Callable, List, Optional, Sequence

import numpy as np
from loguru import logger

from ..models import (
    EvalConfig,
    MatchReport,
    PhysicalConstants,
    PlanckVariant,
    SegmentComparison,
    TrainConfig,
    WavelengthGrid,
)
from .errors import ModelDomainError
from .planck import LISTING_CONSTANTS, planck_values, wavelength_array
from .reference import listing_curve
from .spiketrain import generate_train, intensity_to_potential, time_to_wavelength

ABSOLUTE_FLOOR = 1e-30
MAX_EVALUATION_POINTS = 10_000_000
# t_max is quoted to five significant digits
ENDPOINT_SLACK = 1e-5

# (wavelengths, temperature, constants) -> intensities
ReferenceCurve = Callable[[np.ndarray, float, PhysicalConstants], np.ndarray]


def match_mask(
    a: Sequence[float], b: Sequence[float], tolerance: float, floor: float = ABSOLUTE_FLOOR
) -> np.ndarray:
    """Boolean array, True where a and b agree within the relative tolerance."""
    first = np.asarray(a, dtype=np.float64)
    second = np.asarray(b, dtype=np.float64)
    if first.shape != second.shape:
        raise ModelDomainError(f"length mismatch: {first.size} vs {second.size}")
    if first.size == 0:
        raise ModelDomainError("cannot compare empty sequences")
    if not (math.isfinite(tolerance) and tolerance >= 0):
        raise ModelDomainError(f"tolerance must be nonnegative, got {tolerance!r}")

    scale = np.maximum(np.maximum(np.abs(first), np.abs(second)), floor)
    return np.abs(first - second) <= tolerance * scale


def count_matches(
    a: Sequence[float], b: Sequence[float], tolerance: float, floor: float = ABSOLUTE_FLOOR
) -> MatchReport:
    """Count indices where a and b agree within the relative tolerance."""
    matches = match_mask(a, b, tolerance, floor)
    total = int(matches.size)
    matched = int(np.count_nonzero(matches))
    misses = np.flatnonzero(~matches)
    return MatchReport(
        total=total,
        matched=matched,
        fraction=matched / total,
        tolerance=tolerance,
        first_mismatch_index=int(misses[0]) if misses.size else None,
    )


def evaluation_grid(config: EvalConfig, constants: PhysicalConstants = LISTING_CONSTANTS) -> WavelengthGrid:
    """Wavelength grid behind the time grid t0, t0 + dt, ..., t_max.

    The point count is floor((t_max * (1 + ENDPOINT_SLACK) - t0) / dt) + 1:
    t0 is always included and the last point never lies more than
    ENDPOINT_SLACK (relative) past t_max.
    """
    steps = (config.t_max * (1.0 + ENDPOINT_SLACK) - config.t0) / config.dt
    if not math.isfinite(steps):
        raise ModelDomainError("evaluation grid step count is not finite")
    count = math.floor(steps) + 1
    if not 1 <= count <= MAX_EVALUATION_POINTS:
        raise ModelDomainError(f"evaluation grid of {count} points is out of range")
    start = time_to_wavelength(config.t0, constants)
    if start <= 0:
        raise ModelDomainError("evaluation grid must start after t = 0")
    return WavelengthGrid(start=start, step=time_to_wavelength(config.dt, constants), count=count)


def model_reference(variant: PlanckVariant) -> ReferenceCurve:
    """Reference built from the library kernels themselves (self-check)."""
    def reference(wavelengths: np.ndarray, temperature: float, constants: PhysicalConstants) -> np.ndarray:
        return planck_values(wavelengths, temperature, variant, constants)
    return reference


def compare_segments(
    config: EvalConfig,
    train_config: TrainConfig,
    constants: PhysicalConstants = LISTING_CONSTANTS,
    reference: Optional[ReferenceCurve] = None,
) -> List[SegmentComparison]:
    """Generate the train on the evaluation grid and pair each segment with its reference."""
    reference = reference or listing_curve
    grid = evaluation_grid(config, constants)
    train = generate_train(train_config.model_copy(update={"grid": grid}), constants)
    wavelengths = wavelength_array(grid)

    comparisons = []
    for index, segment in enumerate(train.segments, start=1):
        model = train.segment_values(index)
        expected = intensity_to_potential(
            np.asarray(reference(wavelengths, segment.temperature, constants)), train_config.transform
        )
        report = count_matches(model, expected, config.tolerance)
        logger.debug(f"Segment {index} at {segment.temperature} K: {report.matched}/{report.total} matched")
        comparisons.append(SegmentComparison(
            temperature=segment.temperature,
            model=tuple(model),
            reference=tuple(float(value) for value in expected),
            report=report,
        ))
    return comparisons


def summarize_segments(comparisons: Sequence[SegmentComparison], tolerance: float) -> MatchReport:
    """`total` is the per-segment point count and `matched` the floor of the
    mean matched count over all temperature segments.
    """
    if not comparisons:
        raise ModelDomainError("no segments to summarize")
    segment_matches = tuple(comparison.report.matched for comparison in comparisons)
    misses = [
        comparison.report.first_mismatch_index
        for comparison in comparisons
        if comparison.report.first_mismatch_index is not None
    ]
    total = comparisons[0].report.total
    matched = sum(segment_matches) // len(segment_matches)
    return MatchReport(
        total=total,
        matched=matched,
        fraction=matched / total,
        tolerance=tolerance,
        first_mismatch_index=min(misses) if misses else None,
        segment_matches=segment_matches,
    )


def evaluate_model(
    config: EvalConfig,
    train_config: TrainConfig,
    constants: PhysicalConstants = LISTING_CONSTANTS,
    reference: Optional[ReferenceCurve] = None,
) -> MatchReport:
    """Count matched points per segment of the train generated on the evaluation grid."""
    return summarize_segments(compare_segments(config, train_config, constants, reference), config.tolerance)
