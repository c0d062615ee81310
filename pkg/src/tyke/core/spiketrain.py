"""
Planck-to-neuron transforms and spike-train generation.

f_x maps wavelength to time (t = lambda/c) and f_y maps intensity to
potential (V = y*A/I). A train is a block of zeros as long as one grid
followed by one transformed Planck curve per temperature.
"""

import math
from typing import List, Tuple, Union

import numpy as np
from loguru import logger

from ..models import PhysicalConstants, SpikeTrain, TrainConfig, TrainSegment, TransformParams
from .errors import ModelDomainError
from .planck import LISTING_CONSTANTS, sample_curve

ArrayLike = Union[float, np.ndarray]


def wavelength_to_time(wavelength: float, constants: PhysicalConstants = LISTING_CONSTANTS) -> float:
    """f_x: lambda / c."""
    if not (math.isfinite(wavelength) and wavelength >= 0):
        raise ModelDomainError(f"wavelength must be nonnegative and finite, got {wavelength!r}")
    return wavelength / constants.c


def time_to_wavelength(time: float, constants: PhysicalConstants = LISTING_CONSTANTS) -> float:
    """Inverse of f_x: t * c."""
    if not (math.isfinite(time) and time >= 0):
        raise ModelDomainError(f"time must be nonnegative and finite, got {time!r}")
    return time * constants.c


def intensity_to_potential(intensity: ArrayLike, params: TransformParams) -> ArrayLike:
    """f_y: y * A / I."""
    return intensity * params.area / params.current


def generate_train(config: TrainConfig, constants: PhysicalConstants = LISTING_CONSTANTS) -> SpikeTrain:
    """Zero prefix of grid.count samples, then one segment per temperature in order."""
    count = config.grid.count
    blocks = [np.zeros(count)]
    segments = []
    for temperature in config.temperatures:
        curve = sample_curve(config.grid, temperature, config.variant, constants)
        blocks.append(intensity_to_potential(np.asarray(curve.values), config.transform))
        segments.append(TrainSegment(start_index=count * (len(segments) + 1), length=count, temperature=temperature))

    potentials = np.concatenate(blocks)
    logger.debug(f"Generated train of {potentials.size} samples, {len(segments)} segments")
    return SpikeTrain(
        sample_period=wavelength_to_time(config.grid.step, constants),
        potentials=tuple(potentials.tolist()),
        segments=tuple(segments),
        prefix_length=count,
    )


def train_times(train: SpikeTrain, t0: float) -> List[float]:
    """Sample times t0 + i * sample_period."""
    if not (math.isfinite(t0) and t0 >= 0):
        raise ModelDomainError(f"t0 must be nonnegative and finite, got {t0!r}")
    return (t0 + np.arange(len(train.potentials), dtype=np.float64) * train.sample_period).tolist()


def segment_accumulation(train: SpikeTrain, segment_index: int) -> float:
    """Sum of the potentials in one segment; index 0 is the zero prefix.

    This reads the accumulation of tyke potentials as a discrete sum.
    """
    if not 0 <= segment_index <= len(train.segments):
        raise ModelDomainError(
            f"segment index {segment_index} out of range [0, {len(train.segments)}]"
        )
    return math.fsum(train.segment_values(segment_index))


def segment_peaks(train: SpikeTrain) -> List[Tuple[int, float]]:
    """(train index, potential) of the largest sample of every temperature segment."""
    peaks = []
    for segment in train.segments:
        values = train.potentials[segment.start_index:segment.start_index + segment.length]
        offset = int(np.argmax(values))
        peaks.append((segment.start_index + offset, values[offset]))
    return peaks
