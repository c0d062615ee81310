"""
Line-by-line transcription of the published Planck and spike-train listings.

Kept apart from the vectorised kernels in `planck` so the evaluation compares
two independently written pipelines. Overflowing exponentials are left to
IEEE arithmetic exactly as the listings do (1/(inf - 1) == 0).
"""

from typing import Sequence

import numpy as np

from ..models import PhysicalConstants
from .planck import LISTING_CONSTANTS


def listing_curve(
    wavelengths: np.ndarray, temperature: float, constants: PhysicalConstants = LISTING_CONSTANTS
) -> np.ndarray:
    """qu .* (1 ./ (exp(Ai) - 1)) for one temperature."""
    h, c, k = constants.h, constants.c, constants.k
    lambda_tyke = np.asarray(wavelengths, dtype=np.float64)
    qu = (8. * np.pi * h * c) / lambda_tyke ** 5
    ai = (h * c) / (k * temperature * lambda_tyke)
    with np.errstate(over="ignore"):
        return qu * (1. / (np.exp(ai) - 1))


def listing_spike_train(
    wavelengths: np.ndarray,
    temperatures: Sequence[float],
    constants: PhysicalConstants = LISTING_CONSTANTS,
) -> np.ndarray:
    """spike = zeros, then spike = cat(2, spike, sgn) for every temperature."""
    spike = np.zeros(len(wavelengths))
    for ii in temperatures:
        sgn = listing_curve(wavelengths, ii, constants)
        spike = np.concatenate((spike, sgn))
    return spike
