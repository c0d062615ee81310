"""
Planck spectral curves and quantized oscillator energies.

Two prefactors are supported. The radiance form 2*pi*h*c^2/lambda^5 gives
power per m^2 area per m wavelength; the energy-density form
8*pi*h*c/lambda^5 is the one used to draw the published curves. Both share
the factor 1/(exp(hc/(lambda*k*T)) - 1), so their ratio is the constant 4/c.
"""

import math
from typing import Union

import numpy as np
from loguru import logger
from scipy import constants as codata

from ..models import (
    ConstantsPreset,
    OscillatorEnergy,
    PhysicalConstants,
    PlanckCurve,
    PlanckVariant,
    WavelengthGrid,
)
from .errors import ModelDomainError

ArrayLike = Union[float, np.ndarray]

# Above this exponent 1/(e^x - 1) is taken as exactly zero.
EXPONENT_CUTOFF = 700.0

LISTING_CONSTANTS = PhysicalConstants()
PROSE_CONSTANTS = PhysicalConstants(h=6.626e-34, c=3e8, k=1.38e-23)
CODATA_CONSTANTS = PhysicalConstants(h=codata.h, c=codata.c, k=codata.k, e_charge=codata.e)

_PRESETS = {
    ConstantsPreset.LISTING: LISTING_CONSTANTS,
    ConstantsPreset.PROSE: PROSE_CONSTANTS,
    ConstantsPreset.CODATA: CODATA_CONSTANTS,
}


def constants_for(preset: ConstantsPreset) -> PhysicalConstants:
    """Get the constants of a named preset."""
    return _PRESETS[ConstantsPreset(preset)]


def _check_temperature(temperature: float) -> None:
    if not (isinstance(temperature, (int, float)) and math.isfinite(temperature) and temperature > 0):
        raise ModelDomainError(f"temperature must be positive and finite, got {temperature!r}")


def _as_wavelengths(wavelength: ArrayLike) -> np.ndarray:
    lam = np.asarray(wavelength, dtype=np.float64)
    if lam.size and not np.all(np.isfinite(lam) & (lam > 0)):
        raise ModelDomainError("wavelengths must be positive and finite")
    return lam


def _exponent(lam: np.ndarray, temperature: float, constants: PhysicalConstants) -> np.ndarray:
    """hc/(lambda*k*T)."""
    return (constants.h * constants.c) / (constants.k * temperature * lam)


def _prefactor(lam: np.ndarray, variant: PlanckVariant, constants: PhysicalConstants) -> np.ndarray:
    if variant is PlanckVariant.RADIANCE:
        return (2.0 * np.pi * constants.h * constants.c ** 2) / lam ** 5
    return (8.0 * np.pi * constants.h * constants.c) / lam ** 5


def planck_values(
    wavelength: ArrayLike,
    temperature: float,
    variant: PlanckVariant = PlanckVariant.ENERGY_DENSITY,
    constants: PhysicalConstants = LISTING_CONSTANTS,
) -> np.ndarray:
    """Evaluate a Planck variant over an array of wavelengths (m)."""
    _check_temperature(temperature)
    lam = np.atleast_1d(_as_wavelengths(wavelength))
    variant = PlanckVariant(variant)
    x = _exponent(lam, temperature, constants)
    # zero past the cutoff; the prefactor is only formed where it can be finite
    out = np.zeros_like(x)
    mask = x <= EXPONENT_CUTOFF
    out[mask] = _prefactor(lam[mask], variant, constants) / np.expm1(x[mask])
    return out


def planck_radiance(
    wavelength: float, temperature: float, constants: PhysicalConstants = LISTING_CONSTANTS
) -> float:
    """Spectral power per m^2 area per m wavelength (W m^-3)."""
    return float(planck_values(wavelength, temperature, PlanckVariant.RADIANCE, constants)[0])


def planck_energy_density(
    wavelength: float, temperature: float, constants: PhysicalConstants = LISTING_CONSTANTS
) -> float:
    """Spectral energy density (J m^-4), the prefactor used for the published curves."""
    return float(planck_values(wavelength, temperature, PlanckVariant.ENERGY_DENSITY, constants)[0])


def wavelength_array(grid: WavelengthGrid) -> np.ndarray:
    """Sample wavelengths start + i*step for i in [0, count)."""
    return grid.start + np.arange(grid.count, dtype=np.float64) * grid.step


def sample_curve(
    grid: WavelengthGrid,
    temperature: float,
    variant: PlanckVariant = PlanckVariant.ENERGY_DENSITY,
    constants: PhysicalConstants = LISTING_CONSTANTS,
) -> PlanckCurve:
    """Sample a Planck variant over a wavelength grid."""
    values = planck_values(wavelength_array(grid), temperature, variant, constants)
    logger.debug(f"Sampled {grid.count} points of the {PlanckVariant(variant).value} curve at {temperature} K")
    return PlanckCurve(
        grid=grid,
        temperature=temperature,
        variant=variant,
        values=tuple(values.tolist()),
    )


def peak_wavelength(curve: PlanckCurve) -> float:
    """Grid wavelength of the largest sample (first one on ties)."""
    index = int(np.argmax(np.asarray(curve.values)))
    return curve.grid.wavelength(index)


def photon_frequency(wavelength: float, constants: PhysicalConstants = LISTING_CONSTANTS) -> float:
    """nu = c / lambda."""
    _as_wavelengths(wavelength)
    return constants.c / wavelength


def oscillator_energy(
    n: int, frequency: float, constants: PhysicalConstants = LISTING_CONSTANTS
) -> OscillatorEnergy:
    """Energy n*h*nu of the n-th oscillator level."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ModelDomainError(f"quantum number must be an integer >= 1, got {n!r}")
    if not (math.isfinite(frequency) and frequency > 0):
        raise ModelDomainError(f"frequency must be positive and finite, got {frequency!r}")
    return OscillatorEnergy(n=n, frequency=frequency, energy=n * constants.h * frequency)


def quantum_of_energy(frequency: float, constants: PhysicalConstants = LISTING_CONSTANTS) -> OscillatorEnergy:
    """The smallest oscillator energy, h*nu."""
    return oscillator_energy(1, frequency, constants)
