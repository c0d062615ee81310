"""
Resistance quantization R = n*h/Q^2 and the tyke potential.

The ladder follows from E = n*h*nu and P = E/t = I^2*R, which give
R = n*h*nu/(I^2*t). Substituting I = Q/T and nu = 1/T leaves
R = (n*h/Q^2) * (t/T); the phase fraction t/T is dropped because n already
ranks the levels.
"""

import math
from typing import List

from loguru import logger

from ..models import (
    MAX_QUANTUM_NUMBER,
    DerivationTrace,
    PhysicalConstants,
    QuantumResistor,
    TykePotential,
)
from .errors import ModelDomainError
from .planck import LISTING_CONSTANTS, oscillator_energy

CONSISTENCY_TOLERANCE = 1e-12


def _check_quantum_number(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise ModelDomainError(f"quantum number must be an integer, got {n!r}")
    if not 1 <= n <= MAX_QUANTUM_NUMBER:
        raise ModelDomainError(f"quantum number must lie in [1, 2^53 - 1], got {n}")


def _check_charge(charge: float) -> None:
    if not math.isfinite(charge) or charge == 0:
        raise ModelDomainError(f"charge must be finite and nonzero, got {charge!r}")


def quantized_resistance(
    n: int, charge: float, constants: PhysicalConstants = LISTING_CONSTANTS
) -> QuantumResistor:
    """The n-th rung n*h/Q^2. The sign of Q does not matter."""
    _check_quantum_number(n)
    _check_charge(charge)
    squared = charge * charge
    if squared == 0 or not math.isfinite(squared):
        raise ModelDomainError(f"charge {charge!r} squared leaves the float range")
    resistance = n * constants.h / squared
    if resistance == 0 or not math.isfinite(resistance):
        raise ModelDomainError(f"resistance for n={n}, Q={charge!r} is not representable")
    return QuantumResistor(n=n, charge=charge, resistance=resistance)


def smallest_resistance(charge: float, constants: PhysicalConstants = LISTING_CONSTANTS) -> float:
    """h/Q^2, the n = 1 rung."""
    return quantized_resistance(1, charge, constants).resistance


def resistance_ladder(
    n_max: int, charge: float, constants: PhysicalConstants = LISTING_CONSTANTS, n_min: int = 1
) -> List[QuantumResistor]:
    """Rungs n_min..n_max inclusive."""
    _check_quantum_number(n_min)
    _check_quantum_number(n_max)
    if n_max < n_min:
        raise ModelDomainError(f"empty ladder: n_max {n_max} < n_min {n_min}")
    return [quantized_resistance(n, charge, constants) for n in range(n_min, n_max + 1)]


def tyke_potential(
    current: float, charge: float, constants: PhysicalConstants = LISTING_CONSTANTS
) -> TykePotential:
    """Potential across the smallest resistance: I*h/Q^2."""
    if not math.isfinite(current):
        raise ModelDomainError(f"current must be finite, got {current!r}")
    potential = current * smallest_resistance(charge, constants)
    if not math.isfinite(potential):
        raise ModelDomainError(f"tyke potential overflows for I={current!r}, Q={charge!r}")
    return TykePotential(current=current, charge=charge, potential=potential)


def phase_fraction(theta: float) -> float:
    """t/T = theta/(2*pi) for theta in [0, 2*pi]."""
    if not (0.0 <= theta <= 2.0 * math.pi):
        raise ModelDomainError(f"phase must lie in [0, 2*pi], got {theta!r}")
    return theta / (2.0 * math.pi)


def time_from_phase(theta: float, frequency: float) -> float:
    """Time t at phase theta of an oscillation with frequency nu."""
    if not (math.isfinite(frequency) and frequency > 0):
        raise ModelDomainError(f"frequency must be positive and finite, got {frequency!r}")
    return phase_fraction(theta) / frequency


def _close(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=CONSISTENCY_TOLERANCE, abs_tol=0.0)


def verify_derivation(
    n: int,
    frequency: float,
    current: float,
    duration: float,
    constants: PhysicalConstants = LISTING_CONSTANTS,
) -> DerivationTrace:
    """Build every step from E = n*h*nu to R = n*h*nu/(I^2*t) and check the identities."""
    for name, value in (("current", current), ("duration", duration)):
        if not (math.isfinite(value) and value > 0):
            raise ModelDomainError(f"{name} must be positive and finite, got {value!r}")

    energy = oscillator_energy(n, frequency, constants).energy
    power = energy / duration
    resistance = power / current ** 2
    voltage = current * resistance
    closed_form = n * constants.h * frequency / (current ** 2 * duration)

    checks = {
        "P = I*V": (power, current * voltage),
        "P = I^2*R": (power, current ** 2 * resistance),
        "E = I^2*R*t": (energy, current ** 2 * resistance * duration),
        "R = n*h*nu/(I^2*t)": (resistance, closed_form),
    }
    for identity, (lhs, rhs) in checks.items():
        if not _close(lhs, rhs):
            raise ModelDomainError(f"derivation identity {identity} fails: {lhs!r} != {rhs!r}")

    logger.debug(f"Derivation n={n} nu={frequency} I={current} t={duration} -> R={resistance}")
    return DerivationTrace(
        n=n,
        frequency=frequency,
        power=power,
        energy=energy,
        time=duration,
        current=current,
        voltage=voltage,
        resistance=resistance,
    )
