"""
Tyke - quantized spiking neuron model.

Planck curves, the resistance ladder R = n*h/Q^2 and its tyke potential, a
memristive STDP synapse, and spike trains built from transformed Planck
curves.
"""

__version__ = "0.1.0"
__author__ = "Tyke Neuron"
__email__ = "tyke@example.com"

from tyke.core.evaluation import count_matches, evaluate_model
from tyke.core.planck import (
    oscillator_energy,
    planck_energy_density,
    planck_radiance,
    sample_curve,
)
from tyke.core.quantization import (
    phase_fraction,
    quantized_resistance,
    smallest_resistance,
    tyke_potential,
    verify_derivation,
)
from tyke.core.spiketrain import (
    generate_train,
    intensity_to_potential,
    segment_accumulation,
    train_times,
    wavelength_to_time,
)
from tyke.core.synapse import apply_stdp, flux_sweep, memristance, stdp_delta

__all__ = [
    "apply_stdp",
    "count_matches",
    "evaluate_model",
    "flux_sweep",
    "generate_train",
    "intensity_to_potential",
    "memristance",
    "oscillator_energy",
    "phase_fraction",
    "planck_energy_density",
    "planck_radiance",
    "quantized_resistance",
    "sample_curve",
    "segment_accumulation",
    "smallest_resistance",
    "stdp_delta",
    "train_times",
    "tyke_potential",
    "verify_derivation",
    "wavelength_to_time",
]
