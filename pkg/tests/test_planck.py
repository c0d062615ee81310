import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError
from scipy import constants as codata

from tests import listing_oracle
from tyke.core.errors import ModelDomainError
from tyke.core.planck import (
    CODATA_CONSTANTS,
    LISTING_CONSTANTS,
    PROSE_CONSTANTS,
    constants_for,
    oscillator_energy,
    peak_wavelength,
    photon_frequency,
    planck_energy_density,
    planck_radiance,
    quantum_of_energy,
    sample_curve,
    wavelength_array,
)
from tyke.models import ConstantsPreset, PhysicalConstants, PlanckVariant, WavelengthGrid

# lambda*T >= 3e-5 m*K keeps hc/(lambda*k*T) below the zero cutoff
wavelengths = st.floats(min_value=1e-7, max_value=1e-3)
temperatures = st.floats(min_value=300.0, max_value=1e5)


def test_listing_constants_are_defaults():
    constants = PhysicalConstants()
    assert (constants.h, constants.c, constants.k) == (6.6261e-34, 2.9979e8, 1.3807e-23)
    assert constants_for(ConstantsPreset.LISTING) == constants


def test_prose_and_codata_presets():
    assert (PROSE_CONSTANTS.h, PROSE_CONSTANTS.c, PROSE_CONSTANTS.k) == (6.626e-34, 3e8, 1.38e-23)
    assert CODATA_CONSTANTS.h == codata.h
    assert constants_for("codata") is CODATA_CONSTANTS


def test_constants_must_be_positive():
    with pytest.raises(ValidationError):
        PhysicalConstants(h=0.0)


def test_radiance_tail_below_peak(fine_grid):
    curve = sample_curve(fine_grid, 6000, PlanckVariant.RADIANCE)
    peak = peak_wavelength(curve)
    assert planck_radiance(3000e-9, 6000) < planck_radiance(peak, 6000)


@pytest.mark.parametrize("temperature", [4500.0, 6000.0, 7500.0])
def test_peak_follows_wien_displacement(fine_grid, temperature):
    for variant in PlanckVariant:
        peak = peak_wavelength(sample_curve(fine_grid, temperature, variant))
        assert 2.88e-3 <= peak * temperature <= 2.92e-3
        assert abs(peak * temperature - 2.898e-3) <= fine_grid.step * temperature


def test_radiance_rises_with_temperature():
    lam = 500e-9
    assert planck_radiance(lam, 4500) < planck_radiance(lam, 6000) < planck_radiance(lam, 7500)


@given(wavelengths, temperatures)
def test_energy_density_is_four_over_c_times_radiance(lam, temperature):
    ratio = planck_energy_density(lam, temperature) / planck_radiance(lam, temperature)
    assert ratio == pytest.approx(4 / LISTING_CONSTANTS.c, rel=1e-12)


@given(wavelengths, temperatures)
def test_values_positive_and_finite(lam, temperature):
    for value in (planck_radiance(lam, temperature), planck_energy_density(lam, temperature)):
        assert math.isfinite(value)
        assert value > 0


def test_overflowing_exponent_gives_zero():
    assert planck_radiance(1e-9, 100) == 0.0
    assert planck_energy_density(1e-9, 4500) == 0.0


@pytest.mark.parametrize("lam", [1e-66, 1e-200])
def test_vanishing_wavelength_gives_zero_not_nan(lam):
    assert planck_radiance(lam, 6000) == 0.0
    assert planck_energy_density(lam, 6000) == 0.0
    values = sample_curve(WavelengthGrid(start=lam, step=1e-9, count=3), 6000).values
    assert all(math.isfinite(value) for value in values)


def test_argmax_identical_across_variants(listing_grid):
    radiance = sample_curve(listing_grid, 6000, PlanckVariant.RADIANCE)
    density = sample_curve(listing_grid, 6000, PlanckVariant.ENERGY_DENSITY)
    assert np.argmax(radiance.values) == np.argmax(density.values)


def test_energy_density_matches_listing_formula():
    expected = listing_oracle.listing_curve([500e-9], 6000)[0]
    assert planck_energy_density(500e-9, 6000) == pytest.approx(expected, rel=1e-12)


def test_sample_curve_reproduces_listing_curve(listing_grid):
    curve = sample_curve(listing_grid, 6000, PlanckVariant.ENERGY_DENSITY)
    expected = listing_oracle.listing_curve(listing_oracle.listing_lambdas(), 6000)
    assert len(curve.values) == 300
    np.testing.assert_allclose(curve.values, expected, rtol=1e-12, atol=0)


def test_single_sample_grid():
    grid = WavelengthGrid(start=500e-9, step=10e-9, count=1)
    curve = sample_curve(grid, 6000)
    assert curve.values == (planck_energy_density(500e-9, 6000),)


def test_curves_ordered_pointwise_by_temperature(listing_grid):
    low, mid, high = (sample_curve(listing_grid, t).values for t in (4500, 6000, 7500))
    for a, b, c in zip(low, mid, high):
        assert a <= b <= c
        if a > 0:
            assert a < b < c


def test_curve_is_unimodal(fine_grid):
    values = np.asarray(sample_curve(fine_grid, 6000).values)
    peak = int(np.argmax(values))
    assert 0 < peak < fine_grid.count - 1
    assert np.all(np.diff(values[:peak + 1]) > 0)
    assert np.all(np.diff(values[peak:]) < 0)


def test_sampling_is_deterministic(listing_grid):
    assert sample_curve(listing_grid, 5500) == sample_curve(listing_grid, 5500)


def test_wavelength_array_is_half_open(listing_grid):
    lambdas = wavelength_array(listing_grid)
    assert lambdas.size == 300
    assert lambdas[0] == 1e-9
    assert lambdas[-1] == pytest.approx(2.991e-6)


@pytest.mark.parametrize("lam, temperature", [(0.0, 6000), (-1e-9, 6000), (500e-9, 0.0), (500e-9, -10.0)])
def test_domain_errors(lam, temperature):
    with pytest.raises(ModelDomainError):
        planck_radiance(lam, temperature)
    with pytest.raises(ModelDomainError):
        planck_energy_density(lam, temperature)


def test_grid_rejects_empty_and_nonpositive():
    with pytest.raises(ValidationError):
        WavelengthGrid(start=1e-9, step=1e-9, count=0)
    with pytest.raises(ValidationError):
        WavelengthGrid(start=0.0, step=1e-9, count=3)
    with pytest.raises(ValidationError):
        WavelengthGrid(start=1e-9, step=0.0, count=3)


def test_sample_curve_rejects_nonpositive_temperature(listing_grid):
    with pytest.raises(ModelDomainError):
        sample_curve(listing_grid, 0.0)


def test_oscillator_energy_quantum():
    energy = oscillator_energy(1, 5e14)
    assert energy.energy == pytest.approx(3.31305e-19, rel=1e-12)
    assert quantum_of_energy(5e14) == energy


@given(st.integers(min_value=1, max_value=10 ** 6), st.floats(min_value=1.0, max_value=1e18))
def test_oscillator_energy_linear_in_n_and_frequency(n, frequency):
    single = oscillator_energy(n, frequency).energy
    assert oscillator_energy(2 * n, frequency).energy == 2 * single
    assert oscillator_energy(n, 2 * frequency).energy == oscillator_energy(2 * n, frequency).energy


@pytest.mark.parametrize("n, frequency", [(0, 5e14), (-1, 5e14), (1, -5e14), (1, 0.0)])
def test_oscillator_energy_rejects_invalid(n, frequency):
    with pytest.raises(ModelDomainError):
        oscillator_energy(n, frequency)


def test_photon_frequency():
    assert photon_frequency(500e-9) == LISTING_CONSTANTS.c / 500e-9
    with pytest.raises(ModelDomainError):
        photon_frequency(0.0)
