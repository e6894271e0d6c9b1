import math

import pytest

import casimir_plasma.kernels
from casimir_plasma.errors import NumericalError, ValidationError
from casimir_plasma.kernels import (AsymptoticBranch, ZeroModeConvention,
                                    classical_radiation_pressure, eigenvalue,
                                    interaction_free_energy, pi_em,
                                    pi_em_zero_mode, pi_ion,
                                    pi_ion_asymptotic, pi_total)
from casimir_plasma.medium import SystemState
from casimir_plasma.special_functions import ZETA3, bose_tail

FOUR_PI = 4 * math.pi
EIGHT_PI = 8 * math.pi


def state_from_groups(kappa_L, two_pi_T_L):
    """State in the gap = 1 gauge with the given kappa*L and 2 pi T*L."""
    return SystemState(temperature=two_pi_T_L / (2 * math.pi), gap=1.0, kappa=kappa_L)


def rel_diff(a, b):
    return abs(a - b) / max(abs(a), abs(b))


# --- eigenvalues -----------------------------------------------------------

def test_eigenvalue_origin():
    ev = eigenvalue(0.0, 0, 0, SystemState(1.0, 1.0, 0.0))
    assert ev.lam == 0.0
    assert ev.lam_prime == 0.0


def test_eigenvalue_first_thermal_mode():
    ev = eigenvalue(0.0, 1, 0, SystemState(1.5, 1.0, 0.0))
    assert math.isclose(ev.lam, (2 * math.pi * 1.5) ** 2, rel_tol=1e-15)


def test_eigenvalue_lateral_mode():
    ev = eigenvalue(0.0, 0, 2, SystemState(1.0, 1.0, 0.0))
    assert math.isclose(ev.lam, 4 * math.pi**2, rel_tol=1e-15)


def test_eigenvalue_screened_offset():
    ev = eigenvalue(0.3, 2, 5, SystemState(1.0, 2.0, 0.7))
    assert ev.lam >= 0.0
    assert math.isclose(ev.lam_prime - ev.lam, 0.49, rel_tol=1e-12)


def test_eigenvalue_negative_lateral_index_rejected():
    with pytest.raises(ValidationError):
        eigenvalue(0.0, 0, -1, SystemState(1.0, 1.0, 0.0))


# --- ionic pressure --------------------------------------------------------

def test_pi_ion_vanishes_without_ions():
    assert pi_ion(SystemState(1.0, 1.0, 0.0)) == 0.0


def test_pi_ion_saturates_at_strong_screening():
    value = pi_ion(state_from_groups(10.0, 1.0))
    assert abs(value - ZETA3 / EIGHT_PI) / (ZETA3 / EIGHT_PI) < 4e-7


def test_pi_ion_weak_screening_quadratic():
    kl = 1e-3
    value = pi_ion(state_from_groups(kl, 1.0))
    leading = kl**2 / EIGHT_PI
    assert rel_diff(value, leading) < 1e-3  # corrections are O(kappa L)


def test_pi_ion_asymptotic_branches():
    state = state_from_groups(3.3, 1.0)
    assert pi_ion_asymptotic(state, AsymptoticBranch.LARGE_KAPPA_L) == ZETA3 / EIGHT_PI
    assert math.isclose(pi_ion_asymptotic(state, AsymptoticBranch.SMALL_KAPPA_L),
                        3.3**2 / EIGHT_PI, rel_tol=1e-15)
    assert pi_ion_asymptotic(SystemState(1.0, 1.0, 0.0),
                             AsymptoticBranch.SMALL_KAPPA_L) == 0.0
    assert math.isclose(pi_ion_asymptotic(state, "large"), 0.047828324503896293,
                        rel_tol=1e-12)


def test_pi_ion_asymptotic_crossover():
    # the branches cross where (kappa L)^2 = zeta(3)
    state = state_from_groups(math.sqrt(ZETA3), 1.0)
    assert math.isclose(pi_ion_asymptotic(state, AsymptoticBranch.LARGE_KAPPA_L),
                        pi_ion_asymptotic(state, AsymptoticBranch.SMALL_KAPPA_L),
                        rel_tol=1e-12)


def test_pi_ion_approaches_each_asymptote():
    strong = state_from_groups(15.0, 1.0)
    weak = state_from_groups(1e-4, 1.0)
    assert rel_diff(pi_ion(strong),
                    pi_ion_asymptotic(strong, AsymptoticBranch.LARGE_KAPPA_L)) < 1e-9
    assert rel_diff(pi_ion(weak),
                    pi_ion_asymptotic(weak, AsymptoticBranch.SMALL_KAPPA_L)) < 1e-3


# --- electromagnetic pressure ----------------------------------------------

def test_pi_em_high_temperature_zero_mode_only():
    result = pi_em(state_from_groups(0.0, 50.0))
    assert result.value == pi_em_zero_mode(ZeroModeConvention.SCHWINGER)
    assert result.terms_used == 3  # the enforced minimum


def test_pi_em_low_temperature_power_law():
    state = state_from_groups(0.0, 0.01)
    per_l4 = pi_em(state).value * state.temperature_gap  # T/L^3 -> 1/L^4
    assert abs(per_l4 - (-math.pi**2 / 240.0)) / (math.pi**2 / 240.0) < 1e-3


def test_pi_em_magnitude_monotone_in_temperature():
    low = abs(pi_em(state_from_groups(0.0, 0.01)).value)
    mid = abs(pi_em(state_from_groups(0.0, 1.0)).value)
    high = abs(pi_em(state_from_groups(0.0, 50.0)).value)
    assert high < mid < low
    # mpmath oracle at 2 pi T L = 1: 0.259269824726
    assert rel_diff(mid, 0.259269824726) < 1e-9


def test_pi_em_matches_direct_bracket():
    # recompute the primed sum directly from the special function
    state = state_from_groups(0.0, 2.0)
    step = 4 * math.pi * state.temperature_gap
    bracket = ZETA3 + sum(bose_tail(n * step) for n in range(1, 60))
    assert math.isclose(pi_em(state).value, -bracket / FOUR_PI, rel_tol=1e-12)


def test_pi_em_rejects_bad_tolerance():
    state = state_from_groups(0.0, 1.0)
    for bad in (0.0, -1e-5, 2e-3, math.nan):
        with pytest.raises(ValidationError):
            pi_em(state, rel_tol=bad)


def test_pi_em_error_estimate_brackets_truncation():
    state = state_from_groups(0.0, 1.0)
    coarse = pi_em(state, rel_tol=1e-4)
    fine = pi_em(state, rel_tol=1e-12)
    assert coarse.terms_used <= fine.terms_used
    assert abs(coarse.value - fine.value) <= 10 * (coarse.error_estimate + 1e-15)


def test_pi_em_term_budget_is_enforced(monkeypatch):
    monkeypatch.setattr(casimir_plasma.kernels, "_MAX_MATSUBARA_TERMS", 10)
    with pytest.raises(NumericalError):
        pi_em(state_from_groups(0.0, 0.05))


def test_pi_em_refuses_vanishing_temperature_gap():
    with pytest.raises(NumericalError):
        pi_em(SystemState(1e-9, 1.0, 0.0))


# --- zero mode and totals ---------------------------------------------------

def test_zero_mode_conventions():
    schwinger = pi_em_zero_mode(ZeroModeConvention.SCHWINGER)
    lifshitz = pi_em_zero_mode(ZeroModeConvention.LIFSHITZ)
    assert schwinger == -ZETA3 / FOUR_PI
    assert math.isclose(schwinger, -0.09565664900779259, rel_tol=1e-14)
    assert lifshitz == 0.5 * schwinger
    assert schwinger == 2.0 * lifshitz  # bit-exact by construction
    assert pi_em_zero_mode("lifshitz") == lifshitz


@pytest.mark.parametrize("gap", [0.1, 1.0, 10.0])
def test_classical_radiation_matches_schwinger_zero_mode(gap):
    value = classical_radiation_pressure(SystemState(1.0, gap, 0.0))
    schwinger = pi_em_zero_mode(ZeroModeConvention.SCHWINGER)
    assert abs(value - schwinger) / abs(schwinger) < 1e-9


def test_classical_radiation_scale_free():
    a = classical_radiation_pressure(SystemState(2.0, 0.37, 0.0))
    b = classical_radiation_pressure(SystemState(2.0, 5.11, 0.0))
    assert math.isclose(a, b, rel_tol=1e-9)


def test_pi_total_reduces_to_em_without_ions():
    breakdown = pi_total(state_from_groups(0.0, 3.0))
    assert breakdown.pi_ion == 0.0
    assert breakdown.pi_total == breakdown.pi_em


def test_pi_total_screened_high_temperature():
    breakdown = pi_total(state_from_groups(10.0, 50.0))
    target = -ZETA3 / EIGHT_PI
    assert abs(breakdown.pi_total - target) / abs(target) < 1e-5


def test_pi_total_is_exact_component_sum():
    breakdown = pi_total(state_from_groups(1.3, 0.8))
    assert breakdown.pi_total == breakdown.pi_ion + breakdown.pi_em
    assert breakdown.pi_ion >= 0.0
    assert breakdown.pi_em < 0.0
    assert breakdown.pi_em_zero_mode == pi_em_zero_mode(ZeroModeConvention.SCHWINGER)


def test_screening_ratio_approaches_half():
    schwinger = pi_em_zero_mode(ZeroModeConvention.SCHWINGER)
    at_10 = (pi_ion(state_from_groups(10.0, 1.0)) + schwinger) / schwinger
    assert abs(at_10 - 0.5) < 1e-6
    at_20 = (pi_ion(state_from_groups(20.0, 1.0)) + schwinger) / schwinger
    assert abs(at_20 - 0.5) < abs(at_10 - 0.5)


# --- interaction free energy -------------------------------------------------

def test_free_energy_high_temperature_plateau():
    # pure zero-mode pressure integrates to -zeta(3)/(8 pi L^2)
    g = interaction_free_energy(state_from_groups(0.0, 40.0))
    assert math.isclose(g, -ZETA3 / EIGHT_PI, rel_tol=1e-6)


def test_free_energy_screened_plateau():
    g = interaction_free_energy(state_from_groups(25.0, 40.0))
    assert math.isclose(g, -ZETA3 / (16 * math.pi), rel_tol=1e-5)


def test_free_energy_derivative_recovers_pressure():
    state = state_from_groups(1.0, 1.0)
    h = 1e-3

    def g_absolute(gap):
        scaled = SystemState(temperature=state.temperature, gap=gap, kappa=state.kappa)
        return interaction_free_energy(scaled, rel_tol=1e-10) * scaled.temperature / gap**2

    force = -(g_absolute(1.0 + h) - g_absolute(1.0 - h)) / (2.0 * h)
    pressure = pi_total(state).pi_total * state.temperature / state.gap**3
    assert abs(force - pressure) / abs(pressure) < 1e-5


def test_free_energy_rejects_bad_tolerance():
    with pytest.raises(ValidationError):
        interaction_free_energy(state_from_groups(0.0, 1.0), rel_tol=0.0)
