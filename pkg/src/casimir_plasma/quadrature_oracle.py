"""Brute-force quadrature of the raw mode-integral pressures.

These recompute the pressures straight from the q-integrals, never through
the series special function, and serve as the anti-regression oracle for the
closed forms in :mod:`casimir_plasma.kernels`. The three raw terms are kept
in their original grouping: the screened static modes, the pure static modes
and the n >= 1 thermal modes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad

from .errors import NumericalError, ValidationError
from .medium import SystemState

__all__ = ["OracleResult", "pi_em_raw", "pi_ion_raw", "pi_total_raw"]

_TWO_PI = 2.0 * math.pi
_FOUR_PI = 4.0 * math.pi
# e^{-2u} is ~1e-31 at the cutoff; the dropped tail is bounded analytically.
_UPPER = 35.0
_AUTO_REL_TOL = 1e-12
_MIN_MODES = 3
_MAX_MODES = 100_000


@dataclass(frozen=True)
class OracleResult:
    """Raw-integral evaluation: value in units T/L^3, an absolute error
    estimate, and the number of integrand evaluations spent."""

    value: float
    abs_error_estimate: float
    evaluations: int


def _coth_minus_one(z: float) -> float:
    return 2.0 * math.exp(-2.0 * z) / (-math.expm1(-2.0 * z))


def _mode_integral(a: float) -> tuple[float, float, int]:
    """int_0^inf u sqrt(u^2 + a^2) (coth(sqrt(u^2 + a^2)) - 1) du for one
    mode offset a, everything measured in units of the gap."""

    def integrand(u: float) -> float:
        w = math.hypot(u, a)
        if w == 0.0:
            return 0.0
        return u * w * _coth_minus_one(w)

    result = quad(integrand, 0.0, _UPPER, epsabs=1e-300, epsrel=1e-12,
                  limit=300, full_output=1)
    value, abserr, info = result[0], result[1], result[2]
    # elementary bound on the dropped u > _UPPER tail
    tail = 2.2 * math.exp(-2.0 * _UPPER) * (
        _UPPER**2 / 2.0 + _UPPER / 2.0 + 0.25 + a * (_UPPER / 2.0 + 0.25))
    if len(result) == 4 and abserr > 1e-8 * abs(value) + 1e-300:
        raise NumericalError("mode-integral quadrature did not converge",
                             achieved_error=abserr)
    return value, abserr + tail, info["neval"]


def pi_ion_raw(state: SystemState) -> OracleResult:
    """Ionic pressure as the difference of the screened and unscreened
    static-mode integrals; cancels identically at kappa = 0."""
    screened, err_s, n_s = _mode_integral(state.kappa_gap)
    pure, err_p, n_p = _mode_integral(0.0)
    return OracleResult((pure - screened) / _FOUR_PI,
                        (err_s + err_p) / _FOUR_PI, n_s + n_p)


def _matsubara_modes(state: SystemState, n_max: int | None):
    """Sum of mode integrals for n >= 1, truncated at n_max or, when n_max
    is None, once the latest mode drops below the auto tolerance."""
    step = _TWO_PI * state.temperature_gap
    total = 0.0
    err = 0.0
    evaluations = 0
    last = math.inf
    before_last = math.inf
    n = 0
    while True:
        if n_max is not None:
            if n >= n_max:
                break
        elif n >= _MIN_MODES and last <= _AUTO_REL_TOL * total:
            break
        if n >= _MAX_MODES:
            raise NumericalError("raw Matsubara sum did not converge",
                                 achieved_error=last / total if total else None)
        n += 1
        value, abserr, neval = _mode_integral(n * step)
        before_last = last
        last = value
        total += value
        err += abserr
        evaluations += neval
    # geometric estimate of the dropped n > n tail
    tail = 0.0
    if n > 0 and last > 0.0:
        ratio = last / before_last if 0.0 < before_last < math.inf else math.exp(-2.0 * step)
        ratio = min(ratio, 1.0 - 1e-6)
        tail = last * ratio / (1.0 - ratio)
    return total, err + tail, evaluations, n


def pi_em_raw(state: SystemState, n_max: int | None = None) -> OracleResult:
    """Electromagnetic pressure from the raw integrals: the half-weight
    n = 0 mode plus the modes n = 1..n_max (auto-truncated by the tail
    bound when n_max is None)."""
    if n_max is not None and n_max < 0:
        raise ValidationError(f"n_max must be >= 0, got {n_max}")
    zero, err_zero, n_zero = _mode_integral(0.0)
    modes, err_modes, evaluations, _ = _matsubara_modes(state, n_max)
    return OracleResult(-(0.5 * zero + modes) / math.pi,
                        (0.5 * err_zero + err_modes) / math.pi,
                        n_zero + evaluations)


def pi_total_raw(state: SystemState) -> OracleResult:
    """Total pressure from the three raw terms as originally grouped (the
    pure static term enters negatively here)."""
    screened, err_s, n_s = _mode_integral(state.kappa_gap)
    pure, err_p, n_p = _mode_integral(0.0)
    modes, err_m, n_m, _ = _matsubara_modes(state, None)
    value = -screened / _FOUR_PI - pure / _FOUR_PI - modes / math.pi
    err = err_s / _FOUR_PI + err_p / _FOUR_PI + err_m / math.pi
    return OracleResult(value, err, n_s + n_p + n_m)
