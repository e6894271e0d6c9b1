"""Closed-form disjoining-pressure kernels.

All pressures are dimensionless numbers in units of T/L^3 (the free energy
in units of T/L^2) and depend on the state only through kappa*L and T*L.
Use :func:`casimir_plasma.medium.pressure_to_si` to convert.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from scipy.integrate import quad

from .errors import NumericalError, ValidationError
from .medium import SystemState
from .special_functions import ZETA3, bose_tail

__all__ = [
    "AsymptoticBranch",
    "Eigenvalue",
    "MatsubaraSum",
    "PressureBreakdown",
    "ZeroModeConvention",
    "classical_radiation_pressure",
    "eigenvalue",
    "interaction_free_energy",
    "pi_em",
    "pi_em_zero_mode",
    "pi_ion",
    "pi_ion_asymptotic",
    "pi_total",
]

FOUR_PI = 4.0 * math.pi
EIGHT_PI = 8.0 * math.pi

_DEFAULT_REL_TOL = 1e-10
_MIN_MATSUBARA_TERMS = 3
_MAX_MATSUBARA_TERMS = 1_000_000


class ZeroModeConvention(str, Enum):
    """Competing values of the n = 0 electromagnetic mode for ideal walls."""

    SCHWINGER = "schwinger"
    LIFSHITZ = "lifshitz"


class AsymptoticBranch(str, Enum):
    """Which limiting regime of the ion pressure to evaluate."""

    LARGE_KAPPA_L = "large"
    SMALL_KAPPA_L = "small"


@dataclass(frozen=True)
class Eigenvalue:
    """Field-mode eigenvalue between the plates and its screened companion.

    lam = q_perp^2 + (pi l / L)^2 + (2 pi n T)^2 and lam_prime = lam + kappa^2,
    where l indexes the lateral momentum pi l / L and n the thermal frequency
    2 pi n T.
    """

    q_perp: float
    n: int
    l: int
    lam: float
    lam_prime: float


def eigenvalue(q_perp: float, n: int, l: int, state: SystemState) -> Eigenvalue:
    """Eigenvalue of the mode (q_perp, n, l) for the given state."""
    if l < 0:
        raise ValidationError(f"lateral index l must be >= 0, got {l}")
    lam = (q_perp * q_perp
           + (math.pi * l / state.gap) ** 2
           + (2.0 * math.pi * n * state.temperature) ** 2)
    return Eigenvalue(q_perp, n, l, lam, lam + state.kappa**2)


def pi_ion(state: SystemState) -> float:
    """Repulsive image-charge pressure of the confined ions.

    Pi_ion = (zeta(3) - B(2 kappa L)/2) / (8 pi) in units T/L^3. Vanishes at
    kappa = 0, grows monotonically with kappa, and saturates at
    zeta(3)/(8 pi) for kappa L >> 1.
    """
    return (ZETA3 - 0.5 * bose_tail(2.0 * state.kappa_gap)) / EIGHT_PI


def pi_ion_asymptotic(state: SystemState, branch: AsymptoticBranch | str) -> float:
    """Limiting forms of :func:`pi_ion`, in units T/L^3.

    zeta(3)/(8 pi) for kappa L >> 1 and (kappa L)^2/(8 pi) for kappa L << 1;
    the branches cross at kappa L = sqrt(zeta(3)) ~ 1.0964.
    """
    if AsymptoticBranch(branch) is AsymptoticBranch.LARGE_KAPPA_L:
        return ZETA3 / EIGHT_PI
    return state.kappa_gap**2 / EIGHT_PI


class MatsubaraSum(NamedTuple):
    """Converged thermal mode sum: value in units T/L^3, number of n >= 1
    terms evaluated, and a geometric estimate of the truncated tail."""

    value: float
    terms_used: int
    error_estimate: float


def _checked_rel_tol(rel_tol: float) -> float:
    rel_tol = float(rel_tol)
    if not (math.isfinite(rel_tol) and 0.0 < rel_tol <= 1e-3):
        raise ValidationError(f"rel_tol must lie in (0, 1e-3], got {rel_tol!r}")
    return rel_tol


def pi_em(state: SystemState, rel_tol: float = _DEFAULT_REL_TOL) -> MatsubaraSum:
    """Electromagnetic (Casimir) pressure as a thermal mode sum.

    Pi_EM = -(1/4 pi) [ B(0)/2 + sum_{n>=1} B(4 pi n T L) ] in units T/L^3,
    with the half weight on the n = 0 term (primed-sum convention). Terms are
    added until the latest one falls below rel_tol of the running sum, never
    fewer than three; the dropped tail is estimated geometrically from the
    observed term ratio. Always negative.
    """
    rel_tol = _checked_rel_tol(rel_tol)
    step = FOUR_PI * state.temperature_gap
    # terms decay like e^{-step}; refuse sums that cannot fit the budget
    expected_terms = (math.log(1.0 / rel_tol) + 10.0) / step
    if expected_terms > _MAX_MATSUBARA_TERMS:
        raise NumericalError(
            f"Matsubara sum needs about {expected_terms:.2g} terms, over the "
            f"budget of {_MAX_MATSUBARA_TERMS}; T*L is too small")
    bracket = 0.5 * bose_tail(0.0)
    previous = math.inf
    tail = 0.0
    for n in range(1, _MAX_MATSUBARA_TERMS + 1):
        term = bose_tail(n * step)
        bracket += term
        if n >= _MIN_MATSUBARA_TERMS and term <= rel_tol * bracket:
            ratio = term / previous if previous > 0.0 else 0.0
            if 0.0 < ratio < 1.0:
                tail = term * ratio / (1.0 - ratio)
            break
        previous = term
    else:
        raise NumericalError("Matsubara sum did not converge within the term budget",
                             achieved_error=term / bracket)
    return MatsubaraSum(-bracket / FOUR_PI, n, tail / FOUR_PI)


def pi_em_zero_mode(convention: ZeroModeConvention | str = ZeroModeConvention.SCHWINGER) -> float:
    """Zero-frequency electromagnetic pressure in units T/L^3.

    The Schwinger convention gives -zeta(3)/(4 pi); the Lifshitz convention
    is exactly half of that.
    """
    schwinger = -ZETA3 / FOUR_PI
    if ZeroModeConvention(convention) is ZeroModeConvention.SCHWINGER:
        return schwinger
    return 0.5 * schwinger


@dataclass(frozen=True)
class PressureBreakdown:
    """Pressure components in units T/L^3.

    pi_total is the exact float sum pi_ion + pi_em; pi_em_zero_mode is the
    (constant) Schwinger n = 0 part of pi_em, kept for reference.
    """

    pi_ion: float
    pi_em: float
    pi_em_zero_mode: float
    pi_total: float
    matsubara_terms_used: int
    truncation_error_estimate: float


def pi_total(state: SystemState, rel_tol: float = _DEFAULT_REL_TOL) -> PressureBreakdown:
    """Full disjoining pressure with its ionic/electromagnetic split."""
    ion = pi_ion(state)
    em = pi_em(state, rel_tol)
    return PressureBreakdown(
        pi_ion=ion,
        pi_em=em.value,
        pi_em_zero_mode=pi_em_zero_mode(ZeroModeConvention.SCHWINGER),
        pi_total=ion + em.value,
        matsubara_terms_used=em.terms_used,
        truncation_error_estimate=em.error_estimate,
    )


def classical_radiation_pressure(state: SystemState) -> float:
    """Pressure of classical thermal radiation between the plates.

    Evaluates -(1/2 pi) int_0^inf q^2 (coth(q L) - 1) dq by quadrature,
    using coth(z) - 1 = 2/(e^{2z} - 1); in units T/L^3 this is analytically
    equal to the Schwinger zero mode -zeta(3)/(4 pi) for every gap.
    """
    gap = state.gap

    def integrand(q: float) -> float:
        z = q * gap
        if z <= 0.0:
            return 0.0
        return q * q * 2.0 * math.exp(-2.0 * z) / (-math.expm1(-2.0 * z))

    result = quad(integrand, 0.0, 25.0 / gap, epsabs=1e-300, epsrel=1e-12,
                  limit=200, full_output=1)
    value, abserr = result[0], result[1]
    if len(result) == 4 and abserr > 1e-9 * abs(value):
        raise NumericalError("radiation-pressure quadrature did not converge",
                             achieved_error=abserr)
    return -(value * gap**3) / (2.0 * math.pi)


def interaction_free_energy(state: SystemState, rel_tol: float = 1e-9) -> float:
    """Interaction free energy per unit area, in units T/L^2.

    g(L) = int_L^inf Pi_total(L') dL' with g -> 0 for a wide gap, so that
    -dg/dL recovers the pressure. Evaluated by adaptive quadrature of the
    closed kernels along the rescaled gap s = L'/L.
    """
    rel_tol = float(rel_tol)
    if not (math.isfinite(rel_tol) and 0.0 < rel_tol <= 1e-2):
        raise ValidationError(f"rel_tol must lie in (0, 1e-2], got {rel_tol!r}")
    inner_tol = max(1e-14, min(rel_tol * 1e-3, 1e-3))

    def integrand(s: float) -> float:
        scaled = SystemState(temperature=state.temperature, gap=state.gap * s,
                             kappa=state.kappa)
        return (pi_ion(scaled) + pi_em(scaled, inner_tol).value) / s**3

    result = quad(integrand, 1.0, math.inf, epsabs=1e-300, epsrel=rel_tol,
                  limit=200, full_output=1)
    value, abserr = result[0], result[1]
    if len(result) == 4 and abserr > 1e-6 * max(abs(value), 1e-12):
        raise NumericalError("free-energy quadrature did not converge",
                             achieved_error=abserr)
    return value
