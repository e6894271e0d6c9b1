"""Physical description of the confined plasma and unit bridging.

The pressure kernels work in natural units (k_B = hbar = c = 1) and depend
on the inputs only through the dimensionless groups kappa*L and T*L, so the
SI bridge maps (T_SI, L_SI, kappa_SI) onto those groups exactly: lengths are
measured in units of the gap (L = 1 internally), which keeps 20 orders of
magnitude of SI input scale out of the kernels.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import ValidationError

__all__ = [
    "C_LIGHT",
    "E_CHARGE",
    "EPSILON_0",
    "HBAR",
    "HBAR_C",
    "H_PLANCK",
    "K_B",
    "ClassicalityReport",
    "IonSpecies",
    "SystemState",
    "UnitSystem",
    "classicality_check",
    "debye_kappa",
    "load_species",
    "pressure_to_si",
    "species_from_entries",
    "to_natural",
]

# CODATA 2018. k_B, h, c and e are exact defined values; epsilon_0 is the
# 2018 recommended measurement.
K_B = 1.380649e-23              # J / K
H_PLANCK = 6.62607015e-34       # J s
HBAR = H_PLANCK / (2.0 * math.pi)
C_LIGHT = 299_792_458.0         # m / s
E_CHARGE = 1.602176634e-19      # C
EPSILON_0 = 8.8541878128e-12    # F / m
HBAR_C = HBAR * C_LIGHT         # J m

# Electroneutrality gate: |sum q n| relative to sum |q| n.
_NEUTRALITY_RTOL = 1e-9
# Thermal wavelength over mean spacing below this counts as safely classical.
_CLASSICAL_RATIO = 0.1


class UnitSystem(str, Enum):
    """How user-facing quantities are interpreted."""

    NATURAL = "natural"
    SI = "si"


@dataclass(frozen=True)
class IonSpecies:
    """One mobile ion species: charge, number density, optional mass.

    Natural units: rationalized (Heaviside-Lorentz) charge, density and mass
    with k_B = hbar = c = 1. SI path: charge in multiples of the elementary
    charge, density in 1/m^3, mass in kg.
    """

    charge: float
    density: float
    mass: float | None = None

    def __post_init__(self):
        if not math.isfinite(self.charge):
            raise ValidationError(f"ion charge must be finite, got {self.charge!r}")
        if not (math.isfinite(self.density) and self.density >= 0.0):
            raise ValidationError(f"ion density must be finite and >= 0, got {self.density!r}")
        if self.mass is not None and not (math.isfinite(self.mass) and self.mass > 0.0):
            raise ValidationError(f"ion mass must be finite and > 0, got {self.mass!r}")


@dataclass(frozen=True)
class SystemState:
    """Natural-unit state of the plasma-filled gap.

    temperature and gap are positive; kappa is the inverse Debye length of
    the confined ions (zero for an empty gap).
    """

    temperature: float
    gap: float
    kappa: float

    def __post_init__(self):
        if not (math.isfinite(self.temperature) and self.temperature > 0.0):
            raise ValidationError(f"temperature must be finite and > 0, got {self.temperature!r}")
        if not (math.isfinite(self.gap) and self.gap > 0.0):
            raise ValidationError(f"gap must be finite and > 0, got {self.gap!r}")
        if not (math.isfinite(self.kappa) and self.kappa >= 0.0):
            raise ValidationError(f"kappa must be finite and >= 0, got {self.kappa!r}")

    @property
    def beta(self) -> float:
        """Inverse temperature 1/T."""
        return 1.0 / self.temperature

    @property
    def kappa_gap(self) -> float:
        """Screening group kappa * L."""
        return self.kappa * self.gap

    @property
    def temperature_gap(self) -> float:
        """Thermal group T * L."""
        return self.temperature * self.gap


def _check_neutrality(species: list[IonSpecies]) -> None:
    net = sum(s.charge * s.density for s in species)
    scale = sum(abs(s.charge) * s.density for s in species)
    if scale > 0.0 and abs(net) > _NEUTRALITY_RTOL * scale:
        raise ValidationError(
            f"species are not electroneutral: sum q n = {net:.6e} against scale {scale:.6e}")


def debye_kappa(species: list[IonSpecies], temperature: float,
                units: UnitSystem | str = UnitSystem.NATURAL) -> float:
    """Inverse Debye length of the ion mixture.

    Natural units: kappa = sqrt(sum_a q_a^2 n_a / T). SI: charges are
    multiples of e, densities 1/m^3, and
    kappa = sqrt(sum_a (z_a e)^2 n_a / (eps0 k_B T)) in 1/m (vacuum between
    the plates, relative permittivity 1).

    The mixture must be electroneutral; an empty list returns 0.
    """
    if not (math.isfinite(temperature) and temperature > 0.0):
        raise ValidationError(f"temperature must be finite and > 0, got {temperature!r}")
    if not species:
        return 0.0
    _check_neutrality(species)
    if UnitSystem(units) is UnitSystem.SI:
        charge_sq = sum((s.charge * E_CHARGE) ** 2 * s.density for s in species)
        return math.sqrt(charge_sq / (EPSILON_0 * K_B * temperature))
    charge_sq = sum(s.charge**2 * s.density for s in species)
    return math.sqrt(charge_sq / temperature)


@dataclass(frozen=True)
class ClassicalityReport:
    """Thermal wavelength vs mean inter-ionic spacing for one species."""

    species: IonSpecies
    thermal_wavelength: float
    mean_spacing: float
    ratio: float
    classical: bool


def classicality_check(species: list[IonSpecies], temperature: float,
                       units: UnitSystem | str = UnitSystem.NATURAL) -> list[ClassicalityReport]:
    """Check that each species may be treated as a classical particle.

    Computes the thermal wavelength lambda_a = sqrt(2 pi / (m_a T)) (natural
    units; SI: h / sqrt(2 pi m_a k_B T)) and the mean spacing
    d_a = n_a^(-1/3), and flags species with lambda_a / d_a < 0.1.
    """
    if not (math.isfinite(temperature) and temperature > 0.0):
        raise ValidationError(f"temperature must be finite and > 0, got {temperature!r}")
    si = UnitSystem(units) is UnitSystem.SI
    reports = []
    for index, s in enumerate(species):
        if s.mass is None:
            raise ValidationError(
                f"species #{index} (charge {s.charge}) has no mass; the classical-ion check needs one")
        if si:
            wavelength = H_PLANCK / math.sqrt(2.0 * math.pi * s.mass * K_B * temperature)
        else:
            wavelength = math.sqrt(2.0 * math.pi / (s.mass * temperature))
        spacing = math.inf if s.density == 0.0 else s.density ** (-1.0 / 3.0)
        ratio = 0.0 if math.isinf(spacing) else wavelength / spacing
        reports.append(ClassicalityReport(s, wavelength, spacing, ratio,
                                          ratio < _CLASSICAL_RATIO))
    return reports


def to_natural(temperature_si: float, gap_si: float, kappa_si: float) -> SystemState:
    """Map SI inputs (kelvin, meters, 1/m) onto a natural-unit state.

    Only the dimensionless groups matter: theta = k_B T L / (hbar c) and
    x = kappa L. The returned state measures lengths in units of the gap
    (gap = 1, temperature = theta, kappa = x), so downstream dimensionless
    results are exact.
    """
    if not (math.isfinite(temperature_si) and temperature_si > 0.0):
        raise ValidationError(f"temperature must be finite and > 0, got {temperature_si!r}")
    if not (math.isfinite(gap_si) and gap_si > 0.0):
        raise ValidationError(f"gap must be finite and > 0, got {gap_si!r}")
    if not (math.isfinite(kappa_si) and kappa_si >= 0.0):
        raise ValidationError(f"kappa must be finite and >= 0, got {kappa_si!r}")
    theta = K_B * temperature_si * gap_si / HBAR_C
    return SystemState(temperature=theta, gap=1.0, kappa=kappa_si * gap_si)


def pressure_to_si(p_natural: float, temperature_si: float, gap_si: float) -> float:
    """Convert a dimensionless pressure in units T/L^3 to pascals.

    Pi_SI = p * k_B T_SI / L_SI^3.
    """
    if not math.isfinite(p_natural):
        raise ValidationError(f"pressure must be finite, got {p_natural!r}")
    if not (math.isfinite(temperature_si) and temperature_si > 0.0):
        raise ValidationError(f"temperature must be finite and > 0, got {temperature_si!r}")
    if not (math.isfinite(gap_si) and gap_si > 0.0):
        raise ValidationError(f"gap must be finite and > 0, got {gap_si!r}")
    return p_natural * K_B * temperature_si / gap_si**3


def species_from_entries(entries) -> list[IonSpecies]:
    """Build an electroneutral species list from JSON-style mappings."""
    if not isinstance(entries, list) or not entries:
        raise ValidationError("species data must be a non-empty JSON array")
    species = []
    for index, entry in enumerate(entries):
        if not isinstance(entry, dict) or "charge" not in entry or "density" not in entry:
            raise ValidationError(
                f"species entry #{index} must be an object with 'charge' and 'density'")
        mass = entry.get("mass")
        species.append(IonSpecies(charge=float(entry["charge"]),
                                  density=float(entry["density"]),
                                  mass=None if mass is None else float(mass)))
    _check_neutrality(species)
    return species


def load_species(path) -> list[IonSpecies]:
    """Read ion species from a JSON file of {charge, density, mass?} entries."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read species file {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"species file {path} is not valid JSON: {exc}") from exc
    return species_from_entries(data)
