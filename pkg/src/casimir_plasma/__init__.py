"""Disjoining pressure between ideal-conductor plates enclosing a classical
ionic plasma: closed-form kernels, raw-integral oracles, unit bridges, and a
sweep/report CLI."""

__version__ = "0.1.0"

from .errors import CasimirPlasmaError, NumericalError, ValidationError
from .kernels import (AsymptoticBranch, Eigenvalue, MatsubaraSum,
                      PressureBreakdown, ZeroModeConvention,
                      classical_radiation_pressure, eigenvalue,
                      interaction_free_energy, pi_em, pi_em_zero_mode, pi_ion,
                      pi_ion_asymptotic, pi_total)
from .medium import (ClassicalityReport, IonSpecies, SystemState, UnitSystem,
                     classicality_check, debye_kappa, load_species,
                     pressure_to_si, species_from_entries, to_natural)
from .quadrature_oracle import OracleResult, pi_em_raw, pi_ion_raw, pi_total_raw
from .special_functions import (ZETA3, BoseTail, bose_tail, bose_tail_detail,
                                bose_tail_quadrature, zeta3)
from .sweep import (Baseline, OutputFormat, Spacing, SweepAxis, SweepPoint,
                    SweepSpec, axis_values, render_csv, render_json, run_sweep)

__all__ = [
    "__version__",
    "CasimirPlasmaError",
    "NumericalError",
    "ValidationError",
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
    "OracleResult",
    "pi_em_raw",
    "pi_ion_raw",
    "pi_total_raw",
    "ZETA3",
    "BoseTail",
    "bose_tail",
    "bose_tail_detail",
    "bose_tail_quadrature",
    "zeta3",
    "Baseline",
    "OutputFormat",
    "Spacing",
    "SweepAxis",
    "SweepPoint",
    "SweepSpec",
    "axis_values",
    "render_csv",
    "render_json",
    "run_sweep",
]
