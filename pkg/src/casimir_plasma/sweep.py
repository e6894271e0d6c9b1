"""Parameter sweeps over gap, screening or temperature, with CSV/JSON output."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ValidationError
from .kernels import pi_total
from .medium import SystemState, UnitSystem, pressure_to_si, to_natural

__all__ = [
    "Baseline",
    "OutputFormat",
    "Spacing",
    "SweepAxis",
    "SweepPoint",
    "SweepSpec",
    "axis_values",
    "format_float",
    "render_csv",
    "render_json",
    "run_sweep",
]

NATURAL_COLUMNS = ("axis_value", "pi_ion", "pi_em", "pi_em_zero", "pi_total")
SI_COLUMNS = NATURAL_COLUMNS + ("pi_ion_Pa", "pi_em_Pa", "pi_total_Pa")


class SweepAxis(str, Enum):
    GAP = "gap"
    KAPPA = "kappa"
    TEMPERATURE = "temperature"


class Spacing(str, Enum):
    LINEAR = "linear"
    LOG = "log"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


def _coerce(enum_cls, value, what: str):
    try:
        return enum_cls(value)
    except ValueError as exc:
        choices = ", ".join(member.value for member in enum_cls)
        raise ValidationError(f"{what} must be one of: {choices}; got {value!r}") from exc


@dataclass(frozen=True)
class Baseline:
    """Held-fixed conditions for a sweep, in the sweep's unit system. The
    quantity selected as the axis is replaced point by point."""

    temperature: float
    gap: float
    kappa: float


@dataclass(frozen=True)
class SweepSpec:
    """One sweep: which quantity varies, how it is sampled, and how the
    results are written."""

    axis: SweepAxis
    start: float
    stop: float
    points: int
    spacing: Spacing = Spacing.LINEAR
    units: UnitSystem = UnitSystem.NATURAL
    rel_tol: float = 1e-10
    output_format: OutputFormat = OutputFormat.CSV

    def __post_init__(self):
        object.__setattr__(self, "axis", _coerce(SweepAxis, self.axis, "axis"))
        object.__setattr__(self, "spacing", _coerce(Spacing, self.spacing, "spacing"))
        object.__setattr__(self, "units", _coerce(UnitSystem, self.units, "units"))
        object.__setattr__(self, "output_format",
                           _coerce(OutputFormat, self.output_format, "output format"))
        if not (math.isfinite(self.start) and math.isfinite(self.stop)
                and 0.0 < self.start < self.stop):
            raise ValidationError(
                f"sweep needs 0 < start < stop, got start={self.start!r} stop={self.stop!r}")
        if int(self.points) != self.points or self.points < 2:
            raise ValidationError(f"points must be an integer >= 2, got {self.points!r}")
        object.__setattr__(self, "points", int(self.points))
        if not (math.isfinite(self.rel_tol) and 0.0 < self.rel_tol <= 1e-3):
            raise ValidationError(f"rel_tol must lie in (0, 1e-3], got {self.rel_tol!r}")


def axis_values(spec: SweepSpec) -> list[float]:
    """Axis sample points, in sweep order."""
    if spec.spacing is Spacing.LOG:
        grid = np.logspace(math.log10(spec.start), math.log10(spec.stop), spec.points)
    else:
        grid = np.linspace(spec.start, spec.stop, spec.points)
    return [float(v) for v in grid]


@dataclass(frozen=True)
class SweepPoint:
    """One output row; the SI pressure columns are filled only for SI sweeps."""

    axis_value: float
    pi_ion: float
    pi_em: float
    pi_em_zero: float
    pi_total: float
    pi_ion_pa: float | None = None
    pi_em_pa: float | None = None
    pi_total_pa: float | None = None


def _conditions(spec: SweepSpec, base: Baseline, value: float) -> tuple[float, float, float]:
    temperature, gap, kappa = base.temperature, base.gap, base.kappa
    if spec.axis is SweepAxis.GAP:
        gap = value
    elif spec.axis is SweepAxis.KAPPA:
        kappa = value
    else:
        temperature = value
    return temperature, gap, kappa


def run_sweep(spec: SweepSpec, base: Baseline) -> list[SweepPoint]:
    """Evaluate the pressure breakdown at every axis point, in axis order."""
    rows = []
    for value in axis_values(spec):
        temperature, gap, kappa = _conditions(spec, base, value)
        if spec.units is UnitSystem.SI:
            state = to_natural(temperature, gap, kappa)
        else:
            state = SystemState(temperature=temperature, gap=gap, kappa=kappa)
        b = pi_total(state, spec.rel_tol)
        if spec.units is UnitSystem.SI:
            rows.append(SweepPoint(
                value, b.pi_ion, b.pi_em, b.pi_em_zero_mode, b.pi_total,
                pressure_to_si(b.pi_ion, temperature, gap),
                pressure_to_si(b.pi_em, temperature, gap),
                pressure_to_si(b.pi_total, temperature, gap)))
        else:
            rows.append(SweepPoint(value, b.pi_ion, b.pi_em, b.pi_em_zero_mode, b.pi_total))
    return rows


def format_float(value: float) -> str:
    """Fixed 17-significant-digit float formatting for reproducible output."""
    return format(value, ".17g")


def _row_values(point: SweepPoint, si: bool) -> list[float]:
    values = [point.axis_value, point.pi_ion, point.pi_em, point.pi_em_zero, point.pi_total]
    if si:
        values += [point.pi_ion_pa, point.pi_em_pa, point.pi_total_pa]
    return values


def render_csv(points: list[SweepPoint], si: bool) -> str:
    """RFC-4180-style CSV: header row, CRLF line endings, fixed formatting."""
    columns = SI_COLUMNS if si else NATURAL_COLUMNS
    lines = [",".join(columns)]
    for point in points:
        lines.append(",".join(format_float(v) for v in _row_values(point, si)))
    return "\r\n".join(lines) + "\r\n"


def render_json(points: list[SweepPoint], si: bool) -> str:
    """JSON array of row objects with the same keys as the CSV columns."""
    columns = SI_COLUMNS if si else NATURAL_COLUMNS
    rows = [dict(zip(columns, _row_values(point, si))) for point in points]
    return json.dumps(rows, indent=2) + "\n"
