"""Command-line interface: single-point computation, parameter sweeps,
zero-mode convention comparison, and figure-bearing reports."""

from __future__ import annotations

import argparse
import json
import math
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .errors import NumericalError, ValidationError
from .kernels import ZeroModeConvention, pi_em_zero_mode, pi_ion, pi_total
from .medium import (SystemState, UnitSystem, debye_kappa, load_species,
                     pressure_to_si, species_from_entries, to_natural)
from .quadrature_oracle import pi_em_raw, pi_ion_raw, pi_total_raw
from .sweep import (Baseline, OutputFormat, SweepAxis, SweepSpec, render_csv,
                    render_json, run_sweep)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4

_TOOL = "casimir-plasma"


def _add_state_flags(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument("--temperature", type=float, required=required,
                        help="temperature (natural units; kelvin with --units si)")
    parser.add_argument("--gap", type=float, required=required,
                        help="plate separation (natural units; meters with --units si)")
    parser.add_argument("--kappa", type=float, default=None,
                        help="inverse Debye length (natural units; 1/m with --units si)")
    parser.add_argument("--species", type=Path, default=None,
                        help="JSON file of ion species {charge, density, mass?}; "
                             "kappa is computed from it")
    parser.add_argument("--units", choices=[u.value for u in UnitSystem],
                        default=None, help="unit system (default natural)")
    parser.add_argument("--rel-tol", type=float, default=None,
                        help="relative truncation tolerance for the thermal mode sum "
                             "(default 1e-10)")


def _resolve_state(args) -> tuple[SystemState, UnitSystem, float]:
    """Build the natural-unit state from flags; returns (state, units, kappa
    in input units)."""
    units = UnitSystem(args.units or "natural")
    if args.kappa is not None and args.species is not None:
        raise ValidationError("--kappa and --species are mutually exclusive")
    if args.kappa is None and args.species is None:
        raise ValidationError("one of --kappa or --species is required")
    if args.species is not None:
        kappa = debye_kappa(load_species(args.species), args.temperature, units)
    else:
        kappa = args.kappa
    if units is UnitSystem.SI:
        state = to_natural(args.temperature, args.gap, kappa)
    else:
        state = SystemState(temperature=args.temperature, gap=args.gap, kappa=kappa)
    return state, units, kappa


def _rel_delta(raw: float, closed: float) -> float:
    if raw == closed:
        return 0.0
    return abs(raw - closed) / max(abs(raw), abs(closed))


def _check_finite(node, where="record") -> None:
    if isinstance(node, dict):
        for key, value in node.items():
            _check_finite(value, f"{where}.{key}")
    elif isinstance(node, float) and not math.isfinite(node):
        raise ValidationError(f"non-finite value in output at {where}")


def _cmd_compute(args) -> int:
    state, units, kappa = _resolve_state(args)
    rel_tol = args.rel_tol if args.rel_tol is not None else 1e-10
    breakdown = pi_total(state, rel_tol)
    record = {
        "tool": _TOOL,
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "inputs": {
            "temperature": args.temperature,
            "gap": args.gap,
            "kappa": kappa,
            "species": str(args.species) if args.species is not None else None,
            "units": units.value,
            "rel_tol": rel_tol,
        },
        "state": {
            "temperature": state.temperature,
            "gap": state.gap,
            "kappa": state.kappa,
            "kappa_L": state.kappa_gap,
            "T_L": state.temperature_gap,
        },
        "pressure": {
            "pi_ion": breakdown.pi_ion,
            "pi_em": breakdown.pi_em,
            "pi_em_zero_mode": breakdown.pi_em_zero_mode,
            "pi_total": breakdown.pi_total,
            "matsubara_terms_used": breakdown.matsubara_terms_used,
            "truncation_error_estimate": breakdown.truncation_error_estimate,
        },
    }
    if units is UnitSystem.SI:
        record["pressure_pa"] = {
            "pi_ion_Pa": pressure_to_si(breakdown.pi_ion, args.temperature, args.gap),
            "pi_em_Pa": pressure_to_si(breakdown.pi_em, args.temperature, args.gap),
            "pi_em_zero_mode_Pa": pressure_to_si(breakdown.pi_em_zero_mode,
                                                 args.temperature, args.gap),
            "pi_total_Pa": pressure_to_si(breakdown.pi_total, args.temperature, args.gap),
        }
    if args.oracle:
        record["oracle_deltas"] = {
            "pi_ion": _rel_delta(pi_ion_raw(state).value, breakdown.pi_ion),
            "pi_em": _rel_delta(pi_em_raw(state).value, breakdown.pi_em),
            "pi_total": _rel_delta(pi_total_raw(state).value, breakdown.pi_total),
        }
    _check_finite(record)
    print(json.dumps(record, indent=2))
    return EXIT_OK


def _cmd_compare(args) -> int:
    state, _, _ = _resolve_state(args)
    schwinger = pi_em_zero_mode(ZeroModeConvention.SCHWINGER)
    lifshitz = pi_em_zero_mode(ZeroModeConvention.LIFSHITZ)
    screened = pi_ion(state) + schwinger
    print(f"kappa_L = {state.kappa_gap:.17g}")
    print(f"{'row':<24}pressure_T_per_L3")
    for name, value in (("schwinger_zero_mode", schwinger),
                        ("lifshitz_zero_mode", lifshitz),
                        ("ion_screened_total", screened)):
        print(f"{name:<24}{value:.17g}")
    print(f"schwinger_to_lifshitz_ratio {schwinger / lifshitz:.6f}")
    print(f"screened_to_lifshitz_ratio {screened / lifshitz:.6f}")
    return EXIT_OK


def _pick(args, config: dict, name: str, flag_name: str | None = None, default=None):
    value = getattr(args, flag_name or name, None)
    if value is not None:
        return value
    return config.get(name, default)


def _load_config(path) -> dict:
    if path is None:
        return {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read config file {path}: {exc}") from exc
    try:
        config = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(config, dict):
        raise ValidationError("config file must hold a JSON object")
    return config


def _as_number(value, name: str) -> float:
    try:
        return float(value)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"'{name}' must be a number, got {value!r}") from exc


def _assemble_sweep(args, force_csv: bool = False) -> tuple[SweepSpec, Baseline]:
    config = _load_config(getattr(args, "config", None))
    axis = _pick(args, config, "axis")
    start = _pick(args, config, "start")
    stop = _pick(args, config, "stop")
    points = _pick(args, config, "points")
    for name, value in (("axis", axis), ("start", start), ("stop", stop), ("points", points)):
        if value is None:
            raise ValidationError(f"sweep needs '{name}' (flag or config entry)")
    spec = SweepSpec(
        axis=axis,
        start=_as_number(start, "start"),
        stop=_as_number(stop, "stop"),
        points=_as_number(points, "points"),
        spacing=_pick(args, config, "spacing", default="linear"),
        units=_pick(args, config, "units", default="natural"),
        rel_tol=_as_number(_pick(args, config, "rel_tol", default=1e-10), "rel_tol"),
        output_format="csv" if force_csv else _pick(args, config, "output_format",
                                                    default="csv"),
    )

    temperature = _pick(args, config, "temperature")
    gap = _pick(args, config, "gap")
    kappa = _pick(args, config, "kappa")
    species_path = getattr(args, "species", None) or config.get("species_file")
    species_inline = config.get("species")

    if kappa is not None and (species_path is not None or species_inline is not None):
        raise ValidationError("give either kappa or species, not both")
    if spec.axis is not SweepAxis.TEMPERATURE and temperature is None:
        raise ValidationError("--temperature is required unless it is the sweep axis")
    if spec.axis is not SweepAxis.GAP and gap is None:
        raise ValidationError("--gap is required unless it is the sweep axis")
    if spec.axis is not SweepAxis.KAPPA and kappa is None:
        if species_path is None and species_inline is None:
            raise ValidationError("--kappa or --species is required unless kappa is the sweep axis")
        if spec.axis is SweepAxis.TEMPERATURE:
            raise ValidationError("kappa from species needs a fixed temperature; "
                                  "pass --kappa directly when sweeping temperature")
        species = (load_species(species_path) if species_path is not None
                   else species_from_entries(species_inline))
        kappa = debye_kappa(species, _as_number(temperature, "temperature"), spec.units)

    base = Baseline(
        temperature=_as_number(temperature, "temperature") if temperature is not None else 1.0,
        gap=_as_number(gap, "gap") if gap is not None else 1.0,
        kappa=_as_number(kappa, "kappa") if kappa is not None else 0.0,
    )
    return spec, base


def _write_text(text: str, path) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", newline="") as handle:
        handle.write(text)


def _cmd_sweep(args) -> int:
    spec, base = _assemble_sweep(args)
    rows = run_sweep(spec, base)
    si = spec.units is UnitSystem.SI
    if spec.output_format is OutputFormat.CSV:
        text = render_csv(rows, si)
    else:
        text = render_json(rows, si)
    _write_text(text, args.output)
    return EXIT_OK


def _cmd_report(args) -> int:
    spec, base = _assemble_sweep(args, force_csv=True)
    rows = run_sweep(spec, base)
    prefix = Path(args.output)
    csv_path = prefix.with_name(prefix.name + ".csv")
    _write_text(render_csv(rows, spec.units is UnitSystem.SI), csv_path)
    from .plotting import render_sweep_figures

    figures = render_sweep_figures(rows, spec, prefix)
    for path in [csv_path, *figures]:
        print(f"wrote {path}")
    return EXIT_OK


def _add_sweep_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, default=None,
                        help="JSON file with sweep settings; flags override it")
    parser.add_argument("--axis", choices=["gap", "kappa", "temperature"], default=None,
                        help="quantity swept along the axis")
    parser.add_argument("--start", type=float, default=None, help="first axis value (> 0)")
    parser.add_argument("--stop", type=float, default=None, help="last axis value (> start)")
    parser.add_argument("--points", type=int, default=None, help="number of samples (>= 2)")
    parser.add_argument("--spacing", choices=["linear", "log"], default=None,
                        help="axis spacing (default linear)")
    _add_state_flags(parser, required=False)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=_TOOL,
        description="Disjoining pressure between ideal-conductor plates "
                    "enclosing a classical ionic plasma.")
    parser.add_argument("--version", action="version", version=f"{_TOOL} {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser(
        "compute", help="evaluate the pressure breakdown at a single state")
    _add_state_flags(compute, required=True)
    compute.add_argument("--oracle", action="store_true",
                         help="also run the raw-integral oracles and report relative deltas")
    compute.set_defaults(handler=_cmd_compute)

    sweep = commands.add_parser(
        "sweep", help="tabulate the pressure breakdown along one axis (CSV or JSON)")
    _add_sweep_flags(sweep)
    sweep.add_argument("--format", dest="output_format", choices=["csv", "json"],
                       default=None, help="output format (default csv)")
    sweep.add_argument("--output", type=Path, default=None,
                       help="output file (default stdout)")
    sweep.set_defaults(handler=_cmd_sweep)

    compare = commands.add_parser(
        "compare", help="compare zero-mode conventions and the ion-screened total")
    _add_state_flags(compare, required=True)
    compare.set_defaults(handler=_cmd_compare)

    report = commands.add_parser(
        "report", help="run a sweep and render figures next to the CSV")
    _add_sweep_flags(report)
    report.add_argument("--output", type=Path, required=True,
                        help="output prefix; writes <prefix>.csv and <prefix>_*.png")
    report.set_defaults(handler=_cmd_report)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
