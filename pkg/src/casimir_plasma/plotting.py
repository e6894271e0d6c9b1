"""Matplotlib rendering for sweep reports (file output only)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .sweep import Spacing, SweepAxis, SweepPoint, SweepSpec

__all__ = ["render_sweep_figures"]

_AXIS_LABELS = {
    SweepAxis.GAP: "gap L",
    SweepAxis.KAPPA: "inverse Debye length kappa",
    SweepAxis.TEMPERATURE: "temperature T",
}


def _apply_style():
    plt.rcParams.update({
        "figure.dpi": 150,
        "axes.grid": True,
        "grid.alpha": 0.3,
        "grid.linestyle": ":",
        "lines.linewidth": 1.5,
        "font.size": 10,
    })


def _axis_label(spec: SweepSpec) -> str:
    unit = " (SI)" if spec.units.value == "si" else ""
    return _AXIS_LABELS[spec.axis] + unit


def render_sweep_figures(points: list[SweepPoint], spec: SweepSpec, prefix) -> list[Path]:
    """Render figures next to a sweep's CSV and return the written paths.

    Always writes ``<prefix>_components.png``; kappa sweeps additionally get
    ``<prefix>_screening.png`` with the screened-to-zero-mode pressure ratio,
    other axes get ``<prefix>_total.png``.
    """
    _apply_style()
    prefix = Path(prefix)
    xs = [p.axis_value for p in points]
    written = []

    fig, ax = plt.subplots(figsize=(5.4, 3.8))
    ax.plot(xs, [p.pi_ion for p in points], color="C0", label="pi_ion")
    ax.plot(xs, [p.pi_em for p in points], color="C1", label="pi_em")
    ax.plot(xs, [p.pi_total for p in points], color="C2", label="pi_total")
    ax.axhline(points[0].pi_em_zero, color="k", lw=0.8, ls="--", label="zero mode")
    if spec.spacing is Spacing.LOG:
        ax.set_xscale("log")
    ax.set_xlabel(_axis_label(spec))
    ax.set_ylabel("pressure [T/L^3]")
    ax.legend(frameon=False)
    path = prefix.with_name(prefix.name + "_components.png")
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(5.4, 3.8))
    if spec.axis is SweepAxis.KAPPA:
        zero = points[0].pi_em_zero
        ax.plot(xs, [(p.pi_ion + zero) / zero for p in points], color="C3")
        ax.axhline(0.5, color="k", lw=0.8, ls="--")
        ax.set_ylabel("(pi_ion + zero mode) / zero mode")
        path = prefix.with_name(prefix.name + "_screening.png")
    else:
        ax.plot(xs, [p.pi_total for p in points], color="C2")
        ax.axhline(points[0].pi_em_zero, color="k", lw=0.8, ls="--", label="zero mode")
        ax.set_ylabel("pi_total [T/L^3]")
        ax.legend(frameon=False)
        path = prefix.with_name(prefix.name + "_total.png")
    if spec.spacing is Spacing.LOG:
        ax.set_xscale("log")
    ax.set_xlabel(_axis_label(spec))
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    written.append(path)
    return written
