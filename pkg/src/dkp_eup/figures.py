"""Reference figure data sets, emitted as byte-stable CSV + SVG pairs.

Fixed inputs m = 1, lambda_r = 1 everywhere.  Where the source text leaves a
sweep set open, the values below are the package defaults (flag-overridable
through the CLI):

* fig1: alpha = 0, J = 0, lambda0 in {0, 0.5, 0.8, 1.0}, n = 0..20 -- the
  lambda0 = lambda_r series is a constant line sqrt(m^2 + lambda_r).
* fig2: lambda0 = 0.5, J = 0, alpha in {0, 0.05, 0.1, 0.2}, n = 0..20.
* fig3: level spacing for the fig2 parameter sets, n = 0..200, approaching
  2 sqrt(alpha) for each deformed series.
* fig4: unnatural-parity sectors, lambda0 = 0, alpha in {0.05, 0.1},
  n = 0..20; the scalar-sector energy dominates the longitudinal one.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

from .model import ModelParams
from .spectrum import (energy_natural, energy_natural_limit,
                       energy_unnatural_h0, energy_unnatural_phi,
                       level_spacing)
from .svgplot import write_svg

FIGURE_IDS = ("fig1", "fig2", "fig3", "fig4")

FIG1_LAMBDA0 = (0.0, 0.5, 0.8, 1.0)
FIG2_ALPHA = (0.0, 0.05, 0.1, 0.2)
FIG4_ALPHA = (0.05, 0.1)
FIG12_NMAX = 20
FIG3_NMAX = 200
FIG4_NMAX = 20


@dataclass(frozen=True)
class FigureData:
    fig_id: str
    header: list
    rows: list          # list of tuples, first entry n
    series: list        # (name, xs, ys) for the SVG
    x_label: str
    y_label: str
    title: str


def _natural_energy(m, alpha, lambda0, lambda_r, n, J):
    p = ModelParams(m=m, alpha=alpha, lambda0=lambda0, lambda_r=lambda_r)
    if alpha == 0:
        return energy_natural_limit(p, n, J).value
    return energy_natural(p, n, J).value


def fig1_data(lambda0_values=FIG1_LAMBDA0, n_max=FIG12_NMAX) -> FigureData:
    ns = list(range(n_max + 1))
    cols = [[_natural_energy(1.0, 0.0, l0, 1.0, n, 0) for n in ns]
            for l0 in lambda0_values]
    header = ["n"] + [f"E[lambda0={l0:g}]" for l0 in lambda0_values]
    rows = [(n, *(col[i] for col in cols)) for i, n in enumerate(ns)]
    series = [(f"lambda0={l0:g}", ns, col)
              for l0, col in zip(lambda0_values, cols)]
    return FigureData("fig1", header, rows, series, "n", "E",
                      "undeformed levels vs n")


def fig2_data(alpha_values=FIG2_ALPHA, n_max=FIG12_NMAX) -> FigureData:
    ns = list(range(n_max + 1))
    cols = [[_natural_energy(1.0, al, 0.5, 1.0, n, 0) for n in ns]
            for al in alpha_values]
    header = ["n"] + [f"E[alpha={al:g}]" for al in alpha_values]
    rows = [(n, *(col[i] for col in cols)) for i, n in enumerate(ns)]
    series = [(f"alpha={al:g}", ns, col)
              for al, col in zip(alpha_values, cols)]
    return FigureData("fig2", header, rows, series, "n", "E",
                      "levels vs n for several deformations")


def fig3_data(alpha_values=FIG2_ALPHA, n_max=FIG3_NMAX) -> FigureData:
    ns = list(range(n_max + 1))
    cols = []
    for al in alpha_values:
        p = ModelParams(m=1.0, alpha=al, lambda0=0.5, lambda_r=1.0)
        cols.append([level_spacing(p, n, 0) for n in ns])
    header = ["n"] + [f"dE[alpha={al:g}]" for al in alpha_values]
    rows = [(n, *(col[i] for col in cols)) for i, n in enumerate(ns)]
    series = [(f"alpha={al:g}", ns, col)
              for al, col in zip(alpha_values, cols)]
    # horizontal asymptotes 2 sqrt(alpha) for the deformed curves (SVG only)
    for al in alpha_values:
        if al > 0:
            asym = 2.0 * al ** 0.5
            series.append((f"2 sqrt({al:g})", [0, n_max], [asym, asym],
                           "dashed"))
    return FigureData("fig3", header, rows, series, "n", "dE",
                      "level spacing vs n (plateaus at 2 sqrt(alpha))")


def fig4_data(alpha_values=FIG4_ALPHA, n_max=FIG4_NMAX) -> FigureData:
    ns = list(range(n_max + 1))
    cols = []
    names = []
    for al in alpha_values:
        p = ModelParams(m=1.0, alpha=al, lambda0=0.0, lambda_r=1.0)
        cols.append([energy_unnatural_phi(p, n).value for n in ns])
        names.append(f"E_phi[alpha={al:g}]")
        cols.append([energy_unnatural_h0(p, n).value for n in ns])
        names.append(f"E_h0[alpha={al:g}]")
    header = ["n"] + names
    rows = [(n, *(col[i] for col in cols)) for i, n in enumerate(ns)]
    series = [(name, ns, col) for name, col in zip(names, cols)]
    return FigureData("fig4", header, rows, series, "n", "E",
                      "unnatural-parity levels vs n")


def build_figure(fig_id: str, lambda0_set=None, alpha_set=None) -> FigureData:
    """Build one figure; sweep sets default to the package choices."""
    if fig_id == "fig1":
        return fig1_data(tuple(lambda0_set) if lambda0_set else FIG1_LAMBDA0)
    if fig_id == "fig2":
        return fig2_data(tuple(alpha_set) if alpha_set else FIG2_ALPHA)
    if fig_id == "fig3":
        return fig3_data(tuple(alpha_set) if alpha_set else FIG2_ALPHA)
    if fig_id == "fig4":
        return fig4_data(tuple(alpha_set) if alpha_set else FIG4_ALPHA)
    raise ValueError(f"unknown figure id {fig_id!r}")


def write_csv(data: FigureData, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(",".join(data.header) + "\n")
        for row in data.rows:
            fh.write(",".join(
                str(v) if isinstance(v, int) else f"{v:.12g}" for v in row) + "\n")


def emit_figure(fig_id: str, out_dir, lambda0_set=None,
                alpha_set=None) -> tuple[str, str]:
    """Write <fig>.csv and <fig>.svg into out_dir; returns the two paths."""
    data = build_figure(fig_id, lambda0_set, alpha_set)
    csv_path = os.path.join(out_dir, f"{fig_id}.csv")
    svg_path = os.path.join(out_dir, f"{fig_id}.svg")
    write_csv(data, csv_path)
    write_svg(svg_path, data.series, data.x_label, data.y_label, data.title)
    return csv_path, svg_path
