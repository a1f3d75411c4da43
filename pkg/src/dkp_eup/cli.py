"""Command-line front end: spectra, spacing, wavefunctions, verification, figures.

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 no real spectrum for the requested parameters.

Flag values override a ``--config`` file (plain ``key = value`` lines),
which overrides built-in defaults.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import algebra, figures, oracle, spectrum, wavefunction
from .errors import (ComplexEnergy, ComplexExponent, ComplexShift, DkpError,
                     UnsupportedRegime)
from .model import Branch, ModelParams, Parity, validate

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INVALID = 2
EXIT_NO_SPECTRUM = 3

DEFAULTS = {
    "m": 1.0, "alpha": 0.1, "lambda0": 0.5, "lambdaR": 1.0,
    "J": 0, "n": 0, "n_max": 10,
    "sector": "natural", "branch": "plus",
    "grid_size": None, "tol": None, "out": None,
    "out_dir": "figures", "fig": "all", "only": None, "mutate": None,
    "lambda0_set": None, "alpha_set": None,
}

_FLOAT_KEYS = {"m", "alpha", "lambda0", "lambdaR", "tol"}
_INT_KEYS = {"J", "n", "n_max", "grid_size"}


def _read_config(path: str) -> dict:
    cfg = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"bad config line: {line!r}")
            key, val = (part.strip() for part in line.split("=", 1))
            if key in _FLOAT_KEYS:
                cfg[key] = float(val)
            elif key in _INT_KEYS:
                cfg[key] = int(val)
            else:
                cfg[key] = val
    return cfg


def _fill(args: argparse.Namespace) -> argparse.Namespace:
    cfg = _read_config(args.config) if getattr(args, "config", None) else {}
    for key, default in DEFAULTS.items():
        if not hasattr(args, key):
            continue
        if getattr(args, key) is None:
            setattr(args, key, cfg.get(key, default))
    return args


def _params(args) -> ModelParams:
    return ModelParams(m=args.m, alpha=args.alpha,
                       lambda0=args.lambda0, lambda_r=args.lambdaR)


def _check_params(params: ModelParams) -> int | None:
    report = validate(params)
    if not report.passed:
        print(f"invalid parameters {params}: violated "
              f"{', '.join(report.violations)}", file=sys.stderr)
        return EXIT_INVALID
    return None


def _add_param_flags(p: argparse.ArgumentParser):
    p.add_argument("--m", type=float, help="mass (natural units)")
    p.add_argument("--alpha", type=float, help="deformation parameter")
    p.add_argument("--lambda0", type=float, help="time-component coupling")
    p.add_argument("--lambdaR", type=float, help="radial coupling")
    p.add_argument("--config", help="key = value config file")


def _write_lines(path, lines):
    text = "\n".join(lines) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _energy(params: ModelParams, sector: str, n: int, J: int, branch: Branch):
    if sector == "natural":
        if params.alpha == 0:
            return spectrum.energy_natural_limit(params, n, J, branch)
        return spectrum.energy_natural(params, n, J, branch)
    if sector == "phi":
        return spectrum.energy_unnatural_phi(params, n, branch)
    if sector == "h0":
        return spectrum.energy_unnatural_h0(params, n, branch)
    raise UnsupportedRegime(f"unknown sector {sector!r}")


def cmd_spectrum(args) -> int:
    params = _params(args)
    rc = _check_params(params)
    if rc is not None:
        return rc
    branch = Branch.PLUS if args.branch == "plus" else Branch.MINUS
    lines = ["n,J,parity,branch,E"]
    for n in range(args.n_max + 1):
        level = _energy(params, args.sector, n, args.J, branch)
        parity = "natural" if level.qn.parity is Parity.NATURAL else "unnatural"
        lines.append(f"{n},{level.qn.J},{parity},{args.branch},{level.value:.12g}")
    _write_lines(args.out, lines)
    return EXIT_OK


def cmd_spacing(args) -> int:
    params = _params(args)
    rc = _check_params(params)
    if rc is not None:
        return rc
    lines = ["n,J,spacing"]
    for n in range(args.n_max + 1):
        lines.append(f"{n},{args.J},{spectrum.level_spacing(params, n, args.J):.12g}")
    _write_lines(args.out, lines)
    return EXIT_OK


def cmd_wavefunction(args) -> int:
    params = _params(args)
    rc = _check_params(params)
    if rc is not None:
        return rc
    grid_size = args.grid_size or wavefunction.DEFAULT_GRID_SIZE
    if args.sector == "natural":
        sol = wavefunction.natural_solution(params, args.n, args.J, grid_size)
    else:
        sol = wavefunction.unnatural_solution(params, args.n, args.sector,
                                              grid_size)
    out = args.out or "wavefunction.csv"
    wavefunction.write_csv(sol, out)
    print(f"wrote {out} (E = {sol.energy:.12g}, "
          f"residual = {sol.residual_sup:.3e})", file=sys.stderr)
    return EXIT_OK


# --- verification suite -----------------------------------------------------

VERIFY_CHECKS = ("algebra", "commutators", "closure", "oracle")
REFERENCE_ALPHAS = (0.05, 0.1, 0.2)
REFERENCE_LAMBDA0 = (0.0, 0.5)
REFERENCE_J = (0, 1, 2)
REFERENCE_NMAX = 4
UNNATURAL_ALPHAS = (0.05, 0.1)


def _verify_algebra(failures: list[str]):
    mats = algebra.build_matrices()
    report = algebra.verify_algebra(mats)
    if not report.passed:
        failures.append(f"algebra: {len(report.violations)} violated triples")
    proj = algebra.build_projector(mats)
    want = [1, 1, 1, 1, 0, 0, 0, 0, 0, 0]
    if proj.diagonal() != [complex(v) for v in want]:
        failures.append("algebra: projector diagonal mismatch")


def _verify_commutators(failures: list[str]):
    report = algebra.check_deformed_commutators(alpha=0.1)
    if not report.passed:
        failures.append(
            f"commutators: residuals xx={report.worst_position_position:.2e} "
            f"xp={report.worst_position_momentum:.2e} "
            f"pp={report.worst_momentum_momentum:.2e}")


def _analytic_natural(params: ModelParams, n: int, J: int, mutate: str | None):
    e = spectrum.energy_natural(params, n, J).value
    if mutate == "jj-term":
        # test hook: misweight the rotational term by 10 percent
        e = (e * e + 0.1 * params.alpha * J * (J + 1)) ** 0.5
    return e


def _verify_closure(failures: list[str], mutate: str | None):
    worst = 0.0
    for l0 in REFERENCE_LAMBDA0:
        for al in REFERENCE_ALPHAS:
            for J in REFERENCE_J:
                params = ModelParams(m=1.0, alpha=al, lambda0=l0, lambda_r=1.0)
                for n in range(REFERENCE_NMAX + 1):
                    e = _analytic_natural(params, n, J, mutate)
                    data = spectrum.abc(params, J, e)
                    worst = max(worst, abs(data.B + n))
    if worst > 1e-9:
        failures.append(f"closure: |B + n| = {worst:.3e} > 1e-9")


def _verify_oracle(failures: list[str], grid_size: int, tol: float,
                   mutate: str | None):
    for l0 in REFERENCE_LAMBDA0:
        for al in REFERENCE_ALPHAS:
            for J in REFERENCE_J:
                params = ModelParams(m=1.0, alpha=al, lambda0=l0, lambda_r=1.0)
                analytic = [_analytic_natural(params, n, J, mutate)
                            for n in range(REFERENCE_NMAX + 1)]
                rep = oracle.compare(params, oracle.Sector.natural(J),
                                     analytic, grid_size, tol)
                if not rep.passed:
                    failures.append(f"oracle: {rep.summary()} "
                                    f"(lambda0={l0}, alpha={al})")
    for al in UNNATURAL_ALPHAS:
        params = ModelParams(m=1.0, alpha=al, lambda0=0.0, lambda_r=1.0)
        for sector, fn in ((oracle.Sector.phi(), spectrum.energy_unnatural_phi),
                           (oracle.Sector.h0(), spectrum.energy_unnatural_h0)):
            analytic = [fn(params, n).value for n in range(REFERENCE_NMAX + 1)]
            rep = oracle.compare(params, sector, analytic, grid_size, tol)
            if not rep.passed:
                failures.append(f"oracle: {rep.summary()} (alpha={al})")


def cmd_verify(args) -> int:
    checks = VERIFY_CHECKS if args.only is None else (args.only,)
    grid_size = args.grid_size or 4096
    tol = args.tol or 1e-5
    failures: list[str] = []
    for check in checks:
        before = len(failures)
        t0 = time.perf_counter()
        if check == "algebra":
            _verify_algebra(failures)
        elif check == "commutators":
            _verify_commutators(failures)
        elif check == "closure":
            _verify_closure(failures, args.mutate)
        elif check == "oracle":
            _verify_oracle(failures, grid_size, tol, args.mutate)
        status = "PASS" if len(failures) == before else "FAIL"
        print(f"{status} {check} ({time.perf_counter() - t0:.2f} s)")
    if failures:
        print(json.dumps({"failures": failures}))
        return EXIT_VERIFY_FAIL
    return EXIT_OK


def _float_set(text: str | None):
    if text is None:
        return None
    return tuple(float(tok) for tok in text.split(",") if tok.strip())


def cmd_figures(args) -> int:
    os.makedirs(args.out_dir, exist_ok=True)
    ids = figures.FIGURE_IDS if args.fig == "all" else (args.fig,)
    for fig_id in ids:
        csv_path, svg_path = figures.emit_figure(
            fig_id, args.out_dir,
            lambda0_set=_float_set(args.lambda0_set),
            alpha_set=_float_set(args.alpha_set))
        print(f"wrote {csv_path} {svg_path}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dkp-eup",
        description="Bound states of the deformed spin-one wave equation "
                    "with nonminimal vector coupling")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="closed-form energy levels as CSV")
    _add_param_flags(p)
    p.add_argument("--J", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--sector", choices=("natural", "phi", "h0"))
    p.add_argument("--branch", choices=("plus", "minus"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("spacing", help="level spacing E_{n+1} - E_n as CSV")
    _add_param_flags(p)
    p.add_argument("--J", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_spacing)

    p = sub.add_parser("wavefunction", help="sampled radial solution as CSV")
    _add_param_flags(p)
    p.add_argument("--J", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--sector", choices=("natural", "phi", "h0"))
    p.add_argument("--grid-size", dest="grid_size", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_wavefunction)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--only", choices=VERIFY_CHECKS)
    p.add_argument("--grid-size", dest="grid_size", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--mutate", choices=("jj-term",),
                   help="test hook: corrupt the analytic J(J+1) term")
    p.add_argument("--config", help="key = value config file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figures", help="emit reference figures (CSV + SVG)")
    p.add_argument("--out-dir", dest="out_dir")
    p.add_argument("--fig", choices=figures.FIGURE_IDS + ("all",))
    p.add_argument("--lambda0-set", dest="lambda0_set",
                   help="comma-separated lambda0 sweep for fig1")
    p.add_argument("--alpha-set", dest="alpha_set",
                   help="comma-separated alpha sweep for fig2/fig3/fig4")
    p.add_argument("--config", help="key = value config file")
    p.set_defaults(func=cmd_figures)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _fill(args)
        return args.func(args)
    except (ComplexEnergy, ComplexExponent, ComplexShift) as exc:
        print(f"no real spectrum: {exc}", file=sys.stderr)
        return EXIT_NO_SPECTRUM
    except UnsupportedRegime as exc:
        print(f"unsupported regime: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (DkpError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
