"""Explicit radial eigenfunctions, their normalization and residual audits.

Every solved component has the closed form

    F(rho) = N * rho^a (1-rho)^b * Poly(rho),      rho = alpha r^2 in (0, 1),

where Poly is a terminating Gauss hypergeometric series (degree n).  All
derivatives used anywhere in this module are obtained by term-by-term
differentiation of Poly plus the product rule on the prefactor; no finite
differences enter, so residuals isolate formula errors rather than
discretization error.

Normalization uses the deformed measure: the line integral
int_0^{1/sqrt(alpha)} |F(r)|^2 (1 - alpha r^2)^{-1/2} dr, which in rho
becomes a Jacobi-weighted integral evaluated exactly by Gauss-Jacobi
quadrature on the polynomial part.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import roots_jacobi

from .errors import BadC, DivergentNorm, GridTooCoarse, UnsupportedRegime
from .model import ModelParams, xi_zeta
from .spectrum import (EnergyLevel, energy_natural, energy_unnatural_h0,
                       energy_unnatural_phi, exponents)

DEFAULT_GRID_SIZE = 2048
DEFAULT_RESIDUAL_TOL = 1e-8
_NORM_NODES = 256


def terminating_series_coefficients(A: float, n: int, C: float) -> np.ndarray:
    """Coefficients c_k of 2F1(A, -n; C; rho) = sum_k c_k rho^k, k = 0..n.

    c_k = (A)_k (-n)_k / ((C)_k k!); the series terminates because the
    Pochhammer factor (-n)_k vanishes for every k > n.
    """
    if n < 0:
        raise ValueError("series order n must be >= 0")
    if C <= 0 and abs(C - round(C)) < 1e-12:
        raise BadC(f"C = {C} is a non-positive integer")
    c = np.zeros(n + 1)
    c[0] = 1.0
    for k in range(n):
        c[k + 1] = c[k] * (A + k) * (-n + k) / ((C + k) * (k + 1))
    return c


def gauss2f1_terminating(A: float, n: int, C: float, rho) -> np.ndarray | float:
    """Evaluate the terminating series 2F1(A, -n; C; rho) on 0 <= rho < 1."""
    c = terminating_series_coefficients(A, n, C)
    return _polyval(c, np.asarray(rho, dtype=float)) if np.ndim(rho) else \
        float(_polyval(c, np.asarray([rho], dtype=float))[0])


def _polyval(c: np.ndarray, x: np.ndarray) -> np.ndarray:
    y = np.zeros_like(x)
    for ck in c[::-1]:
        y = y * x + ck
    return y


def _polyder(c: np.ndarray) -> np.ndarray:
    if len(c) <= 1:
        return np.zeros(1)
    return c[1:] * np.arange(1, len(c))


def chebyshev_grid(size: int) -> np.ndarray:
    """Open Chebyshev grid on (0, 1), clustered at both endpoints."""
    i = np.arange(size)
    return 0.5 * (1.0 - np.cos(np.pi * (i + 0.5) / size))


@dataclass
class RadialSolution:
    """One bound-state radial solution sampled on a rho grid.

    ``series_coeffs`` together with the exponents (a, b) and
    ``norm_constant`` reproduce the primary component exactly; the sampled
    arrays are a convenience view of the same function.
    """

    sector: str                       # "natural" | "phi" | "h0"
    n: int
    J: int
    energy: float
    params: ModelParams
    rho_grid: np.ndarray
    primary: np.ndarray
    primary_name: str
    secondary: dict[str, np.ndarray]
    norm_constant: float
    residual_sup: float
    exponent_a: float
    exponent_b: float
    series_coeffs: np.ndarray = field(repr=False)


# --- analytic derivative kernels ------------------------------------------


def _prefactor_derivs(a: float, b: float, coeffs: np.ndarray, rho: np.ndarray):
    """F, dF/drho, d2F/drho2 for F = rho^a (1-rho)^b Poly(rho) (unnormalized)."""
    q = 1.0 - rho
    dc = _polyder(coeffs)
    ddc = _polyder(dc)
    p0 = _polyval(coeffs, rho)
    p1 = _polyval(dc, rho)
    p2 = _polyval(ddc, rho)
    f = rho ** a * q ** b * p0
    g1 = (a * q - b * rho) * p0 + rho * q * p1
    fr = rho ** (a - 1.0) * q ** (b - 1.0) * g1
    dg1 = -(a + b) * p0 + (a * q - b * rho + q - rho) * p1 + rho * q * p2
    g2 = ((a - 1.0) * q - (b - 1.0) * rho) * g1 + rho * q * dg1
    frr = rho ** (a - 2.0) * q ** (b - 2.0) * g2
    return f, fr, frr


def _radial_derivs(a, b, coeffs, rho, alpha):
    """F and its first two derivatives with respect to r (chain rule in rho)."""
    f, frho, frhorho = _prefactor_derivs(a, b, coeffs, rho)
    df_dr = 2.0 * np.sqrt(alpha * rho) * frho
    d2f_dr2 = 2.0 * alpha * frho + 4.0 * alpha * rho * frhorho
    return f, df_dr, d2f_dr2


def _natural_components(params: ModelParams, J: int, energy: float,
                        a: float, b: float, coeffs: np.ndarray,
                        rho: np.ndarray, scale: float):
    """F0, H+1, H-1, G0 and the r-derivatives of the H components.

    H components follow the first-order relations
        H+1 = -(zeta/m) [p F0' - (J+1)(p/r) F0 - Ar F0]
        H-1 = -(xi  /m) [p F0' +     J(p/r) F0 - Ar F0]
    with p = sqrt(1 - alpha r^2) and Ar = lr r / p.  G0 is stored with the
    real magnitude convention sqrt(E^2 + A0^2) F0 / m (phase not fixed by
    the time-component relation when A0 != 0).
    """
    al, m, lr, l0 = params.alpha, params.m, params.lambda_r, params.lambda0
    xi, zeta = xi_zeta(J)
    f, df, ddf = _radial_derivs(a, b, coeffs, rho, al)
    f, df, ddf = scale * f, scale * df, scale * ddf
    r = np.sqrt(rho / al)
    q = 1.0 - rho
    p = np.sqrt(q)
    ar = lr * r / p
    a0 = l0 * r / p

    h_plus = -(zeta / m) * (p * df - (J + 1) * (p / r) * f - ar * f)
    h_minus = -(xi / m) * (p * df + J * (p / r) * f - ar * f)
    g0 = np.sqrt(energy ** 2 + a0 ** 2) * f / m

    dp = -al * r / p
    dar = lr / p ** 3
    d_p_over_r = dp / r - p / r ** 2
    dh_plus = -(zeta / m) * (dp * df + p * ddf
                             - (J + 1) * (d_p_over_r * f + (p / r) * df)
                             - (dar * f + ar * df))
    dh_minus = -(xi / m) * (dp * df + p * ddf
                            + J * (d_p_over_r * f + (p / r) * df)
                            - (dar * f + ar * df))
    return f, df, h_plus, h_minus, g0, dh_plus, dh_minus


# --- sector assembly -------------------------------------------------------


def _unnatural_sector_data(params: ModelParams, which: str):
    """(a, b, C, c_wall, c_const_of_E2) for the decoupled J = 0 sectors."""
    al, lr = params.alpha, params.lambda_r
    x = lr / al
    if which == "phi":
        c_wall = x * (x + 1.0) / 4.0
        def c_const(e2):
            return (e2 - params.m ** 2) / (4 * al) + 0.25 + (lr / (4 * al)) * (x - 2.0)
    elif which == "h0":
        c_wall = x * (x - 1.0) / 4.0
        def c_const(e2):
            return (e2 - params.m ** 2) / (4 * al) + x * x / 4.0
    else:
        raise ValueError(f"unknown unnatural sector {which!r}")
    a = 0.5
    b = 0.25 + 0.25 * math.sqrt(1.0 + 16.0 * c_wall)
    return a, b, 0.5 + 2.0 * a, c_wall, c_const


def _raw_norm_integral(a: float, b: float, coeffs: np.ndarray,
                       alpha: float) -> float:
    """int_0^1 [rho^a (1-rho)^b P]^2 rho^{-1/2} (1-rho)^{-1/2} drho / (2 sqrt(alpha)).

    Exact Gauss-Jacobi quadrature: weight exponents 2b - 1/2 and 2a - 1/2.
    """
    if 2.0 * b - 0.5 <= -1.0:
        raise DivergentNorm(f"wall exponent 2b - 1/2 = {2*b - 0.5} <= -1")
    nodes = max(_NORM_NODES, len(coeffs))
    x, w = roots_jacobi(nodes, 2.0 * b - 0.5, 2.0 * a - 0.5)
    rho = 0.5 * (x + 1.0)
    poly = _polyval(coeffs, rho)
    return (0.5 ** (2 * a + 2 * b)) / (2.0 * math.sqrt(alpha)) * float(
        np.sum(w * poly * poly))


def natural_solution(params: ModelParams, n: int, J: int,
                     grid_size: int = DEFAULT_GRID_SIZE,
                     tol: float = DEFAULT_RESIDUAL_TOL) -> RadialSolution:
    """Normalized natural-parity solution and its first-order-system residual."""
    level = energy_natural(params, n, J)
    a, b = exponents(params, J)
    big_a = n + 2.0 * (a + b)
    big_c = 0.5 + 2.0 * a
    coeffs = terminating_series_coefficients(big_a, n, big_c)

    norm_raw = _raw_norm_integral(a, b, coeffs, params.alpha)
    n1 = 1.0 / math.sqrt(norm_raw)

    rho = chebyshev_grid(grid_size)
    f, _, h_plus, h_minus, g0, _, _ = _natural_components(
        params, J, level.value, a, b, coeffs, rho, n1)

    sol = RadialSolution(
        sector="natural", n=n, J=J, energy=level.value, params=params,
        rho_grid=rho, primary=f, primary_name="F0",
        secondary={"H_plus1": h_plus, "H_minus1": h_minus, "G0": g0},
        norm_constant=n1, residual_sup=0.0,
        exponent_a=a, exponent_b=b, series_coeffs=coeffs)
    sol.residual_sup = residual_first_order(params, level, sol)
    if sol.residual_sup > tol:
        raise GridTooCoarse(
            f"residual {sol.residual_sup:.3e} above tolerance {tol:.1e} "
            f"at grid size {grid_size}")
    return sol


def unnatural_solution(params: ModelParams, n: int, which: str,
                       grid_size: int = DEFAULT_GRID_SIZE,
                       tol: float = DEFAULT_RESIDUAL_TOL) -> RadialSolution:
    """Normalized solution of a decoupled unnatural sector ("phi" or "h0").

    The residual is measured against the second-order rho-form equation of
    the sector; the printed first-order unnatural system is not mutually
    consistent and is not used here.
    """
    if which == "phi":
        level = energy_unnatural_phi(params, n)
    elif which == "h0":
        level = energy_unnatural_h0(params, n)
    else:
        raise ValueError(f"unknown unnatural sector {which!r}")
    a, b, big_c, c_wall, c_const = _unnatural_sector_data(params, which)
    big_a = n + 2.0 * (a + b)
    coeffs = terminating_series_coefficients(big_a, n, big_c)

    norm_raw = _raw_norm_integral(a, b, coeffs, params.alpha)
    n1 = 1.0 / math.sqrt(norm_raw)

    rho = chebyshev_grid(grid_size)
    f, frho, frhorho = _prefactor_derivs(a, b, coeffs, rho)
    f, frho, frhorho = n1 * f, n1 * frho, n1 * frhorho
    resid = ((1.0 - rho) * rho * frhorho + (0.5 - rho) * frho
             - c_wall * f / (1.0 - rho) + c_const(level.value ** 2) * f)
    residual_sup = float(np.max(np.abs(resid)))
    if residual_sup > tol:
        raise GridTooCoarse(
            f"residual {residual_sup:.3e} above tolerance {tol:.1e}")

    return RadialSolution(
        sector=which, n=n, J=0, energy=level.value, params=params,
        rho_grid=rho, primary=f, primary_name="phi" if which == "phi" else "H0",
        secondary={}, norm_constant=n1, residual_sup=residual_sup,
        exponent_a=a, exponent_b=b, series_coeffs=coeffs)


def evaluate_primary(sol: RadialSolution, rho) -> np.ndarray:
    """Evaluate the primary component analytically at arbitrary rho in (0, 1)."""
    rho = np.asarray(rho, dtype=float)
    poly = _polyval(sol.series_coeffs, rho)
    return sol.norm_constant * rho ** sol.exponent_a \
        * (1.0 - rho) ** sol.exponent_b * poly


def deformed_norm(sol: RadialSolution, params: ModelParams) -> float:
    """Norm of the primary component under the deformed measure.

    Computed in the rho variable with the endpoint behavior folded into a
    Gauss-Jacobi weight, so the polynomial part is integrated exactly.
    """
    raw = _raw_norm_integral(sol.exponent_a, sol.exponent_b,
                             sol.series_coeffs, params.alpha)
    return sol.norm_constant ** 2 * raw


def residual_first_order(params: ModelParams, level: EnergyLevel,
                         sol: RadialSolution) -> float:
    """Sup-norm residual of the active first-order equations (natural parity).

    Four relations couple F0, G0 and H+-1; the two defining H from F0, the
    algebraic G0 relation (checked in the stored magnitude convention), and
    the closure equation, whose residual is the nontrivial content:

        -p[zeta(d/dr + (J+1)/r + Ar/p) H+1 + xi(d/dr - J/r + Ar/p) H-1]
            + (E^2 + A0^2) F0 / m  =  m F0.
    """
    if sol.sector != "natural":
        raise UnsupportedRegime(
            "first-order residuals are defined for the natural sector; "
            "unnatural solutions carry their ODE residual in residual_sup")
    al, m, lr, l0 = params.alpha, params.m, params.lambda_r, params.lambda0
    xi, zeta = xi_zeta(sol.J)
    J = sol.J
    energy = level.value
    rho = sol.rho_grid
    r = np.sqrt(rho / al)
    p = np.sqrt(1.0 - rho)
    ar = lr * r / p
    a0 = l0 * r / p

    f, df, h_plus, h_minus, g0, dh_plus, dh_minus = _natural_components(
        params, J, energy, sol.exponent_a, sol.exponent_b,
        sol.series_coeffs, rho, sol.norm_constant)

    res01 = zeta * (p * df - (J + 1) * (p / r) * f - ar * f) + m * h_plus
    res02 = xi * (p * df + J * (p / r) * f - ar * f) + m * h_minus
    res08 = np.sqrt(energy ** 2 + a0 ** 2) * f - m * g0
    res07 = (-p * (zeta * (dh_plus + (J + 1) / r * h_plus + ar / p * h_plus)
                   + xi * (dh_minus - J / r * h_minus + ar / p * h_minus))
             + (energy ** 2 + a0 ** 2) * f / m - m * f)
    return float(max(np.max(np.abs(res01)), np.max(np.abs(res02)),
                     np.max(np.abs(res07)), np.max(np.abs(res08))))


def count_nodes(sol: RadialSolution, samples: int = 10000) -> int:
    """Interior sign changes of the primary component (Sturm oscillation)."""
    rho = chebyshev_grid(samples)
    vals = evaluate_primary(sol, rho)
    return int(np.sum(vals[:-1] * vals[1:] < 0))


def write_csv(sol: RadialSolution, path) -> None:
    """Columns: rho, r, primary, secondary components, deformed line weight."""
    names = sorted(sol.secondary)
    header = ["rho", "r", sol.primary_name, *names, "weight"]
    r = np.sqrt(sol.rho_grid / sol.params.alpha)
    weight = 1.0 / (2.0 * math.sqrt(sol.params.alpha)
                    * np.sqrt(sol.rho_grid) * np.sqrt(1.0 - sol.rho_grid))
    cols = [sol.rho_grid, r, sol.primary,
            *(sol.secondary[k] for k in names), weight]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(",".join(header) + "\n")
        for row in zip(*cols):
            fh.write(",".join(f"{v:.12g}" for v in row) + "\n")
