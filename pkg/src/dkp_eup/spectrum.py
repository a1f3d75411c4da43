"""Closed-form bound-state energies of all solved sectors.

Natural parity (any J, alpha > 0), its alpha -> 0 limit, the asymptotic level
spacing, and the two decoupled unnatural-parity sectors (J = 0, lambda0 = 0).

The deformed energies are evaluated through a cancellation-free
rearrangement.  Writing Q = lr^2 - l0^2 + alpha*lr + alpha^2/4, the exponent
discriminant is D = 4Q/alpha^2, and

    E^2 = m^2 + lr + alpha/4 + 4*alpha*beta^2 + 4*beta*sqrt(Q)
          - alpha*J*(J+1),        beta = n + (2J+3)/4,

which is algebraically identical to the textbook form
m^2 + 4a(n + (2J+3)/4 + sqrt(D)/4)^2 - aJ(J+1) - (lr^2-l0^2)/a but contains
no large cancelling terms as alpha -> 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import ComplexEnergy, ComplexExponent, ComplexShift, UnsupportedRegime
from .model import Branch, ModelParams, Parity, QuantumNumbers


class Formula(Enum):
    NATURAL_DEFORMED = "natural-deformed"
    NATURAL_LIMIT = "natural-limit"
    UNNATURAL_PHI = "unnatural-phi"
    UNNATURAL_H0 = "unnatural-h0"


@dataclass(frozen=True)
class HypergeomData:
    """Exponents and parameters of the reduced hypergeometric problem."""

    a: float
    b: float
    A: float
    B: float
    C: float
    u: float
    v1: float
    v2: float


@dataclass(frozen=True)
class EnergyLevel:
    qn: QuantumNumbers
    value: float
    formula: Formula


def _q_shift(params: ModelParams) -> float:
    """Q = lr^2 - l0^2 + alpha*lr + alpha^2/4 (equals alpha^2 D / 4)."""
    return (params.lambda_r ** 2 - params.lambda0 ** 2
            + params.alpha * params.lambda_r + params.alpha ** 2 / 4.0)


def exponents(params: ModelParams, J: int) -> tuple[float, float]:
    """Roots (a, b) of the indicial conditions at rho = 0 and rho = 1.

    a = (J+1)/2 and b = 1/4 + sqrt(D)/4; requires alpha > 0 and D >= 0.
    """
    if params.alpha <= 0:
        raise UnsupportedRegime("exponents need alpha > 0")
    q = _q_shift(params)
    if q < 0:
        raise ComplexExponent(4.0 * q / params.alpha ** 2)
    a = (J + 1) / 2.0
    b = 0.25 + 0.5 * math.sqrt(q) / params.alpha
    return a, b


def abc(params: ModelParams, J: int, energy: float) -> HypergeomData:
    """Hypergeometric parameters (A, B, C) at a given energy, with audit data.

    S = sqrt((E^2-m^2)/(4 alpha) + J(J+1)/4 + (lr^2-l0^2)/(4 alpha^2)),
    A = a + b + S, B = a + b - S, C = 1/2 + 2a.  u, v1, v2 are returned so
    callers can confirm the root selection annihilated the singular terms.
    """
    a, b = exponents(params, J)
    al = params.alpha
    radicand = ((energy ** 2 - params.m ** 2) / (4.0 * al)
                + J * (J + 1) / 4.0
                + (params.lambda_r ** 2 - params.lambda0 ** 2) / (4.0 * al ** 2))
    if radicand < 0:
        raise ComplexShift(radicand)
    s = math.sqrt(radicand)
    v1 = a * (a - 0.5) - J * (J + 1) / 4.0
    v2 = b * (b - 0.5) - ((params.lambda_r / al) ** 2 + params.lambda_r / al
                          - (params.lambda0 / al) ** 2) / 4.0
    return HypergeomData(a=a, b=b, A=a + b + s, B=a + b - s, C=0.5 + 2.0 * a,
                         u=(a + b) ** 2 - radicand, v1=v1, v2=v2)


def _energy_from_square(e2: float, qn: QuantumNumbers, formula: Formula) -> EnergyLevel:
    if e2 < 0:
        raise ComplexEnergy(e2)
    e = math.sqrt(e2)
    return EnergyLevel(qn, e if qn.branch is Branch.PLUS else -e, formula)


def energy_natural(params: ModelParams, n: int, J: int,
                   branch: Branch = Branch.PLUS) -> EnergyLevel:
    """Deformed natural-parity level E_{n;J}; requires alpha > 0."""
    if params.alpha <= 0:
        raise UnsupportedRegime(
            "energy_natural needs alpha > 0; use energy_natural_limit at alpha = 0")
    q = _q_shift(params)
    if q < 0:
        raise ComplexExponent(4.0 * q / params.alpha ** 2)
    beta = n + (2 * J + 3) / 4.0
    e2 = (params.m ** 2 + params.lambda_r + params.alpha / 4.0
          + 4.0 * params.alpha * beta * beta + 4.0 * beta * math.sqrt(q)
          - params.alpha * J * (J + 1))
    qn = QuantumNumbers(n, J, Parity.NATURAL, branch)
    return _energy_from_square(e2, qn, Formula.NATURAL_DEFORMED)


def energy_natural_limit(params: ModelParams, n: int, J: int,
                         branch: Branch = Branch.PLUS) -> EnergyLevel:
    """Undeformed natural-parity level; alpha is ignored.

    E = sqrt(m^2 + lr + (4n + 2J + 3) sqrt(lr^2 - l0^2)), the alpha -> 0
    limit of the deformed level (a radial oscillator with angular momentum
    J).  At lambda0 = lambda_r every level collapses to sqrt(m^2 + lr).
    """
    gap2 = params.lambda_r ** 2 - params.lambda0 ** 2
    if gap2 < 0:
        raise ComplexEnergy(gap2)
    e2 = params.m ** 2 + params.lambda_r + (4 * n + 2 * J + 3) * math.sqrt(gap2)
    qn = QuantumNumbers(n, J, Parity.NATURAL, branch)
    return _energy_from_square(e2, qn, Formula.NATURAL_LIMIT)


def level_spacing(params: ModelParams, n: int, J: int) -> float:
    """E_{n+1;J} - E_{n;J} on the plus branch; tends to 2 sqrt(alpha)."""
    if params.alpha > 0:
        lo = energy_natural(params, n, J)
        hi = energy_natural(params, n + 1, J)
    else:
        lo = energy_natural_limit(params, n, J)
        hi = energy_natural_limit(params, n + 1, J)
    return hi.value - lo.value


def _require_unnatural(params: ModelParams):
    if params.lambda0 != 0:
        raise UnsupportedRegime("unnatural-parity spectra require lambda0 = 0")
    if params.alpha <= 0:
        raise UnsupportedRegime("unnatural-parity spectra require alpha > 0")


def energy_unnatural_phi(params: ModelParams, n: int,
                         branch: Branch = Branch.PLUS) -> EnergyLevel:
    """Scalar-component sector, J = 0, lambda0 = 0.

    E^2 = m^2 + 4 lr + 4 alpha (n + 1/2)(n + 3/2 + lr/alpha); the lr/alpha
    product is expanded so no 1/alpha survives.
    """
    _require_unnatural(params)
    e2 = (params.m ** 2 + 4.0 * params.lambda_r
          + 4.0 * params.alpha * (n + 0.5) * (n + 1.5)
          + 4.0 * (n + 0.5) * params.lambda_r)
    qn = QuantumNumbers(n, 0, Parity.UNNATURAL, branch)
    return _energy_from_square(e2, qn, Formula.UNNATURAL_PHI)


def energy_unnatural_h0(params: ModelParams, n: int,
                        branch: Branch = Branch.PLUS) -> EnergyLevel:
    """Longitudinal-component sector, J = 0, lambda0 = 0.

    E^2 = m^2 + 4 alpha (n + 1/2)(n + 1/2 + lr/alpha).
    """
    _require_unnatural(params)
    e2 = (params.m ** 2
          + 4.0 * params.alpha * (n + 0.5) ** 2
          + 4.0 * (n + 0.5) * params.lambda_r)
    qn = QuantumNumbers(n, 0, Parity.UNNATURAL, branch)
    return _energy_from_square(e2, qn, Formula.UNNATURAL_H0)
