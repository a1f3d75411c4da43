import math
import pathlib
import re

import numpy as np
import pytest

from dkp_eup import oracle
from dkp_eup.errors import ComplexExponent, UnsupportedRegime
from dkp_eup.model import ModelParams
from dkp_eup.oracle import (Sector, auto_cut, compare, discretize,
                            apply_operator, extrapolated_limit_energy,
                            lowest_energies, solve_lowest)
from dkp_eup.spectrum import (energy_natural, energy_natural_limit,
                              energy_unnatural_h0, energy_unnatural_phi)

REF = ModelParams(m=1.0, alpha=0.1, lambda0=0.5, lambda_r=1.0)


def test_discretize_shapes():
    prob = discretize(REF, Sector.natural(0), 8)
    assert prob.grid_size == 8
    assert prob.diag.shape == (8,)
    assert prob.offdiag.shape == (7,)
    assert prob.rho_nodes.shape == (8,)
    assert np.all(np.diff(prob.s_nodes) > 0)


def test_constant_function_is_the_ground_mode():
    # u = 1 satisfies the regularized equation with eigenvalue 0 (n = 0);
    # the zero-flux scheme reproduces that exactly up to rounding
    prob = discretize(ModelParams(1.0, 0.2, 0.5, 1.0), Sector.natural(0), 64)
    res = apply_operator(prob, np.ones(64))
    assert np.max(np.abs(res)) < 1e-8 * np.max(np.abs(prob.diag))


def test_lowest_level_matches_reference_energy():
    e2 = solve_lowest(discretize(REF, Sector.natural(0), 4096), 1)
    assert math.sqrt(e2[0]) == pytest.approx(2.240519537270967, rel=1e-5)
    assert e2[0] == pytest.approx(5.019927796892908, rel=1e-5)


def test_levels_strictly_increasing():
    e2 = solve_lowest(discretize(REF, Sector.natural(1), 2048), 3)
    assert e2[0] < e2[1] < e2[2]


def test_h0_ground_state_matches_formula():
    p = ModelParams(m=1.0, alpha=0.1, lambda0=0.0, lambda_r=1.0)
    e = lowest_energies(p, Sector.h0(), 1, 4096)[0]
    assert e == pytest.approx(1.7606816861659, rel=1e-5)


@pytest.mark.parametrize("alpha", [0.05, 0.1, 0.2])
def test_compare_passes_on_reference_sweep(alpha):
    p = ModelParams(m=1.0, alpha=alpha, lambda0=0.5, lambda_r=1.0)
    analytic = [energy_natural(p, n, 0).value for n in range(5)]
    report = compare(p, Sector.natural(0), analytic, grid_size=4096, tol=1e-6)
    assert report.passed, report.summary()


def test_double_entry_extends_to_J_three():
    p = ModelParams(m=1.0, alpha=0.1, lambda0=0.5, lambda_r=1.0)
    analytic = [energy_natural(p, n, 3).value for n in range(5)]
    report = compare(p, Sector.natural(3), analytic, grid_size=8192, tol=1e-5)
    assert report.passed, report.summary()


def test_compare_detects_corrupted_rotational_term():
    J = 2
    p = ModelParams(m=1.0, alpha=0.1, lambda0=0.5, lambda_r=1.0)
    corrupted = [math.sqrt(energy_natural(p, n, J).value ** 2
                           + 0.1 * p.alpha * J * (J + 1))
                 for n in range(5)]
    report = compare(p, Sector.natural(J), corrupted, grid_size=2048, tol=1e-6)
    assert not report.passed
    assert all(r.rel_error > 1e-4 for r in report.rows)


def test_compare_report_serialization():
    analytic = [energy_natural(REF, n, 0).value for n in range(3)]
    report = compare(REF, Sector.natural(0), analytic, grid_size=1024, tol=1e-4)
    text = report.to_csv_text()
    assert text.startswith("n,E_analytic,E_numeric,rel_error\n")
    assert len(text.strip().splitlines()) == 4
    assert "natural(J=0)" in report.summary()


def test_refinement_convergence_is_at_least_second_order():
    # symmetric discretization: eigenvalues gain the variational square,
    # so the observed ratio under doubling is ~16 rather than the plain 4
    exact = energy_natural(REF, 2, 0).value
    errs = []
    for grid in (128, 256, 512):
        e2 = solve_lowest(discretize(REF, Sector.natural(0), grid), 3)
        errs.append(abs(math.sqrt(e2[2]) - exact))
    assert errs[0] > errs[1] > errs[2]
    assert errs[0] / errs[1] > 3.0
    assert errs[1] / errs[2] > 3.0


def test_unnatural_sector_guards():
    with pytest.raises(UnsupportedRegime):
        discretize(REF, Sector.phi(), 64)  # lambda0 != 0
    with pytest.raises(UnsupportedRegime):
        discretize(ModelParams(1.0, 0.0, 0.5, 1.0), Sector.natural(0), 64)
    with pytest.raises(ComplexExponent):
        discretize(ModelParams(1.0, 0.1, 1.5, 1.0), Sector.natural(0), 64)
    with pytest.raises(ValueError):
        discretize(REF, Sector("bogus"), 64)
    with pytest.raises(ValueError):
        solve_lowest(discretize(REF, Sector.natural(0), 8), 9)


def test_auto_cut_shrinks_for_weak_deformation():
    weak = ModelParams(m=1.0, alpha=1e-3, lambda0=0.5, lambda_r=1.0)
    assert auto_cut(weak, Sector.natural(0), 0) < 0.35
    assert auto_cut(REF, Sector.natural(0), 0) == 1.0


@pytest.mark.parametrize("J", [0, 1])
@pytest.mark.parametrize("n", [0, 1])
def test_richardson_extrapolation_reaches_the_limit_formula(J, n):
    # fully independent check of the undeformed closed form, including its
    # 2J dependence, from deformed eigensolves alone
    extrap = extrapolated_limit_energy(1.0, 0.5, 1.0, n, J, grid_size=8192)
    closed = energy_natural_limit(ModelParams(1.0, 0.0, 0.5, 1.0), n, J).value
    assert extrap == pytest.approx(closed, rel=1e-6)


def test_richardson_requires_halved_alphas():
    with pytest.raises(ValueError):
        extrapolated_limit_energy(1.0, 0.5, 1.0, 0, 0, alphas=(0.1, 0.05, 0.01))


def test_oracle_does_not_import_the_spectrum_module():
    # double-entry bookkeeping: the solver must not reuse the formula code
    src = pathlib.Path(oracle.__file__).read_text()
    assert not re.search(r"^\s*(from|import)\s+\S*spectrum", src, re.M)


@pytest.mark.parametrize("sector,formula", [
    (Sector.phi(), energy_unnatural_phi),
    (Sector.h0(), energy_unnatural_h0),
])
def test_unnatural_sectors_against_formulas(sector, formula):
    p = ModelParams(m=1.0, alpha=0.05, lambda0=0.0, lambda_r=1.0)
    analytic = [formula(p, n).value for n in range(4)]
    report = compare(p, sector, analytic, grid_size=4096, tol=1e-6)
    assert report.passed, report.summary()
