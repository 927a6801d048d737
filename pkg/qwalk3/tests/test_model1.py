import itertools
import logging

import numpy as np
import pytest
from mock import MagicMock

from qwalk3.errors import PreconditionError
from qwalk3.linalg3 import eigenvalues
from qwalk3.coins import generalized_grover
from qwalk3.stationary import (
    DefectForm,
    model1_eigvec,
    model1_measure,
    model1_tau,
    model2_eigenvalue,
    select_model1_eigenvalue,
)
from qwalk3.walk import stationarity_residual

logger = logging.getLogger(__file__)
logger.setLevel(logging.ERROR)

PHIS = (0.0, np.pi / 6, np.pi / 4, 1.0)
THETAS = (0.25, 1 / 3, 0.7)
SEEDS = ((1, 0), (0, 1), (1, 1j))


def test_tau_at_zero_is_pi():
    chosen = select_model1_eigenvalue(0.0)
    assert chosen.tau == pytest.approx(np.pi, abs=1e-12)
    assert chosen.lam == pytest.approx(-1)
    assert chosen.source == "negated phase"
    assert chosen.in_spectrum
    # the phase candidate 1 is in the spectrum but fails the eigen-equation
    assert chosen.residuals["phase"] > 1e-3


@pytest.mark.parametrize("phi", [np.pi / 6, np.pi / 4, 1.0, -0.4])
def test_tau_off_zero_comes_from_reduced_value(phi):
    chosen = select_model1_eigenvalue(phi)
    assert chosen.source == "reduced"
    assert not chosen.in_spectrum
    assert 0 <= chosen.tau < 2 * np.pi
    assert abs(chosen.lam) == pytest.approx(1.0, abs=1e-12)
    # e^{i tau} = e^{-i phi} e^{i xi(phi)}
    expected = np.exp(-1j * phi) * model2_eigenvalue(phi)
    assert chosen.lam == pytest.approx(expected, abs=1e-12)
    assert min(abs(chosen.lam - s) for s in eigenvalues(generalized_grover(phi))) > 1e-8


def test_model1_tau_logs_its_choice():
    log = MagicMock()
    assert model1_tau(np.pi / 6, log=log) == select_model1_eigenvalue(np.pi / 6).tau
    log.debug.assert_called_once()


def test_tau_rejects_vanishing_cosine():
    with pytest.raises(PreconditionError) as my_failure:
        model1_tau(np.pi / 2)
    assert my_failure.value.condition == "cos_nonzero"


@pytest.mark.parametrize("phi,theta,seed", list(itertools.product(PHIS, THETAS, SEEDS)))
def test_matched_construction_is_stationary_and_matches_closed_form(phi, theta, seed):
    construction = model1_eigvec(phi, theta, seed)
    assert np.max(construction.eigen_residuals(-10, 10)) <= 1e-10
    nu = construction.measure(-10, 10).values
    mu = model1_measure(phi, theta, seed).values(-10, 10)
    assert np.max(np.abs(mu - nu)) <= 1e-10
    residual = stationarity_residual(construction.family, construction.psi, -10, 10, 10)
    assert residual <= 1e-8


def test_matched_measure_at_grover():
    mu = model1_measure(0.0, 1 / 3, (1, 0))
    assert mu(-5) == pytest.approx(2 / 13)
    assert mu(-1) == pytest.approx(2 / 13)
    assert mu(0) == pytest.approx(17 / 13)
    assert mu(1) == pytest.approx(56 / 13)
    assert mu(7) == pytest.approx(56 / 13)


def test_matched_side_amplitudes_at_grover():
    construction = model1_eigvec(0.0, 1 / 3, (1, 0))
    sides = construction.diagnostics
    assert sides["m0"] == pytest.approx((5 - 3 * np.sqrt(3) * 1j) / 13)
    assert sides["w_right"] == pytest.approx((3 - 7 * np.sqrt(3) * 1j) / 13)
    eta = np.exp(2j * np.pi / 3)
    assert sides["u_left"] == pytest.approx(eta * (1 + 2 * np.sqrt(3) * 1j) / 13)


def test_local_form_origin_and_measure():
    construction = model1_eigvec(0.0, 1 / 3, (1, 0), form=DefectForm.LOCAL)
    assert np.allclose(construction.window(0, 0)[0], [1, -1, 0])
    assert np.allclose(construction.measure(-10, 10).values, 2.0)
    assert construction.diagnostics["case_lambdas"]["x=0"] == pytest.approx(
        np.exp(2j * np.pi / 3) * construction.lam
    )


def test_local_form_origin_carries_kappa():
    phi = np.pi / 6
    construction = model1_eigvec(phi, 0.25, (1, 2j), form="local")
    kappa = 1 - 1.5j * np.tan(phi)
    assert np.allclose(construction.window(0, 0)[0], [1, -kappa * (1 + 2j), 2j])


def test_local_form_is_not_stationary():
    construction = model1_eigvec(0.0, 1 / 3, (1, 0), form=DefectForm.LOCAL)
    residual = stationarity_residual(construction.family, construction.psi, -3, 3, 2)
    assert residual > 0.3


@pytest.mark.parametrize(
    "phi,theta,seed",
    [(0.0, 1 / 3, (1, 0)), (np.pi / 6, 0.25, (1, 1j)), (1.0, 0.7, (2, 1))],
)
def test_local_closed_form_matches_its_vector(phi, theta, seed):
    construction = model1_eigvec(phi, theta, seed, form=DefectForm.LOCAL)
    mu = model1_measure(phi, theta, seed, form=DefectForm.LOCAL).values(-10, 10)
    assert np.max(np.abs(mu - construction.measure(-10, 10).values)) <= 1e-10


@pytest.mark.parametrize("phi", [0.0, 0.5, 1.0])
def test_local_measure_without_third_seed_is_flat(phi):
    mu = model1_measure(phi, 0.4, (1, 0), form=DefectForm.LOCAL).values(-6, 6)
    assert np.allclose(mu, 2 + 2.25 * np.tan(phi) ** 2)


def test_measure_records_parameters():
    mu = model1_measure(np.pi / 6, 0.25, (1, 1j))
    assert mu.params["tau"] == select_model1_eigenvalue(np.pi / 6).tau
    assert mu.params["form"] == "matched"
    assert mu.params["phi3"] == 1j


def test_model1_preconditions():
    with pytest.raises(PreconditionError) as my_failure:
        model1_eigvec(0.0, 0.0, (1, 0))
    assert my_failure.value.condition == "theta_range"
    with pytest.raises(PreconditionError) as my_failure:
        model1_measure(0.0, 0.5, (0, 0))
    assert my_failure.value.condition == "seed_nonzero"
    with pytest.raises(PreconditionError) as my_failure:
        model1_eigvec(np.pi / 2, 0.5, (1, 0))
    assert my_failure.value.condition == "cos_nonzero"
