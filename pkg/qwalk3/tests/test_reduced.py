import logging

import numpy as np
import pytest
from mock import MagicMock

from qwalk3.coins import generalized_grover, grover
from qwalk3.errors import PreconditionError
from qwalk3.linalg3 import identity
from qwalk3.stationary import (
    FunctionSeed,
    TwoWave,
    free_function_eigvec,
    free_function_measure,
    reduced_eigenvalue,
    two_wave_eigvec,
)

logger = logging.getLogger(__file__)
logger.setLevel(logging.ERROR)


def test_two_wave_eigvec_solves_eigen_equation():
    construction = two_wave_eigvec(generalized_grover(np.pi / 6), 1, 0)
    assert np.max(construction.eigen_residuals(-8, 8)) <= 1e-10
    assert abs(construction.lam) == pytest.approx(1.0, abs=1e-12)


def test_two_wave_first_component_is_a_power():
    A = generalized_grover(np.pi / 6)
    construction = two_wave_eigvec(A, 1, 0)
    ratio = construction.lam / construction.a1_tilde
    window = construction.window(-3, 3)
    for x in window.positions():
        assert window[x][0] == pytest.approx(ratio ** x)
        assert window[x][2] == 0


def test_two_wave_eigenvalue_is_reduced_value():
    A = generalized_grover(0.8)
    construction = two_wave_eigvec(A, 0.5, 2j)
    assert construction.lam == pytest.approx(reduced_eigenvalue(A))
    # a1~ = alpha - g for the symmetric coin
    assert construction.a1_tilde == pytest.approx(A[0, 0] - A[0, 2])
    expected = TwoWave.of(A, construction.lam).p
    assert construction.diagnostics["p"] == pytest.approx(expected)


def test_two_wave_on_grover():
    construction = two_wave_eigvec(grover(), 1, 1)
    assert construction.lam == pytest.approx(-1)
    assert np.max(construction.eigen_residuals(-10, 10)) <= 1e-12


def test_two_wave_rejects_null_seed():
    with pytest.raises(PreconditionError) as my_failure:
        two_wave_eigvec(grover(), 0, 0)
    assert my_failure.value.condition == "seed_nonzero"


def test_two_wave_rejects_zero_entries():
    with pytest.raises(PreconditionError) as my_failure:
        two_wave_eigvec(identity(), 1, 0)
    assert my_failure.value.condition == "entries_nonzero"


def test_two_wave_rejects_unimodular_centre():
    with pytest.raises(PreconditionError) as my_failure:
        two_wave_eigvec(np.ones((3, 3)), 1, 0)
    assert my_failure.value.condition == "a22_modulus"


def test_two_wave_rejects_disagreeing_eigenvalues():
    A = np.array(generalized_grover(np.pi / 6))
    A[0, 2] *= 1.01
    with pytest.raises(PreconditionError) as my_failure:
        two_wave_eigvec(A, 1, 0)
    assert my_failure.value.condition == "lambda_agreement"


def test_two_wave_rejects_non_unit_eigenvalue():
    with pytest.raises(PreconditionError) as my_failure:
        two_wave_eigvec(1.01 * generalized_grover(np.pi / 6), 1, 0)
    assert my_failure.value.condition == "lambda_unit_modulus"


@pytest.mark.parametrize("phi", [0.0, np.pi / 6, np.pi / 4, 1.0])
def test_free_function_values_on_generalized_grover(phi):
    construction = free_function_eigvec(
        generalized_grover(phi), FunctionSeed.constant(1)
    )
    phase = np.exp(-1j * phi)
    assert construction.lam == pytest.approx(phase, abs=1e-12)
    assert construction.a1_tilde == pytest.approx(phase, abs=1e-12)
    assert construction.a2_tilde == pytest.approx(phase, abs=1e-12)
    assert construction.diagnostics["middle_prefactor"] == "primary"


def test_free_function_on_grover_constant_seed():
    construction = free_function_eigvec(grover(), FunctionSeed.constant(1))
    window = construction.window(-4, 4)
    assert np.allclose(window.values, 1)
    assert np.allclose(construction.measure(-4, 4).values, 3)


@pytest.mark.parametrize("phi", [0.0, np.pi / 6, np.pi / 4, 1.0])
@pytest.mark.parametrize(
    "seq",
    [FunctionSeed.constant(1), FunctionSeed.delta(0), FunctionSeed.plane_wave(1 / 3)],
)
def test_free_function_eigvec_matches_closed_form(phi, seq):
    construction = free_function_eigvec(generalized_grover(phi), seq)
    assert np.max(construction.eigen_residuals(-8, 8)) <= 1e-10
    mu = free_function_measure(phi, seq).values(-10, 10)
    assert np.max(np.abs(mu - construction.measure(-10, 10).values)) <= 1e-12


def test_free_function_rejects_null_seed():
    with pytest.raises(PreconditionError) as my_failure:
        free_function_eigvec(grover(), FunctionSeed.constant(0))
    assert my_failure.value.condition == "seed_nonzero"
    with pytest.raises(PreconditionError):
        free_function_eigvec(grover(), FunctionSeed(lambda x: 0, "zero"))


def test_free_function_rejects_eigenvalue_disagreement():
    A = np.array(grover())
    A[2, 2] = -0.3
    with pytest.raises(PreconditionError) as my_failure:
        free_function_eigvec(A, FunctionSeed.constant(1))
    assert my_failure.value.condition == "lambda_agreement"


def test_free_function_does_not_warn_when_printed_prefactor_holds():
    log = MagicMock()
    free_function_eigvec(generalized_grover(0.5), FunctionSeed.delta(2), log=log)
    log.warning.assert_not_called()
