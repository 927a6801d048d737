"""Stationary measures of the model_a(gamma) walk with a phase defect at 0"""
import numpy as np

from qwalk3.coins import DefectSpec, defect_family, model_a
from qwalk3.linalg3 import eigenvalues

from .construction import ClosedFormMeasure, DefectForm, EigenConstruction, require_cos
from .defect import kappa, local_formula, matched_formula, matched_generator
from .reduced import TwoWave
from .seeds import TwoParameterSeed

SPECTRUM_TOL = 1e-8


def model2_eigenvalue(gamma: float) -> complex:
    """
    e^{i xi} = (10 - 26 cos 2gamma - 24 i sin 2gamma) / (26 - 10 cos 2gamma).

    The imaginary part is built explicitly so that gamma = 0 lands on -1 + 0j
    and not on -1 - 0j.
    """
    require_cos(gamma, "gamma")
    c2 = np.cos(2 * gamma)
    s2 = np.sin(2 * gamma)
    denominator = 26 - 10 * c2
    return complex((10 - 26 * c2) / denominator, (-24 * s2 + 0.0) / denominator)


def model2_xi(gamma: float) -> float:
    """xi in [0, 2 pi) with e^{i xi} = model2_eigenvalue(gamma)"""
    return float(np.angle(model2_eigenvalue(gamma))) % (2 * np.pi)


def _local_generator(gamma, xi, eta, seed):
    wave = complex(np.exp(1j * xi))
    k = kappa(gamma)
    phi1, phi3 = seed

    def generator(x):
        if x == 0:
            first, third = phi1, phi3
        elif x == 1:
            first, third = -wave * phi1, -eta / wave * phi3
        elif x == -1:
            first, third = -eta / wave * phi1, -wave * phi3
        else:
            first, third = -(wave ** x) * phi1, -(wave ** -x) * phi3
        return np.array([first, -k * (first + third), third], dtype=np.complex128)

    return generator


def _checked(gamma, theta, seed):
    require_cos(gamma, "gamma")
    defect = DefectSpec.checked(theta)
    seed = TwoParameterSeed.of(*seed).check()
    return defect, seed


def model2_eigvec(
    gamma: float, theta: float, seed, form: DefectForm = DefectForm.MATCHED, log=None
) -> EigenConstruction:
    """
    Eigenvector candidate of the phase-defect model_a(gamma) walk.

    The eigenvalue is lambda = e^{i xi(gamma)} and a1~ = a2~ = -1. Arguments and
    errors are those of `model1_eigvec` with gamma in place of phi.
    """
    defect, seed = _checked(gamma, theta, seed)
    coin = model_a(gamma)
    lam = model2_eigenvalue(gamma)
    xi = model2_xi(gamma)
    eta = defect.eta
    wave = TwoWave.of(coin, lam)
    in_spectrum = min(abs(lam - s) for s in eigenvalues(coin)) <= SPECTRUM_TOL
    if log:
        log.debug(
            f"gamma={gamma}: xi={xi}, lambda={lam}, in coin spectrum: {in_spectrum}"
        )
    diagnostics = {"in_spectrum": in_spectrum}
    form = DefectForm(form)
    if form is DefectForm.MATCHED:
        psi, sides, _ = matched_generator(coin, lam, eta, seed)
        diagnostics.update(sides._asdict())
    else:
        psi = _local_generator(gamma, xi, eta, seed)
        diagnostics["case_lambdas"] = {
            "bulk": lam,
            "x=1": lam,
            "x=-1": lam,
            "x=0": eta * lam,
        }
    return EigenConstruction(
        lam=lam,
        a1_tilde=wave.a1_tilde,
        a2_tilde=wave.a2_tilde,
        psi=psi,
        family=defect_family(coin, defect),
        tau_or_xi=xi,
        eta=eta,
        form=form,
        diagnostics=diagnostics,
    )


def model2_measure(
    gamma: float, theta: float, seed, form: DefectForm = DefectForm.MATCHED, log=None
) -> ClosedFormMeasure:
    defect, seed = _checked(gamma, theta, seed)
    lam = model2_eigenvalue(gamma)
    xi = model2_xi(gamma)
    form = DefectForm(form)
    if form is DefectForm.MATCHED:
        _, sides, _ = matched_generator(model_a(gamma), lam, defect.eta, seed)
        formula = matched_formula(gamma, -lam, sides, seed)
    else:
        formula = local_formula(gamma, lam * lam, defect.theta, seed)
    if log:
        log.debug(f"model2 closed form at gamma={gamma}, xi={xi}, form={form.value}")
    params = {
        "model": "model2",
        "gamma": float(gamma),
        "theta": defect.theta,
        "phi1": seed.phi1,
        "phi3": seed.phi3,
        "xi": xi,
        "form": form.value,
    }
    return ClosedFormMeasure(formula, params)
