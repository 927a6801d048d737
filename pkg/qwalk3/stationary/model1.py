"""
Stationary measures of the generalized-Grover walk with a phase defect at 0.

The coin is generalized_grover(phi) everywhere except the origin, where it
is multiplied by eta = e^{2 pi i theta}.
"""
import functools
from typing import Dict, NamedTuple

import numpy as np

from qwalk3.coins import (
    DefectSpec,
    defect_family,
    generalized_grover,
    homogeneous_family,
)
from qwalk3.errors import SelectionError
from qwalk3.linalg3 import eigenvalues
from qwalk3.walk import eigen_residual, materialize, stationarity_residual

from .construction import (
    ClosedFormMeasure,
    DefectForm,
    EigenConstruction,
    TOL,
    require_cos,
)
from .defect import kappa, local_formula, matched_formula, matched_generator
from .reduced import TwoWave, reduced_eigenvalue
from .seeds import TwoParameterSeed

# oracle used to pick the eigenvalue
PROBE_SEED = TwoParameterSeed(1 + 0j, 1j)
PROBE_LO, PROBE_HI = -10, 10
PROBE_STEPS = 5
SPECTRUM_TOL = 1e-8
STATIONARY_TOL = 1e-8


class Model1Eigenvalue(NamedTuple):
    lam: complex
    tau: float
    # "phase" for e^{-i phi}, "negated phase" for -e^{-i phi}, "reduced" for -C/a13
    source: str
    in_spectrum: bool
    residuals: Dict[str, float]


def _in_spectrum(lam, spectrum) -> bool:
    return min(abs(lam - s) for s in spectrum) <= SPECTRUM_TOL


@functools.lru_cache(maxsize=128)
def _select(phi: float) -> Model1Eigenvalue:
    coin = generalized_grover(phi)
    spectrum = eigenvalues(coin)
    phase = complex(np.exp(-1j * phi))
    candidates = [
        (source, lam)
        for source, lam in (("phase", phase), ("negated phase", -phase))
        if _in_spectrum(lam, spectrum)
    ]
    candidates.append(("reduced", reduced_eigenvalue(coin)))

    family = homogeneous_family(coin)
    residuals = {}
    for source, lam in candidates:
        if abs(abs(lam) - 1.0) > TOL:
            residuals[source] = abs(abs(lam) - 1.0)
            continue
        probe = TwoWave.of(coin, lam).generator(*PROBE_SEED)
        window = materialize(probe, PROBE_LO, PROBE_HI)
        scale = max(1.0, float(np.max(np.abs(window.values))))
        residual = eigen_residual(family, probe, lam, PROBE_LO, PROBE_HI) / scale
        residuals[source] = residual
        if residual > TOL:
            continue
        drift = stationarity_residual(family, probe, PROBE_LO, PROBE_HI, PROBE_STEPS)
        if drift > STATIONARY_TOL:
            residuals[source] = drift
            continue
        return Model1Eigenvalue(
            lam=lam,
            tau=float(np.angle(lam)) % (2 * np.pi),
            source=source,
            in_spectrum=_in_spectrum(lam, spectrum),
            residuals=residuals,
        )
    raise SelectionError(f"no eigenvalue candidate passes at phi={phi}", residuals)


def select_model1_eigenvalue(phi: float, log=None) -> Model1Eigenvalue:
    """
    Pick the eigenvalue e^{i tau} the defect construction is built on.

    Candidates are e^{-i phi} and -e^{-i phi}, kept when they are eigenvalues
    of the coin, then the reduced value -C/a13. The first one whose
    homogeneous two-wave vector passes the eigen-equation on [-10, 10] and
    stays stationary for five steps wins.
    """
    require_cos(phi, "phi")
    chosen = _select(float(phi))
    if log:
        log.debug(
            f"phi={phi}: tau={chosen.tau} from {chosen.source} candidate "
            f"(in coin spectrum: {chosen.in_spectrum}, residuals {chosen.residuals})"
        )
    return chosen


def model1_tau(phi: float, log=None) -> float:
    return select_model1_eigenvalue(phi, log=log).tau


def _local_generator(phi, tau, eta, seed):
    ahead = -np.exp(1j * phi) * np.exp(1j * tau)
    behind = -np.exp(-1j * phi) * np.exp(-1j * tau)
    k = kappa(phi)
    phi1, phi3 = seed

    def generator(x):
        if x == 0:
            first, third = phi1, phi3
        elif x == 1:
            first, third = ahead * phi1, eta * behind * phi3
        elif x == -1:
            first, third = eta * behind * phi1, ahead * phi3
        else:
            first, third = ahead ** x * phi1, behind ** x * phi3
        return np.array([first, -k * (first + third), third], dtype=np.complex128)

    return generator


def _checked(phi, theta, seed):
    require_cos(phi, "phi")
    defect = DefectSpec.checked(theta)
    seed = TwoParameterSeed.of(*seed).check()
    return defect, seed


def model1_eigvec(
    phi: float, theta: float, seed, form: DefectForm = DefectForm.MATCHED, log=None
) -> EigenConstruction:
    """
    Eigenvector candidate of the phase-defect generalized-Grover walk.

    Parameters
    ----------
    phi: float
        Coin angle, cos(phi) != 0.
    theta: float
        Defect phase in (0, 1).
    seed: pair of complex
        (phi1, phi3), not both zero.
    form: DefectForm
        MATCHED gives a genuine eigenvector; LOCAL gives the four-case form
        whose measure follows the local closed form but which is in general
        not stationary.

    Raises
    ------
    PreconditionError
        `cos_nonzero`, `theta_range` or `seed_nonzero`.
    SelectionError
        If no eigenvalue candidate passes.
    """
    defect, seed = _checked(phi, theta, seed)
    chosen = select_model1_eigenvalue(phi, log=log)
    coin = generalized_grover(phi)
    eta = defect.eta
    wave = TwoWave.of(coin, chosen.lam)
    diagnostics = {"source": chosen.source, "in_spectrum": chosen.in_spectrum}
    if DefectForm(form) is DefectForm.MATCHED:
        psi, sides, _ = matched_generator(coin, chosen.lam, eta, seed)
        diagnostics.update(sides._asdict())
    else:
        psi = _local_generator(phi, chosen.tau, eta, seed)
        # eigenvalue the four-case form is built for on each piece
        diagnostics["case_lambdas"] = {
            "bulk": chosen.lam,
            "x=1": chosen.lam,
            "x=-1": chosen.lam,
            "x=0": eta * chosen.lam,
        }
    return EigenConstruction(
        lam=chosen.lam,
        a1_tilde=wave.a1_tilde,
        a2_tilde=wave.a2_tilde,
        psi=psi,
        family=defect_family(coin, defect),
        tau_or_xi=chosen.tau,
        eta=eta,
        form=DefectForm(form),
        diagnostics=diagnostics,
    )


def model1_measure(
    phi: float, theta: float, seed, form: DefectForm = DefectForm.MATCHED, log=None
) -> ClosedFormMeasure:
    """Closed-form stationary measure matching `model1_eigvec` with the same arguments"""
    defect, seed = _checked(phi, theta, seed)
    chosen = select_model1_eigenvalue(phi, log=log)
    tau = chosen.tau
    form = DefectForm(form)
    if form is DefectForm.MATCHED:
        _, sides, _ = matched_generator(
            generalized_grover(phi), chosen.lam, defect.eta, seed
        )
        p = complex(-np.exp(1j * (phi + tau)))
        formula = matched_formula(phi, p, sides, seed)
    else:
        p2 = complex(np.exp(2j * (phi + tau)))
        formula = local_formula(phi, p2, defect.theta, seed)
    params = {
        "model": "model1",
        "phi": float(phi),
        "theta": defect.theta,
        "phi1": seed.phi1,
        "phi3": seed.phi3,
        "tau": tau,
        "form": form.value,
    }
    return ClosedFormMeasure(formula, params)
