"""Records returned by the eigenvector constructors"""
import enum
from typing import Any, Callable, Dict, Optional

import numpy as np

from qwalk3.errors import PreconditionError
from qwalk3.walk import (
    Measure,
    WaveFunctionGenerator,
    eigen_residuals,
    materialize,
    measure,
)

# absolute tolerance on unit-scale quantities
TOL = 1e-10
# |cos| below this counts as zero
COS_EPS = 1e-9


class DefectForm(enum.Enum):
    """How the defect constructions glue the two half-lines at the origin"""

    # genuine generalized eigenvector of the one-defect walk
    MATCHED = "matched"
    # four-case piecewise form with the phase only at x = -1, 1
    LOCAL = "local"


def require(ok: bool, condition: str, message: str):
    if not ok:
        raise PreconditionError(condition, message)


def require_cos(angle: float, name: str):
    require(
        abs(np.cos(angle)) > COS_EPS,
        "cos_nonzero",
        f"cos({name}) vanishes at {name}={angle}",
    )


class EigenConstruction:
    """
    A candidate eigenpair (lam, psi) of `family` and the scalars used to build it.

    `psi` is a generator over the whole line. `diagnostics` holds
    construction-specific extras such as side amplitudes or the prefactor
    actually used.
    """

    def __init__(
        self,
        lam: complex,
        a1_tilde: complex,
        a2_tilde: complex,
        psi: WaveFunctionGenerator,
        family,
        tau_or_xi: Optional[float] = None,
        eta: Optional[complex] = None,
        form: Optional[DefectForm] = None,
        diagnostics: Optional[Dict[str, Any]] = None,
    ):
        lam = complex(lam)
        require(
            abs(abs(lam) - 1.0) <= TOL,
            "lambda_unit_modulus",
            f"|lambda| = {abs(lam)} is not 1",
        )
        self.lam = lam
        self.a1_tilde = complex(a1_tilde)
        self.a2_tilde = complex(a2_tilde)
        self.psi = psi
        self.family = family
        self.tau_or_xi = tau_or_xi
        self.eta = eta
        self.form = form
        self.diagnostics = dict(diagnostics or {})

    def window(self, lo: int, hi: int):
        return materialize(self.psi, lo, hi)

    def measure(self, lo: int, hi: int) -> Measure:
        return measure(self.window(lo, hi))

    def eigen_residuals(self, lo: int, hi: int) -> np.ndarray:
        """Per-site distance from the eigen-equation, zero for a genuine eigenvector"""
        return eigen_residuals(self.family, self.psi, self.lam, lo, hi)

    def __repr__(self):
        return (
            f"EigenConstruction(lam={self.lam:.6g}, tau_or_xi={self.tau_or_xi}, "
            f"form={self.form})"
        )


class ClosedFormMeasure:
    """An explicit x -> mu(x) formula together with the parameters it was built from"""

    def __init__(self, formula: Callable[[int], float], params: Dict[str, Any]):
        self.formula = formula
        self.params = dict(params)

    def __call__(self, x: int) -> float:
        return float(self.formula(x))

    def values(self, lo: int, hi: int) -> np.ndarray:
        return np.array([self(x) for x in range(lo, hi + 1)], dtype=np.float64)
