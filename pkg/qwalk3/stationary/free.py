"""Stationary measures of the homogeneous generalized-Grover walk built on a free function"""
from qwalk3.coins import generalized_grover

from .construction import ClosedFormMeasure, EigenConstruction, require_cos
from .reduced import free_function_eigvec
from .seeds import FunctionSeed


def free_function_construction(
    phi: float, seq: FunctionSeed, log=None
) -> EigenConstruction:
    """Free-function eigenvector of generalized_grover(phi), lambda = e^{-i phi}"""
    require_cos(phi, "phi")
    return free_function_eigvec(generalized_grover(phi), seq, log=log)


def free_function_measure(phi: float, seq: FunctionSeed) -> ClosedFormMeasure:
    """
    mu(x) = 5/4 (|phi(x)|^2 + |phi(x-1)|^2) + 1/2 Re(phi(x) conj(phi(x-1))).

    The measure does not depend on the coin angle, but cos(phi) must not vanish
    for the eigenvector behind it to exist.
    """
    require_cos(phi, "phi")
    seq.check()

    def formula(x):
        here = seq(x)
        behind = seq(x - 1)
        return 1.25 * (abs(here) ** 2 + abs(behind) ** 2) + 0.5 * (
            here * behind.conjugate()
        ).real

    return ClosedFormMeasure(
        formula, {"model": "free", "phi": float(phi), "seq": seq.label}
    )
