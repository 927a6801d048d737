import numpy as np

from qwalk3.linalg3 import eigenvalues
from qwalk3.report import MeasureReport
from qwalk3.stationary import model2_eigenvalue, model2_xi, select_model1_eigenvalue

from .base import BaseCommand

SPECTRUM_TOL = 1e-8


def _order(lam):
    return (round(float(np.angle(lam)) % (2 * np.pi), 12), lam.real)


class EigenCommand(BaseCommand):
    """Eigenvalues of the coin and the eigenvalue the stationary constructions use"""

    name = "eigen"
    description = """
        Print the coin's eigenvalues with their moduli, and tau or xi for the
        phase-rotated coin families
    """

    def run(self):
        config = self.load_document()
        coin = config.coin()
        spectrum = sorted(eigenvalues(coin), key=_order)
        rows = [[k, lam.real, lam.imag, abs(lam)] for k, lam in enumerate(spectrum)]
        summary = {}
        if config.model in ("gphi", "model1"):
            chosen = select_model1_eigenvalue(config.phi, log=self.log)
            summary.update(
                tau=chosen.tau,
                lam=chosen.lam,
                source=chosen.source,
                in_spectrum=chosen.in_spectrum,
            )
        elif config.model in ("agamma", "model2"):
            lam = model2_eigenvalue(config.gamma)
            summary.update(
                xi=model2_xi(config.gamma),
                lam=lam,
                in_spectrum=min(abs(lam - s) for s in spectrum) <= SPECTRUM_TOL,
            )
        elif config.model == "free":
            lam = complex(np.exp(-1j * config.phi))
            summary.update(
                lam=lam,
                in_spectrum=min(abs(lam - s) for s in spectrum) <= SPECTRUM_TOL,
            )
        if summary.get("in_spectrum") is False:
            self.log.info(f"eigenvalue {summary['lam']} is not in the coin spectrum")
        return MeasureReport(
            ["k", "re", "im", "modulus"], rows, summary=summary, params=config.to_dict()
        )
