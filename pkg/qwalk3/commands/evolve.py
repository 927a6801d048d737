import numpy as np

from qwalk3.coins import defect_family, homogeneous_family
from qwalk3.errors import WindowError
from qwalk3.report import MeasureReport
from qwalk3.walk import evolve_windows, measure, point_mass, total_mass

from .base import BaseCommand
from .stationary import build


def initial_state(config, log=None):
    """(family, generator) a run document starts the walk from"""
    if config.model in ("free", "model1", "model2"):
        construction = build(config, log=log).construction
        return construction.family, construction.psi
    coin = config.coin()
    if config.theta is not None:
        family = defect_family(coin, config.theta)
    else:
        family = homogeneous_family(coin)
    if config.seq is None:
        return family, point_mass()
    seq = config.function_seed().check()

    def generator(x):
        return np.array([seq(x), 0, 0], dtype=np.complex128)

    return family, generator


class EvolveCommand(BaseCommand):
    """Walk a run document's initial state and print the measure after every step"""

    name = "evolve"
    description = """
        Emit nu(x) for steps 0..N; step n covers [range_lo + n, range_hi - n],
        the sites whose values are exact without padding
    """

    def run(self):
        config = self.load_document()
        lo, hi, n = config.range_lo, config.range_hi, config.steps
        if 2 * n > hi - lo:
            raise WindowError(
                f"window [{lo}, {hi}] is too small for {n} steps; "
                f"it needs at least {2 * n + 1} sites"
            )
        family, gen = initial_state(config, log=self.log)
        rows = []
        windows = []
        masses = []
        for step, psi in evolve_windows(family, gen, lo + n, hi - n, n):
            nu = measure(psi)
            windows.append([psi.lo, psi.hi])
            masses.append(total_mass(nu))
            rows.extend([step, x, nu[x]] for x in nu.positions())
        self.log.debug(f"total mass per step: {masses}")
        return MeasureReport(
            ["step", "x", "nu"],
            rows,
            summary={"windows": windows, "total_mass": masses},
            params=config.to_dict(),
        )
