from typing import Any, Dict, NamedTuple

import numpy as np

from qwalk3.config import STATIONARY_MODELS
from qwalk3.errors import ConfigError
from qwalk3.report import MeasureReport
from qwalk3.stationary import (
    ClosedFormMeasure,
    EigenConstruction,
    free_function_construction,
    free_function_measure,
    model1_eigvec,
    model1_measure,
    model2_eigvec,
    model2_measure,
)
from qwalk3.walk import stationarity_residual

from .base import BaseCommand


class Built(NamedTuple):
    construction: EigenConstruction
    closed_form: ClosedFormMeasure
    # tau or xi, keyed by name
    angle: Dict[str, Any]


def build(config, log=None) -> Built:
    """Eigenvector and closed-form measure for a stationary-model run document"""
    if config.model == "free":
        seq = config.function_seed()
        return Built(
            free_function_construction(config.phi, seq, log=log),
            free_function_measure(config.phi, seq),
            {},
        )
    if config.model == "model1":
        args = (config.phi, config.theta, config.seed, config.defect_form)
        construction = model1_eigvec(*args, log=log)
        return Built(
            construction, model1_measure(*args), {"tau": construction.tau_or_xi}
        )
    if config.model == "model2":
        args = (config.gamma, config.theta, config.seed, config.defect_form)
        construction = model2_eigvec(*args, log=log)
        return Built(
            construction, model2_measure(*args), {"xi": construction.tau_or_xi}
        )
    raise ConfigError(
        f"model {config.model} has no stationary construction; "
        f"use one of {', '.join(STATIONARY_MODELS)}"
    )


class StationaryCommand(BaseCommand):
    """Closed-form stationary measure of a run document"""

    name = "stationary"
    description = """
        Emit mu(x) over the lattice window for the free, model1 or model2
        construction, with the stationarity residual of the eigenvector behind it
    """

    def run(self):
        config = self.load_document()
        built = build(config, log=self.log)
        lo, hi = config.range_lo, config.range_hi
        mu = built.closed_form.values(lo, hi)
        header = ["x", "mu"]
        columns = [list(range(lo, hi + 1)), mu]
        if self.components:
            weights = np.abs(built.construction.window(lo, hi).values) ** 2
            header += ["c0", "c1", "c2"]
            columns += [weights[:, 0], weights[:, 1], weights[:, 2]]
        rows = [list(row) for row in zip(*columns)]

        nu = built.construction.measure(lo, hi).values
        summary = dict(built.angle)
        summary["lam"] = built.construction.lam
        summary["agreement_residual"] = float(np.max(np.abs(mu - nu)))
        if config.steps > 0:
            summary["stationarity_residual"] = stationarity_residual(
                built.construction.family, built.construction.psi, lo, hi, config.steps
            )
        if config.model != "free":
            summary["form"] = config.form
        return MeasureReport(header, rows, summary=summary, params=config.to_dict())
