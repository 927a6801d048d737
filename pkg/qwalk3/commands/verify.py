import numpy as np

from qwalk3.config import parse_run_config
from qwalk3.errors import ConfigError, VerificationFailure
from qwalk3.report import MeasureReport
from qwalk3.walk import stationarity_residual

from .base import BaseCommand
from .stationary import build

GRID_PHI = (0.0, np.pi / 6, np.pi / 4, 1.0)
GRID_GAMMA = (0.0, np.pi / 6, 1.0)
GRID_THETA = (0.25, 1 / 3, 0.7)
GRID_SEEDS = (
    ([1.0, 0.0], [0.0, 0.0]),
    ([0.0, 0.0], [1.0, 0.0]),
    ([1.0, 0.0], [0.0, 1.0]),
)


def grid_seqs(lo, hi):
    """Constant 1, delta at 0 and e^{ix/3} sampled on every site a check can reach"""
    wave = {
        str(x): [float(np.cos(x / 3)), float(np.sin(x / 3))] for x in range(lo, hi + 1)
    }
    return ([1.0, 0.0], {"0": [1.0, 0.0]}, wave)


def default_grid(range_lo=-10, range_hi=10, steps=10, form="matched"):
    """Run documents of the built-in verification grid"""
    window = {"range_lo": range_lo, "range_hi": range_hi, "steps": steps}
    for phi in GRID_PHI:
        for theta in GRID_THETA:
            for phi1, phi3 in GRID_SEEDS:
                yield dict(
                    model="model1",
                    phi=phi,
                    theta=theta,
                    phi1=phi1,
                    phi3=phi3,
                    form=form,
                    **window,
                )
    for gamma in GRID_GAMMA:
        for theta in GRID_THETA:
            for phi1, phi3 in GRID_SEEDS:
                yield dict(
                    model="model2",
                    gamma=gamma,
                    theta=theta,
                    phi1=phi1,
                    phi3=phi3,
                    form=form,
                    **window,
                )
    # the eigenvector reads seq(x - 1) and the walk reaches `steps` sites out
    seqs = grid_seqs(range_lo - steps - 2, range_hi + steps + 1)
    for phi in GRID_PHI:
        for seq in seqs:
            yield dict(model="free", phi=phi, seq=seq, **window)


def case_label(config) -> str:
    parts = [config.model]
    for name in ("phi", "gamma", "theta"):
        value = getattr(config, name)
        if value is not None:
            parts.append(f"{name}={value:.6g}")
    if config.model == "free":
        parts.append(config.function_seed().label)
    else:
        parts.append(f"seed={config.seed.phi1:g}/{config.seed.phi3:g}")
    return " ".join(parts)


class VerifyCommand(BaseCommand):
    """Check closed-form measures against the eigenvectors and the walk"""

    name = "verify"
    description = """
        For each case compare mu with |psi|^2, check psi against the
        eigen-equation and measure the drift of |psi|^2 over `steps` walk
        steps. Exits 1 when any check breaches its tolerance.
    """

    def checks(self, config):
        """(check, value, tolerance) triples for one run document"""
        if config.steps < 1:
            raise ConfigError("verify needs steps >= 1")
        built = build(config, log=self.log)
        construction = built.construction
        lo, hi = config.range_lo, config.range_hi
        mu = built.closed_form.values(lo, hi)
        window = construction.window(lo, hi)
        nu = np.sum(np.abs(window.values) ** 2, axis=1)
        scale = max(1.0, float(np.max(np.abs(window.values))))
        eigen = float(np.max(construction.eigen_residuals(lo, hi))) / scale
        drift = stationarity_residual(
            construction.family, construction.psi, lo, hi, config.steps
        )
        return [
            ("agreement", float(np.max(np.abs(mu - nu))), self.tol_agree),
            ("eigen", eigen, self.tol_agree),
            ("stationarity", drift, self.tol_stat),
        ]

    def cases(self):
        if not self.default_grid:
            return [self.load_document()]
        overrides = {
            key: value
            for key, value in (
                ("range_lo", self.range_lo),
                ("range_hi", self.range_hi),
                ("steps", self.steps),
            )
            if value is not None
        }
        return [parse_run_config(doc) for doc in default_grid(**overrides)]

    def run(self):
        rows = []
        failures = []
        cases = self.cases()
        for config in cases:
            label = case_label(config)
            for check, value, tol in self.checks(config):
                passed = value <= tol
                rows.append([label, check, value, tol, passed])
                if not passed:
                    failures.append(
                        {"case": label, "check": check, "value": value, "tol": tol}
                    )
                    self.log.error(
                        f"{label}: {check} residual {value:.3g} exceeds {tol:g}"
                    )
        summary = {
            "cases": len(cases),
            "checks": len(rows),
            "failed": len(failures),
            "passed": not failures,
        }
        if self.json_output:
            summary["failures"] = failures
        params = {} if self.default_grid else cases[0].to_dict()
        self.emit(
            MeasureReport(
                ["case", "check", "value", "tol", "pass"],
                rows,
                summary=summary,
                params=params,
            )
        )
        if failures:
            raise VerificationFailure(failures)
