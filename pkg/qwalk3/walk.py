"""
Wave functions on the integer line and the one-step evolution.

The walk shifts chirality component 0 to the left and component 2 to the
right, so one step reads

    psi'(x)[0] = row0(C_{x+1}) . psi(x+1)
    psi'(x)[1] = row1(C_x)     . psi(x)
    psi'(x)[2] = row2(C_{x-1}) . psi(x-1)

`apply` never pads: a window [lo, hi] maps to [lo + 1, hi - 1], so every
value it reports is exact for the operator on the whole line, bounded or not.
"""
from typing import Callable, Iterator, Tuple

import numpy as np

from qwalk3.errors import PreconditionError, WindowError
from qwalk3.linalg3 import Vec3, as_vec3

__all__ = [
    "Measure",
    "WaveFunctionGenerator",
    "WindowedWaveFunction",
    "apply",
    "eigen_residual",
    "eigen_residuals",
    "evolve_n",
    "evolve_windows",
    "materialize",
    "measure",
    "point_mass",
    "stationarity_residual",
    "total_mass",
]

WaveFunctionGenerator = Callable[[int], Vec3]


def _check_bounds(lo, hi):
    if lo > hi:
        raise WindowError(f"Window [{lo}, {hi}] is empty")


class WindowedWaveFunction:
    """Values of a wave function on the sites lo..hi, one row per site"""

    def __init__(self, lo: int, hi: int, values):
        _check_bounds(lo, hi)
        values = np.asarray(values, dtype=np.complex128)
        if values.shape != (hi - lo + 1, 3):
            raise WindowError(
                f"Window [{lo}, {hi}] needs values of shape {(hi - lo + 1, 3)}, "
                f"got {values.shape}"
            )
        if not np.all(np.isfinite(values)):
            raise WindowError(f"Non-finite amplitude in window [{lo}, {hi}]")
        self.lo = int(lo)
        self.hi = int(hi)
        self.values = values

    def __len__(self):
        return self.hi - self.lo + 1

    def __getitem__(self, x: int) -> Vec3:
        if not self.lo <= x <= self.hi:
            raise WindowError(f"Site {x} outside window [{self.lo}, {self.hi}]")
        return self.values[x - self.lo]

    def positions(self) -> range:
        return range(self.lo, self.hi + 1)

    def window(self, lo: int, hi: int) -> "WindowedWaveFunction":
        if lo < self.lo or hi > self.hi:
            raise WindowError(
                f"[{lo}, {hi}] is not inside [{self.lo}, {self.hi}]"
            )
        return WindowedWaveFunction(
            lo, hi, self.values[lo - self.lo : hi - self.lo + 1]
        )


class Measure:
    """Nonnegative weights on the sites lo..hi"""

    def __init__(self, lo: int, hi: int, values):
        _check_bounds(lo, hi)
        values = np.asarray(values, dtype=np.float64)
        if values.shape != (hi - lo + 1,):
            raise WindowError(
                f"Window [{lo}, {hi}] needs {hi - lo + 1} weights, got {values.shape}"
            )
        if not np.all(np.isfinite(values)) or np.any(values < 0):
            raise WindowError("Measure weights must be finite and nonnegative")
        self.lo = int(lo)
        self.hi = int(hi)
        self.values = values

    def __len__(self):
        return self.hi - self.lo + 1

    def __getitem__(self, x: int) -> float:
        if not self.lo <= x <= self.hi:
            raise WindowError(f"Site {x} outside window [{self.lo}, {self.hi}]")
        return float(self.values[x - self.lo])

    def positions(self) -> range:
        return range(self.lo, self.hi + 1)

    def window(self, lo: int, hi: int) -> "Measure":
        if lo < self.lo or hi > self.hi:
            raise WindowError(
                f"[{lo}, {hi}] is not inside [{self.lo}, {self.hi}]"
            )
        return Measure(lo, hi, self.values[lo - self.lo : hi - self.lo + 1])


def point_mass(
    x0: int = 0, component: int = 0, value: complex = 1.0
) -> WaveFunctionGenerator:
    """Generator that is `value` in one chirality component at x0 and zero elsewhere"""
    basis = np.zeros(3, dtype=np.complex128)
    basis[component] = value

    def generator(x):
        if x == x0:
            return basis.copy()
        return np.zeros(3, dtype=np.complex128)

    return generator


def materialize(gen: WaveFunctionGenerator, lo: int, hi: int) -> WindowedWaveFunction:
    _check_bounds(lo, hi)
    values = np.array([as_vec3(gen(x)) for x in range(lo, hi + 1)])
    return WindowedWaveFunction(lo, hi, values)


def apply(family, psi: WindowedWaveFunction) -> WindowedWaveFunction:
    """
    One step of the walk on a window.

    Returns the exact values on [psi.lo + 1, psi.hi - 1]; nothing outside the
    input window is assumed.
    """
    if len(psi) < 3:
        raise WindowError(
            f"apply needs a window of at least 3 sites, got [{psi.lo}, {psi.hi}]"
        )
    coins = family.coins(psi.lo, psi.hi)
    values = psi.values
    # rows[:, k] is row k of the local coin applied to the local amplitude
    rows = (
        coins[:, :, 0] * values[:, 0:1]
        + coins[:, :, 1] * values[:, 1:2]
        + coins[:, :, 2] * values[:, 2:3]
    )
    out = np.stack([rows[2:, 0], rows[1:-1, 1], rows[:-2, 2]], axis=1)
    return WindowedWaveFunction(psi.lo + 1, psi.hi - 1, out)


def evolve_windows(
    family, gen: WaveFunctionGenerator, center_lo: int, center_hi: int, n: int
) -> Iterator[Tuple[int, WindowedWaveFunction]]:
    """
    Yield (step, window) for steps 0..n.

    The initial window is [center_lo - n, center_hi + n]; after `step`
    applications the window has shrunk to [center_lo - n + step,
    center_hi + n - step] and holds exact values.
    """
    if n < 0:
        raise WindowError(f"Number of steps must be >= 0, got {n}")
    _check_bounds(center_lo, center_hi)
    psi = materialize(gen, center_lo - n, center_hi + n)
    yield 0, psi
    for step in range(1, n + 1):
        psi = apply(family, psi)
        yield step, psi


def evolve_n(
    family, gen: WaveFunctionGenerator, center_lo: int, center_hi: int, n: int
) -> WindowedWaveFunction:
    """Exact values of U^n psi on [center_lo, center_hi]"""
    for _, psi in evolve_windows(family, gen, center_lo, center_hi, n):
        pass
    return psi


def measure(psi: WindowedWaveFunction) -> Measure:
    v = psi.values
    return Measure(psi.lo, psi.hi, np.sum(v.real ** 2 + v.imag ** 2, axis=1))


def total_mass(nu: Measure) -> float:
    return float(np.sum(nu.values))


def stationarity_residual(
    family, gen: WaveFunctionGenerator, lo: int, hi: int, n_max: int
) -> float:
    """
    Largest relative change of the measure on [lo, hi] over steps 1..n_max.

    Each change is |nu_n(x) - nu_0(x)| / max(1, nu_0(x)).
    """
    if n_max < 1:
        raise WindowError(f"n_max must be >= 1, got {n_max}")
    worst = 0.0
    nu0 = None
    for step, psi in evolve_windows(family, gen, lo, hi, n_max):
        nu = measure(psi.window(lo, hi)).values
        if step == 0:
            if not np.any(nu > 0):
                raise PreconditionError(
                    "measure_nonzero", f"measure vanishes on [{lo}, {hi}]"
                )
            nu0 = nu
            scale = np.maximum(1.0, nu0)
            continue
        worst = max(worst, float(np.max(np.abs(nu - nu0) / scale)))
    return worst


def eigen_residuals(
    family, gen: WaveFunctionGenerator, lam: complex, lo: int, hi: int
) -> np.ndarray:
    """Per-site max-norm of (U psi)(x) - lam psi(x) for x in [lo, hi]"""
    _check_bounds(lo, hi)
    stepped = apply(family, materialize(gen, lo - 1, hi + 1))
    here = materialize(gen, lo, hi)
    return np.max(np.abs(stepped.values - lam * here.values), axis=1)


def eigen_residual(
    family, gen: WaveFunctionGenerator, lam: complex, lo: int, hi: int
) -> float:
    return float(np.max(eigen_residuals(family, gen, lam, lo, hi)))
