"""
Coin matrices and coin families.

Every coin is a 3x3 unitary numpy array with dtype complex128. A family
assigns a coin to each lattice site; the walk only ever asks a family for
`coin(x)` or a stacked block of coins over a window.

Available coins
---------------
- grover(): the Grover matrix, (2/3) * ones - I
- generalized_grover(phi): cos(phi) G - i sin(phi) X, X the exchange matrix
- model_a(gamma): e^{i gamma} generalized_grover(gamma)
- exchange(): the anti-diagonal permutation
"""
from typing import Callable, NamedTuple, Optional, Union

import numpy as np

from qwalk3.errors import PreconditionError
from qwalk3.linalg3 import Mat3, as_mat3, unitarity_defect

__all__ = [
    "AssignedFamily",
    "CoinDecomposition",
    "CoinFamily",
    "DefectSpec",
    "assigned_family",
    "decompose",
    "defect_family",
    "exchange",
    "generalized_grover",
    "grover",
    "homogeneous_family",
    "model_a",
]

UNITARY_TOL = 1e-10


def _frozen(M) -> Mat3:
    M = np.array(M, dtype=np.complex128)
    M.setflags(write=False)
    return M


def grover() -> Mat3:
    thirds = np.array([[-1, 2, 2], [2, -1, 2], [2, 2, -1]], dtype=np.complex128)
    return _frozen(thirds / 3.0)


def exchange() -> Mat3:
    return _frozen(np.array([[0, 0, 1], [0, 1, 0], [1, 0, 0]], dtype=np.complex128))


def generalized_grover(phi: float) -> Mat3:
    """
    Return the phase-rotated Grover coin.

    Parameters
    ----------
    phi: float
        Rotation angle in radians. phi = 0 gives the Grover matrix.

    Returns
    -------
    NDArray[np.complex128]
        (1/3) [[-c, 2c, 2c - 3is], [2c, -c - 3is, 2c], [2c - 3is, 2c, -c]]
        with c = cos(phi), s = sin(phi).
    """
    c, s = np.cos(phi), np.sin(phi)
    corner = 2 * c - 3j * s
    return _frozen(
        np.array(
            [
                [-c, 2 * c, corner],
                [2 * c, -c - 3j * s, 2 * c],
                [corner, 2 * c, -c],
            ],
            dtype=np.complex128,
        )
        / 3.0
    )


def model_a(gamma: float) -> Mat3:
    """
    Return the gamma-family coin.

    Entries are polynomials in z = e^{2i gamma}; gamma = 0 gives the Grover
    matrix and the family equals e^{i gamma} generalized_grover(gamma).
    """
    z = np.exp(2j * gamma)
    side = 2 * (1 + z)
    corner = 5 - z
    diag = -1 - z
    return _frozen(
        np.array(
            [
                [diag, side, corner],
                [side, 2 * (1 - 2 * z), side],
                [corner, side, diag],
            ],
            dtype=np.complex128,
        )
        / 6.0
    )


class CoinDecomposition(NamedTuple):
    """Row split of a coin: upper keeps row 0, middle row 1, lower row 2"""

    upper: Mat3
    middle: Mat3
    lower: Mat3


def decompose(M) -> CoinDecomposition:
    M = as_mat3(M)
    parts = []
    for row in range(3):
        part = np.zeros((3, 3), dtype=np.complex128)
        part[row] = M[row]
        parts.append(part)
    return CoinDecomposition(*parts)


class DefectSpec(NamedTuple):
    """Phase defect e^{2 pi i theta} at the origin, theta strictly inside (0, 1)"""

    theta: float

    @classmethod
    def checked(cls, theta) -> "DefectSpec":
        if isinstance(theta, DefectSpec):
            theta = theta.theta
        theta = float(theta)
        if not 0.0 < theta < 1.0:
            raise PreconditionError(
                "theta_range", f"theta must lie strictly inside (0, 1), got {theta}"
            )
        return cls(theta)

    @property
    def eta(self) -> complex:
        return complex(np.exp(2j * np.pi * self.theta))


class CoinFamily:
    """
    A coin per lattice site: `base` everywhere, optionally phase-shifted at 0.

    Coins are read-only arrays; `coin(x)` for x != 0 returns `base` itself.
    """

    def __init__(self, base, defect: Optional[DefectSpec] = None):
        self.base = _frozen(as_mat3(base))
        self.defect = defect
        if defect is not None:
            self._origin = _frozen(defect.eta * self.base)
        else:
            self._origin = self.base

    def coin(self, x: int) -> Mat3:
        return self._origin if x == 0 else self.base

    def coins(self, lo: int, hi: int) -> np.ndarray:
        """Coins for sites lo..hi stacked into shape (hi - lo + 1, 3, 3)"""
        block = np.broadcast_to(self.base, (hi - lo + 1, 3, 3)).copy()
        if lo <= 0 <= hi:
            block[-lo] = self._origin
        return block

    def __repr__(self):
        theta = None if self.defect is None else self.defect.theta
        return f"{self.__class__.__name__}(theta={theta})"


class AssignedFamily:
    """An arbitrary site-to-coin assignment, used to probe the walk itself"""

    def __init__(self, assign: Callable[[int], Mat3]):
        self.assign = assign

    def coin(self, x: int) -> Mat3:
        return as_mat3(self.assign(x))

    def coins(self, lo: int, hi: int) -> np.ndarray:
        return np.stack([self.coin(x) for x in range(lo, hi + 1)])


def homogeneous_family(base) -> CoinFamily:
    return CoinFamily(base)


def assigned_family(assign: Callable[[int], Mat3]) -> AssignedFamily:
    return AssignedFamily(assign)


def defect_family(base, theta: Union[float, DefectSpec]) -> CoinFamily:
    """
    Family with coin e^{2 pi i theta} base at the origin and base elsewhere.

    Raises
    ------
    PreconditionError
        If base is not unitary to 1e-10 (`base_unitary`) or theta is not
        strictly inside (0, 1) (`theta_range`).
    """
    defect = DefectSpec.checked(theta)
    base = as_mat3(base)
    if unitarity_defect(base) > UNITARY_TOL:
        raise PreconditionError(
            "base_unitary",
            f"base coin is not unitary (defect {unitarity_defect(base):.3g})",
        )
    return CoinFamily(base, defect)
