"""Free parameters the eigenvector constructions start from"""
from typing import Callable, Mapping, NamedTuple, Optional

import numpy as np

from qwalk3.errors import PreconditionError

# sites probed when a seed function gives no other way to tell it is zero
PROBE = range(-64, 65)


class TwoParameterSeed(NamedTuple):
    """The pair (phi1, phi3) of the two-wave constructions"""

    phi1: complex
    phi3: complex

    @classmethod
    def of(cls, phi1, phi3) -> "TwoParameterSeed":
        return cls(complex(phi1), complex(phi3))

    def check(self):
        if abs(self.phi1) + abs(self.phi3) == 0:
            raise PreconditionError(
                "seed_nonzero", "phi1 and phi3 are both zero (null eigenvector)"
            )
        return self


class FunctionSeed:
    """
    A free function x -> complex on the integer line.

    Build with one of the classmethods; `null` records whether the function
    is identically zero.
    """

    def __init__(
        self, fn: Callable[[int], complex], label: str, null: Optional[bool] = None
    ):
        self.fn = fn
        self.label = label
        if null is None:
            null = all(fn(x) == 0 for x in PROBE)
        self.null = null

    def __call__(self, x: int) -> complex:
        return complex(self.fn(x))

    def __repr__(self):
        return f"FunctionSeed({self.label})"

    @classmethod
    def constant(cls, value) -> "FunctionSeed":
        value = complex(value)
        return cls(lambda x: value, f"constant {value}", null=value == 0)

    @classmethod
    def delta(cls, x0: int = 0, value=1.0) -> "FunctionSeed":
        value = complex(value)
        return cls(
            lambda x: value if x == x0 else 0j, f"delta at {x0}", null=value == 0
        )

    @classmethod
    def plane_wave(cls, k: float, amplitude=1.0) -> "FunctionSeed":
        amplitude = complex(amplitude)
        return cls(
            lambda x: amplitude * complex(np.exp(1j * k * x)),
            f"plane wave k={k}",
            null=amplitude == 0,
        )

    @classmethod
    def from_table(cls, table: Mapping[int, complex]) -> "FunctionSeed":
        """Finitely supported function, zero off the table"""
        table = {int(x): complex(v) for x, v in table.items()}
        return cls(
            lambda x: table.get(x, 0j),
            f"table on [{min(table, default=0)}, {max(table, default=0)}]",
            null=all(v == 0 for v in table.values()),
        )

    def check(self):
        if self.null:
            raise PreconditionError(
                "seed_nonzero", f"{self.label} is identically zero"
            )
        return self
