"""
Complex 3-vector and 3x3 matrix helpers.

Vectors and matrices are numpy arrays of dtype complex128 with shapes (3,)
and (3, 3). Scalars are builtin `complex`. Nothing here depends on the walk;
the module only knows about single matrices.
"""
from typing import Dict, NamedTuple, Tuple

import numpy as np
from numpy.typing import NDArray

__all__ = [
    "Minors",
    "as_mat3",
    "as_vec3",
    "char_poly",
    "det",
    "eigenvalues",
    "entries",
    "identity",
    "mat_mul",
    "minors",
    "unitarity_defect",
]

Mat3 = NDArray[np.complex128]
Vec3 = NDArray[np.complex128]

ENTRY_NAMES = ("a", "b", "c", "d", "e", "f", "g", "h", "k")

OMEGA = np.exp(2j * np.pi / 3)

# Newton polish and root merging for the cubic solver
NEWTON_STEPS = 4
CLUSTER_TOL = 1e-7


class Minors(NamedTuple):
    """The four 2x2 determinants of neighbouring rows and columns"""

    B: complex
    C: complex
    D: complex
    E: complex


def as_mat3(M) -> Mat3:
    M = np.asarray(M, dtype=np.complex128)
    if M.shape != (3, 3):
        raise ValueError(f"Expected a 3x3 matrix, got shape {M.shape}")
    return M


def as_vec3(v) -> Vec3:
    v = np.asarray(v, dtype=np.complex128)
    if v.shape != (3,):
        raise ValueError(f"Expected a 3-vector, got shape {v.shape}")
    return v


def identity() -> Mat3:
    return np.eye(3, dtype=np.complex128)


def entries(M) -> Dict[str, complex]:
    """Name the entries row by row: a b c / d e f / g h k"""
    M = as_mat3(M)
    return {name: complex(value) for name, value in zip(ENTRY_NAMES, M.ravel())}


def mat_mul(M, v) -> Vec3:
    return as_mat3(M) @ as_vec3(v)


def unitarity_defect(M) -> float:
    """Max-norm of M M^dagger - I"""
    M = as_mat3(M)
    return float(np.max(np.abs(M @ M.conj().T - np.eye(3))))


def minors(M) -> Minors:
    M = as_mat3(M)
    a = M
    return Minors(
        B=complex(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]),
        C=complex(a[0, 1] * a[1, 2] - a[0, 2] * a[1, 1]),
        D=complex(a[1, 0] * a[2, 1] - a[1, 1] * a[2, 0]),
        E=complex(a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1]),
    )


def det(M) -> complex:
    a = as_mat3(M)
    return complex(
        a[0, 0] * (a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1])
        - a[0, 1] * (a[1, 0] * a[2, 2] - a[1, 2] * a[2, 0])
        + a[0, 2] * (a[1, 0] * a[2, 1] - a[1, 1] * a[2, 0])
    )


def char_poly(M) -> Tuple[complex, complex, complex, complex]:
    """
    Monic characteristic polynomial of M.

    Returns
    -------
    tuple
        (1, b, c, d) with det(lambda I - M) = lambda^3 + b lambda^2 + c lambda + d
    """
    a = as_mat3(M)
    trace = a[0, 0] + a[1, 1] + a[2, 2]
    principal = (
        (a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])
        + (a[0, 0] * a[2, 2] - a[0, 2] * a[2, 0])
        + (a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1])
    )
    return 1.0 + 0j, complex(-trace), complex(principal), -det(a)


def _horner(coeffs, z):
    _, b, c, d = coeffs
    return ((z + b) * z + c) * z + d


def _slope(coeffs, z):
    _, b, c, _ = coeffs
    return (3 * z + 2 * b) * z + c


def _polish(coeffs, root):
    value = _horner(coeffs, root)
    for _ in range(NEWTON_STEPS):
        slope = _slope(coeffs, root)
        if slope == 0:
            break
        candidate = root - value / slope
        candidate_value = _horner(coeffs, candidate)
        if abs(candidate_value) >= abs(value):
            break
        root, value = candidate, candidate_value
    return root


def _merge_clusters(roots, trace):
    """Replace nearly coincident roots by the value the trace implies"""
    close = [
        (i, j)
        for i in range(3)
        for j in range(i + 1, 3)
        if abs(roots[i] - roots[j]) < CLUSTER_TOL
    ]
    if len(close) >= 2:
        return [trace / 3] * 3
    if close:
        i, j = close[0]
        (k,) = {0, 1, 2} - {i, j}
        mean = (trace - roots[k]) / 2
        roots = list(roots)
        roots[i] = roots[j] = mean
    return roots


def eigenvalues(M) -> Tuple[complex, complex, complex]:
    """
    Eigenvalues of a 3x3 complex matrix.

    Uses the Cardano formula on the depressed characteristic cubic,
    then Newton-polishes each root.

    Parameters
    ----------
    M: array_like
        3x3 complex matrix.

    Returns
    -------
    tuple of complex
        The three roots of det(M - lambda I) = 0 as a multiset, repeated
        roots included. Order is fixed for a given input but otherwise
        unspecified.
    """
    coeffs = char_poly(M)
    _, b, c, d = coeffs
    shift = -b / 3
    p = c - b * b / 3
    q = 2 * b ** 3 / 27 - b * c / 3 + d

    root_disc = np.sqrt(complex((q / 2) ** 2 + (p / 3) ** 3))
    plus, minus = -q / 2 + root_disc, -q / 2 - root_disc
    u_cubed = plus if abs(plus) >= abs(minus) else minus

    if u_cubed == 0:
        roots = [shift, shift, shift]
    else:
        u = np.power(complex(u_cubed), 1.0 / 3.0)
        v = -p / (3 * u)
        roots = [u * OMEGA ** k + v * OMEGA ** (-k) + shift for k in range(3)]

    roots = [_polish(coeffs, complex(r)) for r in roots]
    roots = _merge_clusters(roots, -b)
    return tuple(complex(r) for r in roots)
