"""
Eigenvectors of homogeneous walks from the reduced-matrix conditions.

Both constructors take a coin A whose entries are all nonzero and whose
centre entry is not unimodular, check the algebraic conditions on A's 2x2
minors, and return the eigenvector as a generator over the whole line.
"""
from typing import NamedTuple

import numpy as np

from qwalk3.coins import homogeneous_family
from qwalk3.linalg3 import as_mat3, minors
from qwalk3.walk import eigen_residual, materialize

from .construction import TOL, EigenConstruction, require
from .seeds import FunctionSeed, TwoParameterSeed

CHECK_LO, CHECK_HI = -8, 8


def _check_entries(A):
    require(
        bool(np.all(np.abs(A) > TOL)),
        "entries_nonzero",
        "every coin entry must be nonzero",
    )
    require(
        abs(abs(A[1, 1]) - 1.0) > TOL,
        "a22_modulus",
        f"|a22| = {abs(A[1, 1])} must differ from 1",
    )


def reduced_eigenvalue(A) -> complex:
    """-C / a13, the eigenvalue the two-wave form is built on"""
    A = as_mat3(A)
    return -minors(A).C / complex(A[0, 2])


class TwoWave(NamedTuple):
    """
    Shape of the two-wave eigenvector of a homogeneous walk.

    Component 0 is u p^x, component 2 is w q^x and the middle component is
    `middle * (a21 * first + a23 * third)`.
    """

    p: complex
    q: complex
    middle: complex
    a21: complex
    a23: complex
    a1_tilde: complex
    a2_tilde: complex

    @classmethod
    def of(cls, A, lam: complex) -> "TwoWave":
        A = as_mat3(A)
        a = A.astype(complex).tolist()
        a1_tilde = a[0][0] - a[0][2] * a[1][0] / a[1][2]
        a2_tilde = a[2][2] - a[1][2] * a[2][0] / a[1][0]
        return cls(
            p=lam / a1_tilde,
            q=a2_tilde / lam,
            middle=-a[0][2] / (a[0][1] * a[1][2]),
            a21=a[1][0],
            a23=a[1][2],
            a1_tilde=a1_tilde,
            a2_tilde=a2_tilde,
        )

    def at(self, x: int, u: complex, w: complex) -> np.ndarray:
        first = u * self.p ** x
        third = w * self.q ** x
        centre = self.middle * (self.a21 * first + self.a23 * third)
        return np.array([first, centre, third], dtype=np.complex128)

    def generator(self, u: complex, w: complex):
        return lambda x: self.at(x, u, w)


def two_wave_eigvec(A, phi1, phi3, log=None) -> EigenConstruction:
    """
    Two-wave eigenvector of the homogeneous walk driven by A.

    lambda = -C/a13 = -D/a31 must be unimodular. Component 0 is
    (lambda / a1~)^x phi1, component 2 is (a2~ / lambda)^x phi3 with
    a1~ = a11 - a13 a21 / a23 and a2~ = a33 - a23 a31 / a21.

    Raises
    ------
    PreconditionError
        With condition `seed_nonzero`, `entries_nonzero`, `a22_modulus`,
        `lambda_agreement` or `lambda_unit_modulus`.
    """
    seed = TwoParameterSeed.of(phi1, phi3).check()
    A = as_mat3(A)
    _check_entries(A)
    m = minors(A)
    lam = -m.C / complex(A[0, 2])
    other = -m.D / complex(A[2, 0])
    require(
        abs(lam - other) <= TOL,
        "lambda_agreement",
        f"-C/a13 = {lam} and -D/a31 = {other} differ",
    )
    require(
        abs(abs(lam) - 1.0) <= TOL,
        "lambda_unit_modulus",
        f"|-C/a13| = {abs(lam)} is not 1",
    )
    wave = TwoWave.of(A, lam)
    if log:
        log.debug(f"two-wave eigenvector: lambda={lam}, p={wave.p}, q={wave.q}")
    return EigenConstruction(
        lam=lam,
        a1_tilde=wave.a1_tilde,
        a2_tilde=wave.a2_tilde,
        psi=wave.generator(seed.phi1, seed.phi3),
        family=homogeneous_family(A),
        diagnostics={"p": wave.p, "q": wave.q},
    )


def _free_generator(seq, prefactor, a21, a23, ratio):
    def generator(x):
        here = seq(x)
        behind = ratio * seq(x - 1)
        centre = prefactor * (a21 * here + a23 * behind)
        return np.array([here, centre, behind], dtype=np.complex128)

    return generator


def free_function_eigvec(A, seq: FunctionSeed, log=None) -> EigenConstruction:
    """
    Eigenvector of the homogeneous walk driven by A built on a free function.

    With lambda = B/a11 = E/a33 unimodular and lambda^2 = a1~ a2~, where
    a1~ = a13 - a11 a23 / a21 and a2~ = a31 - a21 a33 / a23,

        psi(x) = (phi(x), -(a11 / (a12 a21)) (a21 phi(x) + a23 r phi(x-1)), r phi(x-1))

    with r = lambda / a1~. The result is checked against the eigen-equation on
    [-8, 8]; if it fails there while the prefactor -a13 / (a12 a23) passes,
    that prefactor is used instead and a warning is logged.

    Raises
    ------
    PreconditionError
        With condition `seed_nonzero`, `entries_nonzero`, `a22_modulus`,
        `lambda_agreement`, `lambda_unit_modulus` or `lambda_square`.
    """
    seq.check()
    A = as_mat3(A)
    _check_entries(A)
    a = A.astype(complex).tolist()
    m = minors(A)
    lam = m.B / a[0][0]
    other = m.E / a[2][2]
    require(
        abs(lam - other) <= TOL,
        "lambda_agreement",
        f"B/a11 = {lam} and E/a33 = {other} differ",
    )
    require(
        abs(abs(lam) - 1.0) <= TOL,
        "lambda_unit_modulus",
        f"|B/a11| = {abs(lam)} is not 1",
    )
    a1_tilde = a[0][2] - a[0][0] * a[1][2] / a[1][0]
    a2_tilde = a[2][0] - a[1][0] * a[2][2] / a[1][2]
    require(
        abs(lam * lam - a1_tilde * a2_tilde) <= TOL,
        "lambda_square",
        f"lambda^2 = {lam * lam} differs from a1~ a2~ = {a1_tilde * a2_tilde}",
    )
    ratio = lam / a1_tilde
    family = homogeneous_family(A)

    primary = -a[0][0] / (a[0][1] * a[1][0])
    psi = _free_generator(seq, primary, a[1][0], a[1][2], ratio)
    residual = _scaled_residual(family, psi, lam)
    prefactor = "primary"
    if residual > TOL:
        fallback = -a[0][2] / (a[0][1] * a[1][2])
        candidate = _free_generator(seq, fallback, a[1][0], a[1][2], ratio)
        candidate_residual = _scaled_residual(family, candidate, lam)
        if candidate_residual <= TOL:
            if log:
                log.warning(
                    f"middle prefactor {primary} fails the eigen-equation "
                    f"(residual {residual:.3g}); using {fallback} instead"
                )
            psi, residual, prefactor = candidate, candidate_residual, "fallback"
        elif log:
            log.warning(
                f"free-function eigenvector misses the eigen-equation by {residual:.3g}"
            )

    return EigenConstruction(
        lam=lam,
        a1_tilde=a1_tilde,
        a2_tilde=a2_tilde,
        psi=psi,
        family=family,
        diagnostics={"middle_prefactor": prefactor, "eigen_residual": residual},
    )


def _scaled_residual(family, psi, lam) -> float:
    scale = max(1.0, float(np.max(np.abs(materialize(psi, CHECK_LO, CHECK_HI).values))))
    return eigen_residual(family, psi, lam, CHECK_LO, CHECK_HI) / scale
