"""
Shared pieces of the one-defect constructions.

The matched eigenvector puts (phi1, m0, phi3) at the origin and continues
with the homogeneous two-wave form on each half-line. The amplitude moving
left out of the origin and the one moving right are read off the
eigen-equation at the defect, so the result is an eigenvector of the
walk with the phase at 0 for the single eigenvalue lambda.
"""
from typing import NamedTuple

import numpy as np

from qwalk3.coins import DefectSpec
from qwalk3.linalg3 import as_mat3

from .reduced import TwoWave
from .seeds import TwoParameterSeed


def delta(x: int, theta: float) -> complex:
    """Phase correction of the closed forms: e^{2 pi i theta} at -1, its conjugate at 1"""
    eta = DefectSpec.checked(theta).eta
    if x == -1:
        return eta
    if x == 1:
        return eta.conjugate()
    return 1 + 0j


def kappa(angle: float) -> complex:
    """1 - (3/2) i tan(angle); the middle component is -kappa (first + third)"""
    return 1 - 1.5j * np.tan(angle)


class SideAmplitudes(NamedTuple):
    """Amplitudes fixed by the eigen-equation at the defect"""

    m0: complex
    # component 0 at x = -1
    u_left: complex
    # component 2 at x = 1
    w_right: complex


def matched_amplitudes(
    coin, lam: complex, eta: complex, seed: TwoParameterSeed
) -> SideAmplitudes:
    a = as_mat3(coin).astype(complex).tolist()
    phi1, phi3 = seed
    m0 = eta * (a[1][0] * phi1 + a[1][2] * phi3) / (lam - eta * a[1][1])
    u_left = eta / lam * (a[0][0] * phi1 + a[0][1] * m0 + a[0][2] * phi3)
    w_right = eta / lam * (a[2][0] * phi1 + a[2][1] * m0 + a[2][2] * phi3)
    return SideAmplitudes(m0, u_left, w_right)


def matched_generator(coin, lam: complex, eta: complex, seed: TwoParameterSeed):
    """Generator of the matched eigenvector and the amplitudes it was glued with"""
    wave = TwoWave.of(coin, lam)
    sides = matched_amplitudes(coin, lam, eta, seed)
    phi1, phi3 = seed
    origin = np.array([phi1, sides.m0, phi3], dtype=np.complex128)
    # continue each half-line so that psi(-1)[0] and psi(1)[2] are the side amplitudes
    right_w = sides.w_right / wave.q
    left_u = sides.u_left * wave.p

    def generator(x):
        if x == 0:
            return origin.copy()
        if x > 0:
            return wave.at(x, phi1, right_w)
        return wave.at(x, left_u, phi3)

    return generator, sides, wave


def matched_formula(
    angle: float, p: complex, sides: SideAmplitudes, seed: TwoParameterSeed
):
    """
    Closed-form measure of the matched eigenvector.

    Off the origin it is (2 + 9/4 tan^2)(|A|^2 + |B|^2)
    + (2 + 9/2 tan^2) Re(p^{2x} A conj(B)), with (A, B) = (phi1, p w_right)
    on the right and (p u_left, phi3) on the left.
    """
    t2 = np.tan(angle) ** 2
    flat = 2 + 2.25 * t2
    cross = 2 + 4.5 * t2
    phi1, phi3 = seed
    right = (phi1, p * sides.w_right)
    left = (p * sides.u_left, phi3)
    at_origin = abs(phi1) ** 2 + abs(sides.m0) ** 2 + abs(phi3) ** 2

    def formula(x):
        if x == 0:
            return at_origin
        first, third = right if x > 0 else left
        wave = (p ** (2 * x) * first * third.conjugate()).real
        return flat * (abs(first) ** 2 + abs(third) ** 2) + cross * wave

    return formula


def local_formula(angle: float, p2: complex, theta: float, seed: TwoParameterSeed):
    """
    Closed-form measure of the four-case local form.

    (2 + 9/4 tan^2)(|phi1|^2 + |phi3|^2)
    + (2 + 9/2 tan^2) Re(delta(x) p2^x phi1 conj(phi3))
    """
    t2 = np.tan(angle) ** 2
    flat = (2 + 2.25 * t2) * (abs(seed.phi1) ** 2 + abs(seed.phi3) ** 2)
    cross = 2 + 4.5 * t2
    product = seed.phi1 * seed.phi3.conjugate()

    def formula(x):
        return flat + cross * (delta(x, theta) * p2 ** x * product).real

    return formula
