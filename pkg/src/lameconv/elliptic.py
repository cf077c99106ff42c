"""Jacobi amplitude/sn for a real modulus ``0 <= rho < 1``.

``sn`` and ``am`` use the descending Landen (AGM) scheme; ``incomplete_F`` is an
independent adaptive Gauss-Legendre quadrature kept for cross-checks.
"""

from __future__ import annotations

import math

import numpy as np

from lameconv.errors import ParameterDomainError

_LANDEN_TOL = 1e-15
_QUAD_TOL = 1e-13
_GL_X, _GL_W = np.polynomial.legendre.leggauss(10)


def _check_modulus(rho: float) -> float:
    if not 0.0 <= rho < 1.0:
        raise ParameterDomainError(f"elliptic modulus must satisfy 0 <= rho < 1, got {rho}")
    return float(rho)


def _agm_ladder(rho: float):
    a, b, c = 1.0, math.sqrt((1.0 - rho) * (1.0 + rho)), rho
    ladder = [(a, c)]
    while abs(c) > _LANDEN_TOL:
        a, b, c = (a + b) / 2, math.sqrt(a * b), (a - b) / 2
        ladder.append((a, c))
    return ladder


def complete_K(rho: float) -> float:
    """Quarter period ``K(rho) = pi / (2 agm(1, sqrt(1 - rho^2)))``."""
    rho = _check_modulus(rho)
    return math.pi / (2.0 * _agm_ladder(rho)[-1][0])


def am(z: float, rho: float) -> float:
    """Jacobi amplitude, continuous in real ``z``."""
    rho = _check_modulus(rho)
    ladder = _agm_ladder(rho)
    n = len(ladder) - 1
    phi = (2.0 ** n) * ladder[n][0] * z
    for k in range(n, 0, -1):
        a_k, c_k = ladder[k]
        phi = (phi + math.asin(c_k / a_k * math.sin(phi))) / 2
    return phi


def sn(z: float, rho: float) -> float:
    return math.sin(am(z, rho))


def xi_of_z(z: float, rho: float) -> float:
    """Series variable ``xi = sn^2(z, rho)``."""
    s = sn(z, rho)
    return s * s


def _panel(f, lo: float, hi: float) -> float:
    mid, half = (lo + hi) / 2, (hi - lo) / 2
    return half * float(np.dot(_GL_W, f(mid + half * _GL_X)))


def _adaptive(f, lo, hi, whole, tol, depth):
    mid = (lo + hi) / 2
    left, right = _panel(f, lo, mid), _panel(f, mid, hi)
    if depth == 0 or abs(left + right - whole) <= tol:
        return left + right
    return (_adaptive(f, lo, mid, left, tol / 2, depth - 1)
            + _adaptive(f, mid, hi, right, tol / 2, depth - 1))


def incomplete_F(phi: float, rho: float, tol: float = _QUAD_TOL) -> float:
    """Legendre ``F(phi, rho) = int_0^phi dt / sqrt(1 - rho^2 sin^2 t)`` by adaptive bisection."""
    rho = _check_modulus(rho)
    k2 = rho * rho

    def integrand(t):
        s = np.sin(t)
        return 1.0 / np.sqrt(1.0 - k2 * s * s)

    if phi == 0.0:
        return 0.0
    return _adaptive(integrand, 0.0, phi, _panel(integrand, 0.0, phi), tol, 40)
