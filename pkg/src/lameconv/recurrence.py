"""Frobenius coefficients of the Lamé equation in algebraic form.

The equation

    y'' + 1/2 (1/(x-a) + 1/(x-b) + 1/(x-c)) y'
        + (-alpha (alpha+1) x + q) / (4 (x-a)(x-b)(x-c)) y = 0

is expanded about x = a as y = sum_n d_n z^(n+lam), z = x - a, lam in {0, 1/2}.
The coefficients obey the three-term recurrence

    d_{n+1} = A_n d_n + B_n d_{n-1},    d_1 = A_0 d_0,

with A_n -> A = -(2a-b-c)/((a-b)(a-c)) and B_n -> B = -1/((a-b)(a-c)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from lameconv.errors import DegenerateSingularityError, LameError, ParameterDomainError

INDICIAL_EXPONENTS = (0.0, 0.5)


@dataclass(frozen=True)
class AlgebraicParameters:
    """Singular points ``a, b, c`` and parameters ``alpha, q`` of the algebraic form."""

    a: float
    b: float
    c: float
    alpha: float = 0.0
    q: float = 0.0

    def check(self) -> None:
        if self.a == self.b or self.a == self.c:
            raise DegenerateSingularityError(
                f"expansion point a={self.a} coincides with b={self.b} or c={self.c}"
            )

    def swapped(self) -> AlgebraicParameters:
        """Same equation with ``b`` and ``c`` exchanged."""
        return AlgebraicParameters(self.a, self.c, self.b, self.alpha, self.q)


@dataclass(frozen=True)
class WeierstrassParameters:
    """Modulus ``rho``, degree ``alpha`` and spectral parameter ``h`` of the Weierstrass form."""

    rho: float
    alpha: float = 0.0
    h: float = 0.0

    def __post_init__(self):
        if not 0.0 < self.rho < 1.0:
            raise ParameterDomainError(f"modulus rho must lie in (0, 1), got {self.rho}")


@dataclass(frozen=True)
class LimitPair:
    """Limits ``A = lim A_n`` and ``B = lim B_n`` of the recurrence coefficients."""

    A: float
    B: float

    @classmethod
    def weierstrass(cls, rho: float) -> LimitPair:
        return cls(1.0 + rho * rho, -rho * rho)


@dataclass(frozen=True)
class CoefficientSequence:
    """Coefficients ``d[0..N]`` of a series with indicial exponent ``lam``."""

    lam: float
    d: np.ndarray

    @property
    def N(self) -> int:
        return len(self.d) - 1


def check_exponent(lam: float) -> float:
    if lam not in INDICIAL_EXPONENTS:
        raise ParameterDomainError(f"indicial exponent must be 0 or 1/2, got {lam}")
    return float(lam)


def _separation_product(params: AlgebraicParameters) -> float:
    params.check()
    prod = (params.a - params.b) * (params.a - params.c)
    if prod == 0.0 or not math.isfinite(prod):
        raise ParameterDomainError(
            f"(a-b)(a-c) = {prod} is not representable; rescale the singular points"
        )
    return prod


def limits(params: AlgebraicParameters) -> LimitPair:
    prod = _separation_product(params)
    a, b, c = params.a, params.b, params.c
    return LimitPair(-(2 * a - b - c) / prod, -1.0 / prod)


def weierstrass_to_algebraic(wp: WeierstrassParameters) -> AlgebraicParameters:
    """Map ``xi = sn^2(z, rho)`` onto the algebraic form: a=0, b=1, c=rho^-2, q=h rho^-2."""
    if not 0.0 < wp.rho < 1.0:
        raise ParameterDomainError(f"modulus rho must lie in (0, 1), got {wp.rho}")
    inv = 1.0 / (wp.rho * wp.rho)
    return AlgebraicParameters(0.0, 1.0, inv, wp.alpha, wp.h * inv)


def _coefficient_arrays(params: AlgebraicParameters, lam: float, n):
    # Works for scalar or ndarray n. The accessory term enters A_n as K/4 with
    # K = alpha(alpha+1) a - q; this is the form that satisfies the ODE term by term.
    prod = _separation_product(params)
    a, b, c, alpha, q = params.a, params.b, params.c, params.alpha, params.q
    s = 2 * a - b - c
    k = alpha * (alpha + 1) * a - q
    nl = n + lam
    den = (nl + 1.0) * (nl + 0.5)
    a_n = -(s * nl * nl - 0.25 * k) / (prod * den)
    # (n+lam)^2 - 3/2 (n+lam) - (alpha-1)(alpha+2)/4, factored to avoid cancellation
    b_n = -((nl - 1.0) * (nl - 0.5) - 0.25 * alpha * (alpha + 1)) / (prod * den)
    return a_n, b_n


def coefficients_at(params: AlgebraicParameters, lam: float, n: int) -> tuple[float, float]:
    """Return ``(A_n, B_n)``.

    ``B_0`` is returned for completeness; it multiplies ``d_{-1} = 0`` and never
    affects a sequence.
    """
    lam = check_exponent(lam)
    if n < 0:
        raise ParameterDomainError(f"index must be nonnegative, got {n}")
    a_n, b_n = _coefficient_arrays(params, lam, float(n))
    return float(a_n), float(b_n)


def normalized_coefficients(params: AlgebraicParameters, lam: float, n: int) -> tuple[float, float]:
    """Return ``(A_n / A, B_n / B)``, both tending to 1 as n grows.

    Raises LameError when ``2a = b + c`` since then ``A = 0``.
    """
    a_n, b_n = coefficients_at(params, lam, n)
    lim = limits(params)
    if lim.A == 0.0:
        raise LameError("A vanishes for 2a = b + c; A_n / A is undefined")
    return a_n / lim.A, b_n / lim.B


def generate_sequence(params: AlgebraicParameters, lam: float, N: int) -> CoefficientSequence:
    lam = check_exponent(lam)
    if N < 1:
        raise ParameterDomainError(f"order N must be >= 1, got {N}")
    a_n, b_n = _coefficient_arrays(params, lam, np.arange(N, dtype=np.float64))
    a_n, b_n = a_n.tolist(), b_n.tolist()
    d = [1.0, a_n[0]]
    for n in range(1, N):
        d.append(a_n[n] * d[n] + b_n[n] * d[n - 1])
    return CoefficientSequence(lam, np.array(d))


def asymptotic_sequence(limits: LimitPair, N: int) -> CoefficientSequence:
    """Constant-coefficient recurrence seeded with ``d_0 = 1, d_1 = A``."""
    if N < 1:
        raise ParameterDomainError(f"order N must be >= 1, got {N}")
    A, B = float(limits.A), float(limits.B)
    d = [1.0, A]
    for n in range(1, N):
        d.append(A * d[n] + B * d[n - 1])
    return CoefficientSequence(0.0, np.array(d))


def partial_sum(seq: CoefficientSequence, z: float) -> float:
    """``sum_{n<=N} d_n z^(n+lam)``, accumulated in ascending n."""
    if seq.lam == 0.5 and z < 0:
        raise ParameterDomainError(f"z^(1/2) requires z >= 0, got z={z}")
    total = 0.0
    power = 1.0
    for dn in seq.d.tolist():
        total += dn * power
        power *= z
    if seq.lam:
        total *= math.sqrt(z)
    return total
