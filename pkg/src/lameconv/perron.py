"""Characteristic-root analysis of ``d_{n+1} = A_n d_n + B_n d_{n-1}``.

The Poincaré-Perron radius is read off the dominant root of ``r^2 - A r - B = 0``.
The corrected radius comes from the same polynomial with absolute-valued
coefficients, ``t^2 = |A| t + |B|``, and coincides with the domain
``|A z| + |B z^2| < 1``.

Note on the sign convention: with the recurrence written as
``u(n+1) + a1 u(n) + a2 u(n-1) = 0`` (a1 = -A, a2 = -B), taking
``t^2 + |a1| t + |a2| = 0`` literally has only roots of nonpositive real part
and does not give a radius. The form ``t^2 = |A| t + |B|`` is the one that
bounds ``sum |d_n| |xi|^n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from lameconv.domain import radius
from lameconv.errors import (
    ComplexRootsError,
    EqualModuliError,
    ParameterDomainError,
    ZeroCoefficientError,
)
from lameconv.recurrence import CoefficientSequence, LimitPair


@dataclass(frozen=True)
class CharacteristicRoots:
    """Roots of ``r^2 - A r - B`` with ``|r1| <= |r2|``."""

    r1: float
    r2: float

    @property
    def equal_moduli(self) -> bool:
        return abs(self.r1) == abs(self.r2)

    @property
    def double_root(self) -> bool:
        return self.r1 == self.r2


class Verdict(str, Enum):
    ABSOLUTELY_CONVERGENT = "AbsolutelyConvergent"
    CONDITIONAL_REGION = "ConditionalRegion"
    DIVERGENT = "Divergent"


@dataclass(frozen=True)
class ConvergenceVerdict:
    tag: Verdict
    r_star: float
    r_pp: float


def characteristic_roots(limits: LimitPair) -> CharacteristicRoots:
    A, B = float(limits.A), float(limits.B)
    # exact discriminant of the float inputs, rounded once
    exact = Fraction(A) ** 2 + 4 * Fraction(B)
    if exact < 0:
        raise ComplexRootsError(
            f"A^2 + 4B = {float(exact)} < 0: complex conjugate roots of equal modulus"
        )
    sq = math.sqrt(float(exact))
    if B == 0.0:
        # A^2 may underflow for subnormal A
        lo, hi = 0.0, A
    elif A == 0.0:
        lo, hi = -sq / 2, sq / 2
    else:
        # avoid cancellation in the smaller root; r1 r2 = -B
        big = (A + math.copysign(sq, A)) / 2
        lo, hi = -B / big, big
    if abs(lo) > abs(hi):
        lo, hi = hi, lo
    return CharacteristicRoots(lo, hi)


def pp_radius(limits: LimitPair) -> float:
    """``1 / max|r_i|``; raises EqualModuliError for distinct roots of equal modulus."""
    roots = characteristic_roots(limits)
    if roots.equal_moduli and not roots.double_root:
        raise EqualModuliError(
            f"roots {roots.r1} and {roots.r2} share a modulus; the ratio limit does not exist"
        )
    dominant = abs(roots.r2)
    return math.inf if dominant == 0.0 else 1.0 / dominant


def corrected_radius(limits: LimitPair) -> float:
    a, b = abs(limits.A), abs(limits.B)
    t_star = (a + math.hypot(a, 2.0 * math.sqrt(b))) / 2
    return math.inf if t_star == 0.0 else 1.0 / t_star


def ratio_limit_estimate(seq: CoefficientSequence, window: int) -> float:
    """Mean of ``|d_k / d_{k-1}|`` over the last ``window`` indices k."""
    if window < 2 or seq.N < window:
        raise ParameterDomainError(f"need N >= window >= 2, got N={seq.N}, window={window}")
    tail = np.abs(seq.d[seq.N - window:])
    if np.any(tail == 0.0):
        raise ZeroCoefficientError("vanishing coefficient in the trailing window")
    return float(np.mean(tail[1:] / tail[:-1]))


def classify_point(limits: LimitPair, xi: float) -> ConvergenceVerdict:
    if xi < 0:
        raise ParameterDomainError(f"xi must be nonnegative, got {xi}")
    r_star = radius(limits)
    r_pp = pp_radius(limits)
    if xi < r_star:
        tag = Verdict.ABSOLUTELY_CONVERGENT
    elif xi < r_pp:
        tag = Verdict.CONDITIONAL_REGION
    else:
        tag = Verdict.DIVERGENT
    return ConvergenceVerdict(tag, r_star, r_pp)
