"""Absolute-convergence domain ``|A z| + |B z^2| < 1`` of a three-term recurrence series."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from lameconv.errors import ParameterDomainError
from lameconv.recurrence import AlgebraicParameters, LimitPair, limits

# The criterion only needs the two limits.
DomainCriterion = LimitPair

SQRT2 = math.sqrt(2.0)


class CaseTag(str, Enum):
    DEGENERATE = "Degenerate"
    BOTH_POSITIVE = "BothPositive"
    BOTH_NEGATIVE = "BothNegative"
    MIXED_POS = "MixedPos"
    MIXED_NEG = "MixedNeg"
    EQUAL_POSITIVE = "EqualPositive"
    EQUAL_NEGATIVE = "EqualNegative"
    GENERAL = "General"


@dataclass(frozen=True)
class AlgebraicCase:
    tag: CaseTag
    radius: float


def is_in_domain(crit: DomainCriterion, z: complex) -> bool:
    r = abs(z)
    return abs(crit.A) * r + abs(crit.B) * r * r < 1.0


def radius(crit: DomainCriterion) -> float:
    """Positive root of ``|B| r^2 + |A| r = 1``, or ``inf`` when A = B = 0.

    Uses ``2 / (|A| + sqrt(A^2 + 4|B|))``, which equals the textbook root
    ``(-|A| + sqrt(A^2 + 4|B|)) / (2|B|)`` without the cancellation as B -> 0.
    The result is the smallest float at which ``is_in_domain`` turns false.
    """
    a, b = abs(crit.A), abs(crit.B)
    if a == 0.0 and b == 0.0:
        return math.inf
    r = 2.0 / (a + math.hypot(a, 2.0 * math.sqrt(b)))
    # step to the first float the strict criterion rejects (a few ulp at most)
    while a * r + (b * r) * r < 1.0:
        r = math.nextafter(r, math.inf)
    return r


def classify_algebraic(params: AlgebraicParameters) -> AlgebraicCase:
    """Match ``params`` to a row of the closed-form radius table about ``z = x - a``.

    Rows are keyed on the signs of ``a-b``, ``a-c`` and ``2a-b-c``. The ``b = c``
    rows are reported only when their printed expression is positive; every
    other ``b = c`` triple falls back to the sign-pattern rows, which give the
    same value ``(sqrt(2) - 1)|a - b|``. Sign patterns the table does not list
    are tagged General and carry the numeric radius.
    """
    params.check()
    a, b, c = params.a, params.b, params.c
    p, r, s = a - b, a - c, 2 * a - b - c

    if b == c:
        if b > 0 and p > 0:
            return AlgebraicCase(CaseTag.EQUAL_POSITIVE, (SQRT2 - 1.0) * p)
        if b < 0 and p < 0:
            return AlgebraicCase(CaseTag.EQUAL_NEGATIVE, (1.0 - SQRT2) * p)
    if p * r > 0:
        # (-|s| + sqrt(s^2 + 4pr)) / 2, rationalized
        root = 2 * p * r / (abs(s) + math.hypot(s, 2 * math.sqrt(p * r)))
        tag = CaseTag.BOTH_POSITIVE if p > 0 else CaseTag.BOTH_NEGATIVE
        return AlgebraicCase(tag, root)
    if p < 0 < r and s > 0:
        return AlgebraicCase(CaseTag.MIXED_POS, -p)
    if r < 0 < p and s < 0:
        return AlgebraicCase(CaseTag.MIXED_NEG, p)
    return AlgebraicCase(CaseTag.GENERAL, radius(limits(params)))


def weierstrass_bound(rho: float) -> float:
    """Largest ``sn^2(z, rho)`` inside the absolute-convergence domain, for real z."""
    if not 0.0 < rho < 1.0:
        raise ParameterDomainError(f"modulus rho must lie in (0, 1), got {rho}")
    return radius(LimitPair.weierstrass(rho))


def sample_boundary(rho_grid) -> list[tuple[float, float]]:
    return [(float(rho), weierstrass_bound(rho)) for rho in rho_grid]
