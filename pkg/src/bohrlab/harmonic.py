"""Doubled-envelope bounds for harmonic mappings with dominated dilatation.

For f = h + conj(g) with |g'| <= |h'| the powered coefficient sum
|a_0|^p + sum (|a_k|^p + |b_k|^p) r^k obeys the envelope bound with the middle
term doubled; the p = 1 case has a closed form and radius 1/5.

Caveat on the validity flag: `harmonic_threshold` evaluates the nominal
formula (2^(1/(p-2)) + 1)^(p/2-1), but the derivation of the bound only
supports r <= (2^(1/(2-p)) + 1)^(p/2-1) (exponent 1/(2-p)), which is smaller:
1/sqrt(3) vs sqrt(2/3) at p = 1.  Sampled dominated pairs genuinely exceed
the doubled-envelope bound in the upper part of the nominal range (see the
regression test), so treat `valid` as the nominal claim, not a guarantee.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .radii import RadiusCertificate, _bisect_predicate, _check_r, maximize_envelope
from .series import HarmonicPair

DOMINATION_TOL = 1e-10


class HarmonicBound(NamedTuple):
    value: float
    valid: bool


class DominationCheck(NamedTuple):
    lhs: float
    rhs: float
    ok: bool


def harmonic_envelope_value(a: float, p: float, r: float) -> float:
    """Doubled envelope a^p + 2 r (1-a^2)^p / (1 - r a^p)."""
    a, p, r = float(a), float(p), _check_r(r)
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"argument a must lie in [0, 1], got {a}")
    if not 0.0 < p <= 2.0:
        raise DomainError(f"exponent p must lie in (0, 2], got {p}")
    return a**p + 2.0 * r * (1.0 - a * a) ** p / (1.0 - r * a**p)


def harmonic_threshold(p: float) -> float:
    """Validity radius (2^(1/(p-2)) + 1)^(p/2-1) of the doubled-envelope bound."""
    p = float(p)
    if not 0.0 < p < 2.0:
        raise DomainError(f"exponent p must lie in (0, 2), got {p}")
    return (2.0 ** (1.0 / (p - 2.0)) + 1.0) ** (p / 2.0 - 1.0)


def harmonic_bound(p: float, r: float) -> HarmonicBound:
    """Sharp bound for the harmonic powered sum, normalized to sup|h| = 1.

    p <= 2: the doubled-envelope maximum, flagged valid while r stays below
    the threshold (at p = 2 the threshold degenerates to 1, so always valid).
    p > 2: max(1, 2r), valid for all r.
    """
    p, r = float(p), _check_r(r)
    if p <= 0.0:
        raise DomainError(f"exponent p must be positive, got {p}")
    if p > 2.0:
        return HarmonicBound(max(1.0, 2.0 * r), True)
    value = maximize_envelope(p, r, doubled=True).value
    valid = True if p == 2.0 else r <= harmonic_threshold(p)
    return HarmonicBound(value, valid)


_P1_LO = 0.2
_P1_HI = math.sqrt(2.0 / 3.0)


def harmonic_closed_form_p1(r: float) -> float:
    """Closed form (5 - 2 sqrt(6) sqrt(1-r^2)) / r on [1/5, sqrt(2/3)]."""
    r = float(r)
    if not _P1_LO - 1e-12 <= r <= _P1_HI + 1e-12:
        raise DomainError(f"r must lie in [1/5, sqrt(2/3)], got {r}")
    r = min(max(r, _P1_LO), _P1_HI)
    return (5.0 - 2.0 * math.sqrt(6.0) * math.sqrt(1.0 - r * r)) / r


def doubled_argmax_p1(r: float) -> float:
    """Maximizing a of the doubled p = 1 envelope: (3 - sqrt(6) sqrt(1-r^2)) / (3r)."""
    r = float(r)
    if not _P1_LO - 1e-12 <= r <= _P1_HI + 1e-12:
        raise DomainError(f"r must lie in [1/5, sqrt(2/3)], got {r}")
    r = min(max(r, _P1_LO), _P1_HI)
    return (3.0 - math.sqrt(6.0) * math.sqrt(1.0 - r * r)) / (3.0 * r)


def harmonic_radius_p1() -> RadiusCertificate:
    """Radius where the doubled p = 1 envelope maximum first exceeds 1.

    Near the radius the maximum exceeds 1 only by O((r - 1/5)^2), invisible to
    a float comparison, so the bisection predicate uses the exact factorization
    F2(a) - 1 = (1-a)(r(2+3a) - 1)/(1-ra): the maximum exceeds 1 for some
    a < 1 iff 5r - 1 > 0.
    """
    radius = _bisect_predicate(lambda r: 5.0 * r - 1.0 > 0.0, 0.0, 0.9)
    residual = abs(maximize_envelope(1.0, radius, doubled=True).value - 1.0)
    return RadiusCertificate(radius=radius, method="bisection", residual=residual)


def dilatation_domination_check(pair: HarmonicPair, r: float) -> DominationCheck:
    """Check sum |b_k|^2 r^k <= sum |a_k|^2 r^k with the tail folded on the left.

    The left side adds an upper tail estimate (conservative direction), the
    right side gets none.
    """
    r = _check_r(r)
    n = min(pair.analytic.order, pair.coanalytic.order)
    powers = r ** np.arange(n + 1)
    amods2 = np.abs(pair.analytic.coeffs[: n + 1]) ** 2
    bmods2 = np.abs(pair.coanalytic.coeffs[: n + 1]) ** 2
    rhs = float(np.dot(amods2[1:], powers[1:]))
    lhs_partial = float(np.dot(bmods2[1:], powers[1:]))
    # |b_k| <= 1 per term, and sum |b_k|^2 <= sum |a_k|^2 <= 1 caps the rest
    crude = r ** (n + 1) / (1.0 - r)
    remainder = max(0.0, 1.0 - float(bmods2.sum())) * r ** (n + 1)
    lhs = lhs_partial + min(crude, remainder)
    return DominationCheck(lhs=lhs, rhs=rhs, ok=lhs <= rhs + DOMINATION_TOL)
