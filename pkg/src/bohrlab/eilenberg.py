"""Bounds for functions with f(0) = 0 and f(z1) f(z2) != 1 (Bieberbach-Eilenberg).

The class satisfies sum |a_k|^2 <= 1 and |f(z)| <= |z|/sqrt(1-|z|^2); the
majorant radius is 1/sqrt(2), and harmonic pairs built over the class obey an
l^p-combination bound with explicit radii at every p >= 1.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import ConvergenceFailure, DomainError, NonVanishingConstantTerm
from .radii import RadiusCertificate, _bisect_predicate, _check_r
from .majorant import CertifiedSum
from .series import CoefficientSeries, HarmonicPair, evaluate_polynomial

COEFF_CHECK_TOL = 1e-10
_MODULUS_GRID_ANGLES = 64
_MODULUS_GRID_RADII = (0.5, 0.8)


class BECoefficientCheck(NamedTuple):
    sum_sq: float
    ok: bool


def be_bound(r: float) -> float:
    """Majorant bound r / sqrt(1 - r^2) for the vanishing-at-0 classes."""
    r = _check_r(r)
    return r / math.sqrt(1.0 - r * r)


def be_radius() -> RadiusCertificate:
    """Radius where be_bound crosses 1, by bisection; equals 1/sqrt(2)."""
    radius = _bisect_predicate(lambda r: be_bound(r) > 1.0, 0.0, 0.999)
    return RadiusCertificate(radius=radius, method="bisection", residual=abs(be_bound(radius) - 1.0))


def be_coefficient_check(c: CoefficientSeries) -> BECoefficientCheck:
    """Check sum_{k>=1} |a_k|^2 <= 1 and the pointwise modulus bound.

    The square sum folds in the Parseval remainder 1 - sum_{k<=N} |a_k|^2 when
    the series carries the unit-ball certificate (for uncertified input only
    the truncated sum is checked).  The modulus bound |f(z)| <= |z|/sqrt(1-|z|^2)
    is sampled on circle grids at |z| in {0.5, 0.8} with truncation slack
    |z|^(N+1)/(1-|z|), and the returned flag requires both checks.
    """
    if abs(c.coeffs[0]) != 0.0:
        raise NonVanishingConstantTerm("the class requires a_0 = 0")
    mods2 = np.abs(c.coeffs) ** 2
    partial = float(mods2[1:].sum())
    tail = max(0.0, 1.0 - partial) if c.certified else 0.0
    sum_sq = partial + tail
    ok = sum_sq <= 1.0 + COEFF_CHECK_TOL

    for rho in _MODULUS_GRID_RADII:
        angles = 2.0 * np.pi * np.arange(_MODULUS_GRID_ANGLES) / _MODULUS_GRID_ANGLES
        points = rho * np.exp(1j * angles)
        slack = rho ** (c.order + 1) / (1.0 - rho)
        bound = rho / math.sqrt(1.0 - rho * rho)
        if np.abs(evaluate_polynomial(c, points)).max() > bound + slack + COEFF_CHECK_TOL:
            ok = False
    return BECoefficientCheck(sum_sq=sum_sq, ok=ok)


def be_harmonic_bound(p: float, r: float) -> float:
    """l^p-combination bound max(2^(1/p - 1/2), 1) sqrt(2) r / sqrt(1 - r^2)."""
    p, r = float(p), _check_r(r)
    if p < 1.0:
        raise DomainError(f"exponent p must be >= 1, got {p}")
    factor = max(2.0 ** (1.0 / p - 0.5), 1.0)
    return factor * math.sqrt(2.0) * r / math.sqrt(1.0 - r * r)


def be_harmonic_radius(p: float) -> RadiusCertificate:
    """Radius where the l^p-combination bound crosses 1.

    Bisection cross-checked against the closed form
    1 / sqrt(1 + 2 max(2^(2/p - 1), 1)); the two must agree to 1e-12.
    """
    p = float(p)
    if p < 1.0:
        raise DomainError(f"exponent p must be >= 1, got {p}")
    radius = _bisect_predicate(lambda r: be_harmonic_bound(p, r) > 1.0, 0.0, 0.999)
    closed = 1.0 / math.sqrt(1.0 + 2.0 * max(2.0 ** (2.0 / p - 1.0), 1.0))
    if abs(radius - closed) > 1e-12:
        raise ConvergenceFailure(
            f"bisection {radius!r} disagrees with closed form {closed!r} at p={p}"
        )
    return RadiusCertificate(
        radius=radius, method="bisection", residual=abs(be_harmonic_bound(p, radius) - 1.0)
    )


def be_lp_combination_sum(pair: HarmonicPair, p: float, r: float) -> CertifiedSum:
    """Certified enclosure of sum_{k>=1} (|a_k|^p + |b_k|^p)^(1/p) r^k.

    This is the l^p accumulator of the harmonic bound over the vanishing-at-0
    class (distinct from the harmonic powered sum, which never takes the 1/p
    root).  Per term (|a_k|^p + |b_k|^p)^(1/p) <= 2^(1/p), giving the tail
    2^(1/p) r^(N+1)/(1-r).
    """
    p, r = float(p), _check_r(r)
    if p < 1.0:
        raise DomainError(f"exponent p must be >= 1, got {p}")
    if abs(pair.analytic.coeffs[0]) != 0.0:
        raise NonVanishingConstantTerm("the class requires a_0 = 0")
    n = min(pair.analytic.order, pair.coanalytic.order)
    amods = np.abs(pair.analytic.coeffs[1 : n + 1])
    bmods = np.abs(pair.coanalytic.coeffs[1 : n + 1])
    terms = (amods**p + bmods**p) ** (1.0 / p)
    value = float(np.dot(terms, r ** np.arange(1, n + 1)))
    tail = 2.0 ** (1.0 / p) * r ** (n + 1) / (1.0 - r)
    return CertifiedSum(
        lower=value,
        upper=value + tail,
        truncated_value=value,
        tail_bound=tail,
        order_used=n,
    )
