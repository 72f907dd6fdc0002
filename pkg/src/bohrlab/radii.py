"""Scalar envelope maximization and the associated Bohr-type radii.

The central object is the envelope F(a; p, r) = a^p + w r (1-a^2)^p / (1 - r a^p)
with weight w = 1 (analytic case) or w = 2 (harmonic case).  Its maximum over
a in [0, 1] equals the powered majorant supremum below the exact-branch
threshold 2^(p/2-1); the radius where that maximum first exceeds 1 is the
powered Bohr radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .errors import ConvergenceFailure, DomainError, NoRootFound

ENVELOPE_GRID = 2048
BRACKET_TOL = 1e-12
CROSSCHECK_TOL = 1e-9
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class EnvelopeResult:
    """Maximized envelope value with argmax and optimizer diagnostics."""

    value: float
    argmax: float
    iterations: int
    bracket_width: float


@dataclass(frozen=True)
class RadiusCertificate:
    """A computed radius, the method that produced it and its residual."""

    radius: float
    method: str
    residual: float


def _check_p(p: float, *, allow_two: bool = True) -> float:
    p = float(p)
    hi_ok = p <= 2.0 if allow_two else p < 2.0
    if not (p > 0.0 and hi_ok):
        rng = "(0, 2]" if allow_two else "(0, 2)"
        raise DomainError(f"exponent p must lie in {rng}, got {p}")
    return p


def _check_r(r: float) -> float:
    r = float(r)
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius r must lie in [0, 1), got {r}")
    return r


def exact_branch_threshold(p: float) -> float:
    """Radius 2^(p/2 - 1) separating the exact branch from the strict bound."""
    return 2.0 ** (_check_p(p) / 2.0 - 1.0)


def _envelope(a, p: float, r: float, weight: float):
    a = np.asarray(a, dtype=float)
    return a**p + weight * r * (1.0 - a * a) ** p / (1.0 - r * a**p)


def envelope_value(a: float, p: float, r: float) -> float:
    """F(a; p, r) = a^p + r (1-a^2)^p / (1 - r a^p); exactly 1 at a = 1."""
    a = float(a)
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"argument a must lie in [0, 1], got {a}")
    return float(_envelope(a, _check_p(p), _check_r(r), 1.0))


def _golden_max(f: Callable[[float], float], lo: float, hi: float) -> tuple[float, int, float]:
    """Golden-section refinement of a bracketed maximum; returns (x, iters, width)."""
    x1 = hi - _INV_PHI * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    iters = 0
    while hi - lo > BRACKET_TOL and iters < 200:
        if f1 >= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_PHI * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            f2 = f(x2)
        iters += 1
    return 0.5 * (lo + hi), iters, hi - lo


def _parabolic_polish(f: Callable[[float], float], x: float, h: float, lo: float, hi: float) -> float:
    """One parabola fit through (x-h, x, x+h); falls back to x off-bracket."""
    if x - h <= lo or x + h >= hi:
        return x
    fm, f0, fp = f(x - h), f(x), f(x + h)
    denom = fp - 2.0 * f0 + fm
    if denom == 0.0:
        return x
    v = x - h * (fp - fm) / (2.0 * denom)
    return v if lo < v < hi else x


def _candidate_grid(p: float, r: float) -> np.ndarray:
    grid = [np.linspace(0.0, 1.0, ENVELOPE_GRID)]
    # geometric cluster near a = 1, where the radius-defining behaviour lives
    grid.append(1.0 - 10.0 ** -(np.arange(1, 25) / 2.0))
    if p < 1.0 and r > 0.0:
        # for p < 1 the envelope spikes above 1 in a boundary layer of width
        # eps ~ (r 2^p / (1-r))^(1/(1-p)); seed the layer so the grid cannot
        # miss a spike narrower than the uniform spacing
        logt = math.log(r * 2.0**p / (1.0 - r)) / (1.0 - p)
        for shift in (-2.0, -1.0, 0.0, 1.0):
            t = math.exp(min(logt + shift, 50.0))
            eps = t / (1.0 + t)
            if 0.0 < eps < 1.0:
                grid.append(np.array([1.0 - eps]))
    pts = np.unique(np.concatenate(grid))
    return pts[(pts >= 0.0) & (pts <= 1.0)]


def maximize_envelope(p: float, r: float, doubled: bool = False) -> EnvelopeResult:
    """Global maximum of the envelope over a in [0, 1] to bracket width 1e-12.

    Dense grid scan isolates the best bracket (so multimodality cannot lose the
    global maximum), golden-section refines it, and a final parabola fit
    sharpens the argmax.  On plateaus the largest argmax is reported, matching
    the a -> 1 extremal limit.
    """
    p, r = _check_p(p), _check_r(r)
    weight = 2.0 if doubled else 1.0
    grid = _candidate_grid(p, r)
    vals = _envelope(grid, p, r, weight)
    f = lambda a: float(_envelope(a, p, r, weight))

    # refine the global grid argmax and the best interior local maximum: near
    # the radius an interior maximum can sit between grid points slightly
    # below the exact boundary value F(1) = 1 and would otherwise be missed
    refine = {len(vals) - 1 - int(np.argmax(vals[::-1]))}  # ties -> largest a
    interior = np.flatnonzero((vals[1:-1] >= vals[:-2]) & (vals[1:-1] >= vals[2:])) + 1
    if interior.size:
        refine.add(int(interior[np.lexsort((interior, vals[interior]))[-1]]))

    results = [(f(1.0), 1.0, 0.0)]  # right endpoint is exactly 1
    total_iters = 0
    for idx in sorted(refine):
        lo = grid[idx - 1] if idx > 0 else grid[0]
        hi = grid[idx + 1] if idx < len(grid) - 1 else grid[-1]
        mid, iters, width = _golden_max(f, lo, hi)
        total_iters += iters
        polished = _parabolic_polish(f, mid, 1e-5, lo, hi)
        for x in (float(grid[idx]), mid, polished):
            results.append((f(x), x, width))
    value, argmax, width = max(results, key=lambda t: (t[0], t[1]))
    return EnvelopeResult(value=value, argmax=argmax, iterations=total_iters, bracket_width=width)


class MpValue(NamedTuple):
    value: float
    exact: bool


def _upper_branch(p: float, r: float) -> float:
    return (1.0 - r ** (2.0 / (2.0 - p))) ** (p / 2.0 - 1.0)


def mp_theorem1(p: float, r: float) -> MpValue:
    """Powered majorant supremum: exact below the threshold, strict bound above.

    For r <= 2^(p/2-1) the supremum equals the envelope maximum (exact=True);
    beyond it only the non-attained bound (1 - r^(2/(2-p)))^(p/2-1) is returned
    (exact=False).  p = 2 is the degenerate case with value identically 1.
    """
    p, r = _check_p(p), _check_r(r)
    if p == 2.0:
        return MpValue(1.0, True)
    if r <= exact_branch_threshold(p):
        return MpValue(maximize_envelope(p, r).value, True)
    return MpValue(_upper_branch(p, r), False)


def _rp_quotient(a, p: float):
    a = np.asarray(a, dtype=float)
    ap = a**p
    return (1.0 - ap) / (ap * (1.0 - ap) + (1.0 - a * a) ** p)


def _rp_limit_at_one(p: float) -> float:
    # quotient asymptotics at a = 1-eps: numerator ~ p eps, denominator
    # ~ p eps + (2 eps)^p, so the limit is 0 / (1/3) / 1 for p <,=,> 1
    if p < 1.0:
        return 0.0
    if p == 1.0:
        return 1.0 / 3.0
    return 1.0


def rp_via_infimum(p: float) -> float:
    """Powered Bohr radius as inf over a in [0,1) of the defining quotient.

    The quotient is minimized on a grid capped at a = 1 - 1e-8 with
    golden-section refinement; the analytic a -> 1 limit is folded in and the
    smaller of the two is reported (at p = 1 the limit 1/3 is the infimum and
    the capped grid alone would miss it by ~2e-9).
    """
    p = _check_p(p)
    if p == 2.0:
        return 1.0  # quotient is identically 1
    cap = 1.0 - 1e-8
    pts = np.concatenate(
        [np.linspace(0.0, cap, 4096), 1.0 - 10.0 ** -(np.arange(2, 17) / 2.0)]
    )
    pts = np.unique(pts[(pts >= 0.0) & (pts <= cap)])
    vals = _rp_quotient(pts, p)
    best = int(np.argmin(vals))
    f = lambda a: float(_rp_quotient(a, p))
    lo = pts[best - 1] if best > 0 else pts[0]
    hi = pts[best + 1] if best < len(pts) - 1 else pts[-1]
    mid, _, _ = _golden_max(lambda a: -f(a), lo, hi)
    found = min(float(vals[best]), f(mid))
    return min(found, _rp_limit_at_one(p))


def _bisect_predicate(pred: Callable[[float], bool], lo: float, hi: float, iters: int = 80) -> float:
    """Bisection on a monotone boolean predicate with pred(lo)=False, pred(hi)=True."""
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def rp_via_envelope_bisection(p: float) -> float:
    """Powered Bohr radius located by bisection on 'envelope maximum exceeds 1'.

    For p > 1 the maximum grows linearly in r past the radius, so the float
    comparison value > 1 resolves the boundary far below 1e-9.  At p = 1 the
    growth is only quadratic (the argmax collides with a = 1), so the
    exceedance test uses the exact factorization
    F(a) - 1 = (1-a) (r (1+2a) - 1) / (1 - r a): some a < 1 exceeds iff 3r > 1.
    For p < 1 every positive r exceeds near a = 1 (-eps + r 2^p eps^p > 0 for
    small eps), leaving radius 0.
    """
    p = _check_p(p)
    if p == 2.0:
        return 1.0
    if p < 1.0:
        return 0.0
    if p == 1.0:
        pred = lambda r: 3.0 * r - 1.0 > 0.0
    else:
        pred = lambda r: maximize_envelope(p, r).value > 1.0
    return _bisect_predicate(pred, 0.0, 1.0 - 1e-9)


def powered_radius_rp(p: float) -> RadiusCertificate:
    """Powered Bohr radius with the two independent routes cross-checked.

    The infimum of the defining quotient and the envelope bisection must agree
    within 1e-9; their disagreement is recorded as the residual.
    """
    p = _check_p(p)
    if p == 2.0:
        return RadiusCertificate(radius=1.0, method="closed_form", residual=0.0)
    r_inf = rp_via_infimum(p)
    r_bis = rp_via_envelope_bisection(p)
    residual = abs(r_inf - r_bis)
    if residual > CROSSCHECK_TOL:
        raise ConvergenceFailure(
            f"radius routes disagree at p={p}: infimum {r_inf!r} vs bisection {r_bis!r}"
        )
    method = "closed_form" if p < 1.0 else "minimization"
    return RadiusCertificate(radius=r_inf, method=method, residual=residual)


def lower_bound_mp(p: float) -> float:
    """Closed-form lower bound p / (2^(1/(2-p)) + p^(1/(2-p)))^(2-p)."""
    p = _check_p(p, allow_two=False)
    e = 1.0 / (2.0 - p)
    return p / (2.0**e + p**e) ** (2.0 - p)


_BOMBIERI_LO = 1.0 / 3.0
_BOMBIERI_HI = 1.0 / math.sqrt(2.0)


def _check_bombieri_range(r: float) -> float:
    r = float(r)
    if not _BOMBIERI_LO - 1e-12 <= r <= _BOMBIERI_HI + 1e-12:
        raise DomainError(f"r must lie in [1/3, 1/sqrt(2)], got {r}")
    return min(max(r, _BOMBIERI_LO), _BOMBIERI_HI)


def bombieri_closed_form(r: float) -> float:
    """Exact majorant supremum (3 - sqrt(8 (1-r^2)))/r on [1/3, 1/sqrt(2)]."""
    r = _check_bombieri_range(r)
    return (3.0 - math.sqrt(8.0 * (1.0 - r * r))) / r


def bombieri_argmax(r: float) -> float:
    """Maximizing a of the p = 1 envelope: (1 - sqrt((1-r^2)/2)) / r."""
    r = _check_bombieri_range(r)
    return (1.0 - math.sqrt(0.5 * (1.0 - r * r))) / r


def paulsen_majorant(r: float) -> tuple[float, float]:
    """Piecewise majorant bound M(r) and its cap m(r) = min(M(r), 1/sqrt(1-r^2))."""
    r = _check_r(r)
    if r <= 1.0 / 3.0:
        big_m = 1.0
    else:
        big_m = (4.0 * r * r + (1.0 - r) ** 2) / (4.0 * r * (1.0 - r))
    return big_m, min(big_m, 1.0 / math.sqrt(1.0 - r * r))


def psymmetric_root_equation(r, p: int, m: int):
    """Left side of -6 r^(p-m) + r^(2(p-m)) + 8 r^(2p) + 1 = 0."""
    r = np.asarray(r, dtype=float)
    return -6.0 * r ** (p - m) + r ** (2 * (p - m)) + 8.0 * r ** (2 * p) + 1.0


def _check_pm(p, m) -> tuple[int, int]:
    if int(p) != p or int(m) != m:
        raise DomainError("p and m must be integers")
    p, m = int(p), int(m)
    if p < 1 or not 0 <= m <= p:
        raise DomainError(f"need p >= 1 and 0 <= m <= p, got p={p}, m={m}")
    return p, m


def _bisect_sign_change(f: Callable[[float], float], lo: float, hi: float) -> float:
    flo = f(lo)
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (flo < 0.0) == (fm < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
        if hi - lo < 1e-15:
            break
    return 0.5 * (lo + hi)


def _polish_double_root(f: Callable[[float], float], x: float, h: float) -> float:
    # derivative-free quadratic fit: the vertex of the parabola through three
    # samples is the stationary point, which is the double root.  h stays at
    # grid scale: shrinking it would push the curvature term f(x+h)-2f(x)+f(x-h)
    # below evaluation noise and let the vertex wander.
    for _ in range(3):
        fm, f0, fp = f(x - h), f(x), f(x + h)
        denom = fp - 2.0 * f0 + fm
        if denom == 0.0:
            break
        step = -h * (fp - fm) / (2.0 * denom)
        x = min(max(x + step, 1e-12), 1.0 - 1e-12)
        if abs(step) < 1e-11:
            break
    # the fit carries an O(h^2) bias from the cubic term; finish by bisecting
    # the sign of the symmetric difference, which crosses zero simply at the
    # stationary point and is noise-safe at this step size
    hs = 1e-5
    s = lambda y: f(y + hs) - f(y - hs)
    lo, hi = x - 1e-6, x + 1e-6
    if s(lo) < 0.0 < s(hi):
        for _ in range(40):
            mid = 0.5 * (lo + hi)
            if s(mid) < 0.0:
                lo = mid
            else:
                hi = mid
        x = 0.5 * (lo + hi)
    return x


def psymmetric_radius(p: int, m: int) -> RadiusCertificate:
    """Maximal root in (0, 1) of the p-symmetric radius equation.

    Scans a 10^4 grid for sign changes and bisects each bracket; double roots
    (the equation can be a perfect square, e.g. m = 0) produce no sign change
    and are recovered by polishing local minima of |equation| with a quadratic
    fit, accepting a candidate only if the polished residual is tiny.
    """
    p, m = _check_pm(p, m)
    f = lambda r: float(psymmetric_root_equation(r, p, m))
    grid = np.linspace(0.0, 1.0, 10001)[1:-1]
    vals = psymmetric_root_equation(grid, p, m)

    roots = []
    method = "bisection"
    sign = np.sign(vals)
    for i in np.flatnonzero(sign[:-1] * sign[1:] < 0):
        roots.append(_bisect_sign_change(f, float(grid[i]), float(grid[i + 1])))
    absvals = np.abs(vals)
    interior_min = (absvals[1:-1] <= absvals[:-2]) & (absvals[1:-1] <= absvals[2:])
    for i in np.flatnonzero(interior_min) + 1:
        if absvals[i] < 1e-4:
            x = _polish_double_root(f, float(grid[i]), float(grid[1] - grid[0]))
            if abs(f(x)) <= 1e-10 and not any(abs(x - r0) < 1e-9 for r0 in roots):
                roots.append(x)
                method = "root_scan"
    if not roots:
        raise NoRootFound(f"no root of the radius equation in (0, 1) for p={p}, m={m}")
    radius = max(roots)
    return RadiusCertificate(radius=radius, method=method, residual=abs(f(radius)))


def psymmetric_extremal_a(p: int, m: int) -> float:
    """Extremal parameter (1 - sqrt(1 - r^(2p))/sqrt(2)) / r^p at the radius.

    Clamped to 1 when it lands within 1e-8 (degenerate boundary extremal,
    which happens exactly for m = 0; the window covers the double-root radius
    precision of ~1e-10 amplified by da/dr).
    """
    p, m = _check_pm(p, m)
    r = psymmetric_radius(p, m).radius
    a = (1.0 - math.sqrt(1.0 - r ** (2 * p)) / math.sqrt(2.0)) / r**p
    if abs(a - 1.0) < 1e-8:
        return 1.0
    return a


def blaschke_sharpness_radius(d: int, p: float) -> float:
    """Radius (d/(d+1))^(1 - p/2) where a degree-d Blaschke product is critical."""
    if int(d) != d or d < 1:
        raise DomainError(f"degree d must be a positive integer, got {d}")
    p = _check_p(p, allow_two=False)
    return (d / (d + 1.0)) ** (1.0 - p / 2.0)


def bb_lower_bound(p: float, r: float, eps: float, big_c: float) -> float:
    """Logarithmically-corrected lower bound beyond the exact branch.

    Evaluates (1 - r^(2/(2-p)))^(p/2-1) minus the user-supplied correction
    C (1 - r^(2/(2-p)))^((p-1)/2) log(1/(1 - r^(1/(2-p))))^(3/2+eps).  The
    constant C is not constructive, so this is exploration-only and never
    enters pass/fail acceptance.
    """
    p, r = float(p), _check_r(r)
    if not 1.0 < p < 2.0:
        raise DomainError(f"exponent p must lie in (1, 2), got {p}")
    if r <= exact_branch_threshold(p):
        raise DomainError(f"r must exceed the exact-branch threshold {exact_branch_threshold(p)}")
    eps, big_c = float(eps), float(big_c)
    if eps <= 0.0 or big_c < 0.0:
        raise DomainError("need eps > 0 and C >= 0")
    a = 1.0 - r ** (2.0 / (2.0 - p))
    log_term = math.log(1.0 / (1.0 - r ** (1.0 / (2.0 - p))))
    return a ** (p / 2.0 - 1.0) - big_c * a ** ((p - 1.0) / 2.0) * log_term ** (1.5 + eps)


def branch_consistency_gap(p: float) -> float:
    """|envelope maximum - strict bound| at the threshold radius (diagnostic)."""
    p = _check_p(p, allow_two=False)
    thr = exact_branch_threshold(p)
    return abs(maximize_envelope(p, thr).value - _upper_branch(p, thr))
