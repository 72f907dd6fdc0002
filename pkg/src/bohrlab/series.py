"""Truncated Taylor series for the unit ball of bounded analytic functions.

Provides the closed-form coefficient families (disk automorphisms, p-symmetric
extremals, the z(a-z)/(1-az) family), Schur-parameter synthesis/analysis for
sampling the full unit ball, and the analytic/co-analytic pair construction
for harmonic mappings with dominated dilatation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NonSchurInput, ZeroConstantTerm

# Schur parameters within this distance of the unit circle are treated as
# unimodular: the synthesis terminates there (finite Blaschke product) and
# later parameters are ignored.
UNIMODULAR_TOL = 1e-14


def _as_complex_array(values) -> np.ndarray:
    arr = np.array(values, dtype=complex)
    if arr.ndim != 1 or arr.size == 0:
        raise DomainError("coefficient data must be a non-empty 1-d sequence")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class CoefficientSeries:
    """Truncated Taylor coefficients a_0..a_N of a function on the unit disk.

    ``head_bound`` is a certified bound on |a_0| in [0, 1].  When ``certified``
    is set the series was produced by a constructor that guarantees unit-ball
    membership, hence |a_k| <= 1 - |a_0|^2 for k >= 1; tail estimates downstream
    rely on head_bound being the exact modulus |a_0| in that case, which every
    certified constructor here ensures.  Uncertified series carry
    head_bound = 1 and receive only the generic |a_k| <= 1 tail envelope.
    """

    coeffs: np.ndarray
    head_bound: float = 1.0
    certified: bool = False

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_complex_array(self.coeffs))
        hb = float(self.head_bound)
        if not 0.0 <= hb <= 1.0:
            raise DomainError(f"head_bound must lie in [0, 1], got {hb}")
        if self.certified and hb < abs(self.coeffs[0]) - 1e-12:
            raise DomainError("certified series requires head_bound >= |a_0|")
        object.__setattr__(self, "head_bound", hb)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True, eq=False)
class SchurFunction:
    """A unit-ball member encoded by Schur parameters gamma_0..gamma_D.

    Any sequence with all |gamma_j| <= 1 synthesizes a function of the closed
    unit ball; a unimodular parameter terminates the recursion and later
    entries are ignored (finite Blaschke product).
    """

    params: np.ndarray

    def __post_init__(self):
        arr = _as_complex_array(self.params)
        if np.abs(arr).max() > 1.0 + 1e-12:
            raise DomainError("Schur parameters must have modulus <= 1")
        object.__setattr__(self, "params", arr)

    @property
    def depth(self) -> int:
        return len(self.params) - 1


@dataclass(frozen=True, eq=False)
class HarmonicPair:
    """Coefficients of h and g for a harmonic mapping h + conj(g), b_0 = 0."""

    analytic: CoefficientSeries
    coanalytic: CoefficientSeries

    def __post_init__(self):
        if abs(self.coanalytic.coeffs[0]) != 0.0:
            raise DomainError("coanalytic part must vanish at the origin")


def truncated_mul(a: CoefficientSeries, b: CoefficientSeries, order: int) -> CoefficientSeries:
    """Cauchy product of two truncated series, cut at the given order.

    No membership certificate is claimed for the product (head_bound = 1).
    """
    if order < 0:
        raise DomainError("order must be non-negative")
    full = np.convolve(a.coeffs, b.coeffs)
    out = np.zeros(order + 1, dtype=complex)
    n = min(order + 1, len(full))
    out[:n] = full[:n]
    return CoefficientSeries(out)


def _divide_trunc(num: np.ndarray, den: np.ndarray, order: int) -> np.ndarray:
    """Coefficients of num/den through the given order (forward recurrence)."""
    d0 = den[0]
    out = np.zeros(order + 1, dtype=complex)
    dmax = len(den) - 1
    for n in range(order + 1):
        acc = num[n] if n < len(num) else 0.0
        t = min(n, dmax)
        if t:
            acc -= np.dot(den[1:t + 1], out[n - 1::-1][:t])
        out[n] = acc / d0
    return out


def truncated_reciprocal(a: CoefficientSeries, order: int) -> CoefficientSeries:
    """Multiplicative inverse of a truncated series through the given order."""
    if order < 0:
        raise DomainError("order must be non-negative")
    if abs(a.coeffs[0]) == 0.0:
        raise ZeroConstantTerm("cannot invert a series with zero constant term")
    return CoefficientSeries(_divide_trunc(np.ones(1, dtype=complex), a.coeffs, order))


def mobius_automorphism_coeffs(a: float, order: int) -> CoefficientSeries:
    """Taylor coefficients of the disk automorphism (a - z)/(1 - a z).

    a_0 = a and a_k = -(1 - a^2) a^(k-1) for k >= 1; this family attains the
    powered envelope bound exactly, so it serves as the sharpness witness.
    """
    a = float(a)
    if not 0.0 <= a < 1.0:
        raise DomainError(f"automorphism parameter must lie in [0, 1), got {a}")
    c = np.empty(order + 1, dtype=complex)
    c[0] = a
    if order >= 1:
        c[1:] = -(1.0 - a * a) * a ** np.arange(order)
    return CoefficientSeries(c, head_bound=a, certified=True)


def psymmetric_extremal_coeffs(p: int, m: int, a: float, order: int) -> CoefficientSeries:
    """Coefficients of z^m (z^p - a)/(1 - a z^p).

    Only indices m + j*p are populated: -a at index m and (1 - a^2) a^(j-1)
    at m + j*p for j >= 1.
    """
    if int(p) != p or int(m) != m:
        raise DomainError(f"p and m must be integers, got p={p}, m={m}")
    p, m = int(p), int(m)
    if p < 1 or not 0 <= m <= p:
        raise DomainError(f"need p >= 1 and 0 <= m <= p, got p={p}, m={m}")
    a = float(a)
    if not 0.0 <= a < 1.0:
        raise DomainError(f"parameter a must lie in [0, 1), got {a}")
    c = np.zeros(order + 1, dtype=complex)
    if m <= order:
        c[m] = -a
    j = 1
    while m + j * p <= order:
        c[m + j * p] = (1.0 - a * a) * a ** (j - 1)
        j += 1
    head = a if m == 0 else 0.0
    return CoefficientSeries(c, head_bound=head, certified=True)


def be_extremal_coeffs(a: float, order: int) -> CoefficientSeries:
    """Coefficients of z (a - z)/(1 - a z), the vanishing-at-0 extremal family."""
    a = float(a)
    if not 0.0 <= a < 1.0:
        raise DomainError(f"parameter a must lie in [0, 1), got {a}")
    c = np.zeros(order + 1, dtype=complex)
    if order >= 1:
        c[1] = a
    if order >= 2:
        c[2:] = -(1.0 - a * a) * a ** np.arange(order - 1)
    return CoefficientSeries(c, head_bound=0.0, certified=True)


def _active_params(s: SchurFunction) -> np.ndarray:
    """Parameters up to and including the first (effectively) unimodular one."""
    mods = np.abs(s.params)
    hit = np.flatnonzero(mods >= 1.0 - UNIMODULAR_TOL)
    if hit.size:
        j = hit[0]
        active = s.params[: j + 1].copy()
        active[j] = active[j] / mods[j]  # snap to the unit circle
        return active
    return np.array(s.params)


def schur_synthesis(s: SchurFunction, order: int) -> CoefficientSeries:
    """Taylor coefficients of the unit-ball function encoded by Schur parameters.

    Runs the backward recursion f_j = (g_j + z f_{j+1}) / (1 + conj(g_j) z f_{j+1})
    in accumulated linear-fractional form: f_0 = P/Q with polynomial P, Q built
    exactly, followed by one truncated division.  Algebraically identical to the
    step-by-step truncated recursion, with a single rounding-sensitive division.
    """
    if order < 0:
        raise DomainError("order must be non-negative")
    params = _active_params(s)
    P = np.zeros(1, dtype=complex)
    Q = np.ones(1, dtype=complex)
    for g in params[::-1]:
        zP = np.concatenate(([0.0], P))
        Qpad = np.concatenate((Q, [0.0]))
        P = g * Qpad + zP
        Q = Qpad + np.conj(g) * zP
    coeffs = _divide_trunc(P[: order + 1], Q[: order + 1], order)
    return CoefficientSeries(coeffs, head_bound=abs(coeffs[0]), certified=True)


def schur_analysis(c: CoefficientSeries, depth: int) -> SchurFunction:
    """Recover Schur parameters from a truncated unit-ball coefficient sequence.

    Forward recursion: gamma_j = f_j(0), then
    f_{j+1} = (f_j - gamma_j) / (z (1 - conj(gamma_j) f_j)), each step consuming
    one order of truncation.  Stops early on a unimodular parameter (Blaschke
    factor).  Intended for roundtrip checks: re-synthesizing the returned
    parameters reproduces the input coefficients to about 1e-12; the parameters
    themselves are conditioned by prod 1/(1 - |gamma_j|^2) and lose accuracy
    when intermediate moduli approach 1.
    """
    depth = int(depth)
    if depth < 0:
        raise DomainError("depth must be non-negative")
    if depth > c.order:
        raise DomainError(f"depth {depth} exceeds series order {c.order}")
    f = np.array(c.coeffs, dtype=complex)
    params = []
    for j in range(depth + 1):
        g = f[0]
        mod = abs(g)
        if mod > 1.0 + 1e-12:
            raise NonSchurInput(
                f"intermediate Schur parameter has modulus {mod:.6g} > 1"
            )
        params.append(g)
        if mod >= 1.0 - UNIMODULAR_TOL or j == depth:
            break
        num = f[1:]
        den = -np.conj(g) * f
        den[0] += 1.0
        f = _divide_trunc(num, den[: len(num)], len(num) - 1)
    return SchurFunction(np.array(params, dtype=complex))


def harmonic_pair(
    h_params: SchurFunction,
    w_params: SchurFunction,
    scale: float,
    order: int,
) -> HarmonicPair:
    """Build (h, g) with h = scale * (Schur synthesis) and g' = w * h'.

    The co-analytic coefficients follow by term-wise integration:
    b_k = (1/k) * sum_{j=0}^{k-1} w_j (k-j) a_{k-j}, b_0 = 0.  Since |w| <= 1
    forces sum |b_k|^2 <= sum |a_k|^2 <= scale^2 <= 1, every |b_k| <= 1 and the
    co-analytic part carries the unit-ball certificate with head_bound 0.
    """
    scale = float(scale)
    if not 0.0 < scale <= 1.0:
        raise DomainError(f"scale must lie in (0, 1], got {scale}")
    h_unit = schur_synthesis(h_params, order)
    a = scale * np.array(h_unit.coeffs)
    w = schur_synthesis(w_params, order).coeffs
    b = np.zeros(order + 1, dtype=complex)
    if order >= 1:
        hp = np.arange(1, order + 1) * a[1:]          # coefficients of h'
        conv = np.convolve(w[:order], hp)[:order]      # coefficients of w h'
        b[1:] = conv / np.arange(1, order + 1)
    # scaling into the ball preserves the coefficient certificate:
    # scale (1 - |g0|^2) <= 1 - (scale |g0|)^2 for every scale in (0, 1]
    analytic = CoefficientSeries(a, head_bound=scale * abs(h_unit.coeffs[0]), certified=True)
    coanalytic = CoefficientSeries(b, head_bound=0.0, certified=True)
    return HarmonicPair(analytic=analytic, coanalytic=coanalytic)


def shifted_by_z(c: CoefficientSeries) -> CoefficientSeries:
    """Multiply a certified unit-ball series by z (drops the last coefficient).

    z*f stays in the unit ball with value 0 at the origin, so the result is
    certified with head_bound 0.
    """
    out = np.concatenate(([0.0], c.coeffs[:-1]))
    return CoefficientSeries(out, head_bound=0.0, certified=c.certified)


def evaluate_polynomial(c: CoefficientSeries, z) -> np.ndarray:
    """Horner evaluation of the truncated polynomial at point(s) z."""
    return np.polyval(np.array(c.coeffs)[::-1], np.asarray(z, dtype=complex))
