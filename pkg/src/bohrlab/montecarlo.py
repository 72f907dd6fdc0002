"""Seeded Monte-Carlo stress tests of the implemented inequalities.

Each claim draws deterministic unit-ball samples (per-trial seeds derived from
the run seed by a splitmix-style counter hash), measures the slack of the
claimed bound against a certified upper enclosure of the sample's sum, and
reports failures, worst margin and replay data.  Trials are independent; the
reduction (failure count, minimum slack) is order-independent, so reports are
identical whether trials run serially or across workers (BOHRLAB_THREADS).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError
from .eilenberg import be_bound, be_harmonic_bound, be_lp_combination_sum
from .harmonic import harmonic_bound, harmonic_threshold
from .majorant import harmonic_powered_sum, powered_sum, quadratic_sum_check
from .radii import _check_r, maximize_envelope, mp_theorem1
from .series import SchurFunction, harmonic_pair, mobius_automorphism_coeffs, schur_synthesis

SLACK_TOL = 1e-9
WITNESS_TOL = 1e-8
DEFAULT_DEPTH = 12
DEFAULT_ORDER = 64

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one seeded claim run; params carries replay diagnostics."""

    claim_id: str
    trials: int
    failures: int
    worst_margin: float
    seed: int
    params: dict = field(default_factory=dict)


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def trial_seed(seed: int, index: int) -> int:
    """Per-trial seed: run seed xor splitmix hash of the trial counter."""
    return (int(seed) ^ _splitmix64(int(index))) & _MASK64


def sample_schur(seed: int, depth: int) -> SchurFunction:
    """Deterministic disk-uniform Schur parameters: modulus sqrt(U), uniform angle."""
    depth = int(depth)
    if depth < 0:
        raise DomainError("depth must be non-negative")
    rng = np.random.default_rng(int(seed) & _MASK64)
    mods = np.sqrt(rng.random(depth + 1))
    angles = 2.0 * np.pi * rng.random(depth + 1)
    return SchurFunction(mods * np.exp(1j * angles))


def _worker_count() -> int:
    raw = os.environ.get("BOHRLAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _effective_order(order: int, r: float) -> int:
    """Raise the truncation order until the generic tail r^(N+1)/(1-r) falls
    below the slack tolerance.

    The enclosures compare their conservative side against the bound, so at
    large r a coarse order would flag tail-sized spurious failures on tight
    witnesses; the adaptive floor keeps the tail ignorable at every radius.
    """
    order = int(order)
    if r <= 0.0:
        return order
    need = math.log(0.1 * SLACK_TOL * (1.0 - r)) / math.log(r)
    return max(order, min(int(need) + 1, 4000))


def _chunk_slacks(fn: Callable, args: tuple, seed: int, lo: int, hi: int) -> list[float]:
    return [fn(args, trial_seed(seed, i)) for i in range(lo, hi)]


def _collect_slacks(fn: Callable, args: tuple, trials: int, seed: int) -> np.ndarray:
    workers = min(_worker_count(), max(1, trials))
    if workers == 1 or trials < 4 * workers:
        return np.array(_chunk_slacks(fn, args, seed, 0, trials))
    bounds = np.linspace(0, trials, workers + 1).astype(int)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(
            _chunk_slacks,
            [fn] * workers,
            [args] * workers,
            [seed] * workers,
            bounds[:-1],
            bounds[1:],
        )
        out = [s for part in parts for s in part]
    return np.array(out)


def _reduce(claim_id, slacks, witness_slacks, trials, seed, params, witness_abs_tol=None):
    """Order-independent reduction into a report.

    Witness slacks join the failure count: dominance witnesses at SLACK_TOL,
    equality witnesses (witness_abs_tol set) on |slack|.
    """
    failures = int(np.sum(slacks < -SLACK_TOL))
    worst = float(slacks.min()) if len(slacks) else np.inf
    if len(slacks):
        worst_idx = int(np.lexsort((np.arange(len(slacks)), slacks))[0])
        params = dict(params, worst_trial=worst_idx)
        if failures:
            # regenerates the offending sample through sample_schur for replay
            params["worst_trial_seed"] = trial_seed(seed, worst_idx)
    if witness_slacks:
        warr = np.array(witness_slacks)
        if witness_abs_tol is not None:
            failures += int(np.sum(np.abs(warr) > witness_abs_tol))
            params["witness_max_abs_slack"] = float(np.abs(warr).max())
        else:
            failures += int(np.sum(warr < -SLACK_TOL))
            params["witness_min_slack"] = float(warr.min())
        worst = min(worst, float(warr.min()))
    return VerificationReport(
        claim_id=claim_id,
        trials=trials,
        failures=failures,
        worst_margin=worst,
        seed=int(seed),
        params=params,
    )


# ---------------------------------------------------------------------------
# per-trial slack functions (top-level so worker processes can import them)

def _theorem1_slack(args: tuple, tseed: int) -> float:
    p, r, order, depth, bound = args
    sample = schur_synthesis(sample_schur(tseed, depth), order)
    return bound - powered_sum(sample, p, r).upper


def _lemma_quadratic_slack(args: tuple, tseed: int) -> float:
    big_r, order, depth = args
    sample = schur_synthesis(sample_schur(tseed, depth), order)
    check = quadratic_sum_check(sample, big_r)
    return check.rhs - check.lhs


def _theorem2_slack(args: tuple, tseed: int) -> float:
    p, r, order, depth, bound = args
    pair = harmonic_pair(
        sample_schur(tseed, depth),
        sample_schur(_splitmix64(tseed), depth),
        1.0,
        order,
    )
    return bound - harmonic_powered_sum(pair, p, r).upper


def _be_analytic_slack(args: tuple, tseed: int) -> float:
    r, order, depth, bound = args
    g = sample_schur(tseed, depth)
    f = schur_synthesis(SchurFunction(np.concatenate(([0.0], g.params))), order)
    return bound - powered_sum(f, 1.0, r).upper


def _be_harmonic_slack(args: tuple, tseed: int) -> float:
    p, r, order, depth, bound = args
    g = sample_schur(tseed, depth)
    h_params = SchurFunction(np.concatenate(([0.0], g.params)))
    pair = harmonic_pair(h_params, sample_schur(_splitmix64(tseed), depth), 1.0, order)
    return bound - be_lp_combination_sum(pair, p, r).upper


# ---------------------------------------------------------------------------
# claims

def verify_theorem1(
    p: float,
    r: float,
    trials: int,
    order: int = DEFAULT_ORDER,
    seed: int = 0,
    depth: int = DEFAULT_DEPTH,
) -> VerificationReport:
    """Dominance of the powered majorant bound over random unit-ball samples.

    The extremal automorphism family is always injected alongside the random
    trials (at the envelope argmax and a spread of parameters), since random
    sampling alone need not probe the near-extremal region.
    """
    p, r = float(p), _check_r(r)
    if not 0.0 < p <= 2.0:
        raise DomainError(f"exponent p must lie in (0, 2], got {p}")
    order = _effective_order(order, r)
    bound = mp_theorem1(p, r).value
    args = (p, r, order, int(depth), bound)
    slacks = _collect_slacks(_theorem1_slack, args, int(trials), int(seed))

    witness_a = [0.2, 0.5, 0.8, min(maximize_envelope(p, r).argmax, 1.0 - 1e-8)]
    witness = [
        bound - powered_sum(mobius_automorphism_coeffs(a, order), p, r).upper
        for a in witness_a
    ]
    params = {"p": p, "r": r, "depth": int(depth), "order": order}
    return _reduce("theorem1", slacks, witness, int(trials), seed, params)


def verify_lemma_quadratic(
    trials: int,
    big_r: float,
    seed: int = 0,
    order: int = DEFAULT_ORDER,
    depth: int = DEFAULT_DEPTH,
) -> VerificationReport:
    """Quadratic coefficient inequality over random samples plus equality witnesses.

    The automorphism witnesses at a in {0.2, 0.5, 0.8} attain equality, so
    their |slack| must stay below 1e-8; violations count as failures.
    """
    big_r = float(big_r)
    if big_r < 1.0:
        order = _effective_order(order, big_r)  # at R = 1 the remainder fold is exact
    args = (big_r, int(order), int(depth))
    slacks = _collect_slacks(_lemma_quadratic_slack, args, int(trials), int(seed))
    witness = []
    for a in (0.2, 0.5, 0.8):
        check = quadratic_sum_check(mobius_automorphism_coeffs(a, max(int(order), 400)), big_r)
        witness.append(check.rhs - check.lhs)
    params = {"R": big_r, "depth": int(depth), "order": int(order)}
    return _reduce(
        "lemma21", slacks, witness, int(trials), seed, params, witness_abs_tol=WITNESS_TOL
    )


def verify_theorem2(
    p: float,
    r: float,
    trials: int,
    seed: int = 0,
    order: int = DEFAULT_ORDER,
    depth: int = DEFAULT_DEPTH,
) -> VerificationReport:
    """Dominance of the harmonic bound over random dominated-dilatation pairs."""
    p, r = float(p), _check_r(r)
    if p <= 0.0:
        raise DomainError(f"exponent p must be positive, got {p}")
    if p < 2.0 and r > harmonic_threshold(p):
        raise DomainError(
            f"r={r} exceeds the validity threshold {harmonic_threshold(p)} for p={p}"
        )
    order = _effective_order(order, r)
    bound = harmonic_bound(p, r).value
    args = (p, r, order, int(depth), bound)
    slacks = _collect_slacks(_theorem2_slack, args, int(trials), int(seed))

    witness = []
    omega_one = SchurFunction([1.0])
    if p <= 2.0:
        a_w = min(maximize_envelope(p, r, doubled=True).argmax, 1.0 - 1e-8)
        # phi_a has Schur parameters [a, -1]; omega = 1 doubles every term
        pair = harmonic_pair(SchurFunction([a_w, -1.0]), omega_one, 1.0, order)
        witness.append(bound - harmonic_powered_sum(pair, p, r).upper)
    pair_z = harmonic_pair(SchurFunction([0.0, 1.0]), omega_one, 1.0, order)
    witness.append(bound - harmonic_powered_sum(pair_z, p, r).upper)
    params = {"p": p, "r": r, "depth": int(depth), "order": order}
    return _reduce("theorem2", slacks, witness, int(trials), seed, params)


def verify_be(
    r: float,
    p: float,
    trials: int,
    seed: int = 0,
    order: int = DEFAULT_ORDER,
    depth: int = DEFAULT_DEPTH,
) -> tuple[VerificationReport, VerificationReport]:
    """Dominance for the vanishing-at-0 class: analytic and harmonic claims.

    Samples are z * (Schur synthesis), contained in the class, so both the
    majorant bound (p = 1 sum) and the l^p-combination bound must dominate.
    Returns one report per claim.
    """
    r = _check_r(r)
    p = float(p)
    order = _effective_order(order, r)
    bound_a = be_bound(r)
    args_a = (r, order, int(depth), bound_a)
    slacks_a = _collect_slacks(_be_analytic_slack, args_a, int(trials), int(seed))
    sums_a = bound_a - slacks_a
    # the extremal z(a-z)/(1-az) at a = 1/sqrt(2) attains the bound at the radius
    ext = SchurFunction([0.0, 1.0 / np.sqrt(2.0), -1.0])
    witness_a = [bound_a - powered_sum(schur_synthesis(ext, order), 1.0, r).upper]
    params_a = {
        "r": r,
        "depth": int(depth),
        "order": order,
        "max_sum": float(sums_a.max()) if len(sums_a) else 0.0,
    }
    report_a = _reduce("be_analytic", slacks_a, witness_a, int(trials), seed, params_a)

    bound_h = be_harmonic_bound(p, r)
    args_h = (p, r, order, int(depth), bound_h)
    # distinct deterministic stream for the harmonic half
    seed_h = trial_seed(seed, 0x5EED)
    slacks_h = _collect_slacks(_be_harmonic_slack, args_h, int(trials), seed_h)
    pair_w = harmonic_pair(ext, SchurFunction([1.0]), 1.0, order)
    witness_h = [bound_h - be_lp_combination_sum(pair_w, p, r).upper]
    params_h = {"p": p, "r": r, "depth": int(depth), "order": order}
    report_h = _reduce("be_harmonic", slacks_h, witness_h, int(trials), seed, params_h)
    return report_a, report_h


_RATIO_GRID = (0.5, 0.9, 0.99, 0.999)
_RATIO_BOUNDS = (0.1, 10.0)


def verify_theoremB_ratio(p: float, seed: int = 0) -> VerificationReport:
    """Two-sided comparability: M_p(r) (1-r)^(1-p/2) stays inside [0.1, 10]."""
    p = float(p)
    if not 0.0 < p < 2.0:
        raise DomainError(f"exponent p must lie in (0, 2), got {p}")
    lo, hi = _RATIO_BOUNDS
    ratios = {}
    margins = []
    for r in _RATIO_GRID:
        ratio = mp_theorem1(p, r).value * (1.0 - r) ** (1.0 - p / 2.0)
        ratios[f"ratio_{r}"] = ratio
        margins.append(min(ratio - lo, hi - ratio))
    failures = sum(1 for m in margins if m < 0.0)
    params = {"p": p, **ratios}
    return VerificationReport(
        claim_id="theoremB",
        trials=len(_RATIO_GRID),
        failures=failures,
        worst_margin=float(min(margins)),
        seed=int(seed),
        params=params,
    )
