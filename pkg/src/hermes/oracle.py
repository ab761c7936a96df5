"""Brute-force cross-checks of the closed-form counts and bounds.

:func:`rank_census` enumerates H_n(q^2) and tallies ranks, independently of
the Carlitz count in :mod:`hermes.counting`.  :func:`perfect_scan` and
:func:`bound_sweep` are exact-arithmetic scans over parameter grids.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .counting import (
    NotPrimePowerWarning,
    ball_bounds,
    ball_size,
    binomial_bounds,
    gaussian_binomial,
    packing_radius,
    power_of,
    sphere_bounds,
    sphere_size,
)
from .field import factor_prime_power, hermitian_field, is_prime_power
from .hermitian import iter_rows, num_partitions, rank_of_rows

POWER_MODE = "power"
INTEGER_MODE = "integer"


@dataclass(frozen=True)
class RankCensus:
    q: int
    n: int
    counts: tuple
    total: int

    def to_dict(self):
        return {"q": self.q, "n": self.n, "counts": list(self.counts), "total": self.total}


def _census_partition(q, n, cap, index):
    f = hermitian_field(q)
    counts = [0] * (n + 1)
    for rows in iter_rows(n, f, cap, partition=index):
        counts[rank_of_rows(rows, f)] += 1
    return counts


def rank_census(q, n, cap=None, workers=1):
    """Count the matrices of each rank in H_n(q^2) by full enumeration.

    With ``workers > 1`` the enumeration is split on the first diagonal entry
    and the partitions run in separate processes.
    """
    factor_prime_power(q)
    f = hermitian_field(q)
    parts = range(num_partitions(f))
    # validate the cap before spawning anything
    next(iter_rows(n, f, cap), None)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_census_partition, *zip(*[(q, n, cap, i) for i in parts])))
    else:
        partials = [_census_partition(q, n, cap, i) for i in parts]
    counts = tuple(sum(col) for col in zip(*partials))
    total = sum(counts)
    if total != q ** (n * n):
        raise AssertionError(f"census total {total} != q^(n^2) = {q ** (n * n)}")
    return RankCensus(q, n, counts, total)


@dataclass(frozen=True)
class CensusCheck:
    q: int
    n: int
    census: tuple
    formula: tuple
    passed: bool
    mismatch: tuple | None

    def to_dict(self):
        return {
            "q": self.q,
            "n": self.n,
            "census": list(self.census),
            "formula": list(self.formula),
            "passed": self.passed,
            "mismatch": None
            if self.mismatch is None
            else dict(zip(("t", "census", "formula"), self.mismatch)),
        }


def census_vs_formula(q, n, cap=None, workers=1):
    census = rank_census(q, n, cap, workers).counts
    formula = tuple(sphere_size(q, n, t) for t in range(n + 1))
    mismatch = next(
        ((t, a, b) for t, (a, b) in enumerate(zip(census, formula)) if a != b), None
    )
    return CensusCheck(q, n, census, formula, mismatch is None, mismatch)


@dataclass(frozen=True)
class Finding:
    q: int
    n: int
    d: int
    t: int
    M: int
    trivial: bool


@dataclass(frozen=True)
class PerfectScanResult:
    grid: list
    findings: list
    mode: str
    lemma_checks: int = 0
    lemma_violations: list = field(default_factory=list)

    @property
    def trivial(self):
        return [f for f in self.findings if f.trivial]

    @property
    def nontrivial(self):
        return [f for f in self.findings if not f.trivial]

    def to_dict(self):
        return {
            "mode": self.mode,
            "grid_size": len(self.grid),
            "findings": [asdict(f) for f in self.findings],
            "trivial_count": len(self.trivial),
            "nontrivial_count": len(self.nontrivial),
            "lemma_checks": self.lemma_checks,
            "lemma_violations": [list(v) for v in self.lemma_violations],
        }


def perfect_scan(q_list, n_max, mode=POWER_MODE, n_min=1):
    """Search every (q, n, d) with n_min <= n <= n_max, d <= n for perfect parameters.

    A finding is a size M = q^{n^2} / B_t (exact division) that respects the
    Singleton-like cap ``q^{n(n-d+1)}``; in power mode M must also be a power
    of q.  The full space (M = q^{n^2}) is tagged trivial.

    Alongside, the Singleton-capped sizes for t = 1 (d = 3) and t = 2 (d = 5)
    are checked to fall strictly short of q^{n^2}.
    """
    if mode not in (POWER_MODE, INTEGER_MODE):
        raise ValueError(f"unknown scan mode {mode!r}")
    if n_max < 2:
        raise ValueError(f"n_max must be at least 2, got {n_max}")
    grid, findings, violations = [], [], []
    checks = 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NotPrimePowerWarning)
        for q in q_list:
            if q < 2:
                raise ValueError(f"q must be at least 2, got {q}")
            for n in range(n_min, n_max + 1):
                space = q ** (n * n)
                balls = [ball_size(q, n, t) for t in range(n + 1)]
                for d in range(1, n + 1):
                    grid.append((q, n, d))
                    t = packing_radius(d)
                    m, rem = divmod(space, balls[t])
                    if rem or m > q ** (n * (n - d + 1)):
                        continue
                    if mode == POWER_MODE and power_of(m, q) is None:
                        continue
                    findings.append(Finding(q, n, d, t, m, m == space))
                for d, t in ((3, 1), (5, 2)):
                    if n >= d:
                        checks += 1
                        if q ** (n * (n - d + 1)) * balls[t] >= space:
                            violations.append((q, n, d))
    return PerfectScanResult(grid, findings, mode, checks, violations)


@dataclass(frozen=True)
class SweepReport:
    points: int
    checks: int
    violations: list

    @property
    def passed(self):
        return not self.violations

    def to_dict(self):
        return {
            "points": self.points,
            "checks": self.checks,
            "violations": self.violations,
            "passed": self.passed,
        }


def bound_sweep(q_list, n_max, n_min=1):
    """Check the binomial, sphere and ball brackets at every (q, n, t) in the grid."""
    points = checks = 0
    violations = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NotPrimePowerWarning)
        for q in q_list:
            for n in range(n_min, n_max + 1):
                for t in range(n + 1):
                    points += 1
                    s = sphere_size(q, n, t)
                    b = ball_size(q, n, t)
                    cases = (
                        ("binomial", gaussian_binomial(q * q, n, t), binomial_bounds(q, n, t)),
                        ("sphere", s, sphere_bounds(q, n, t)),
                        ("ball", b, ball_bounds(q, n, t)),
                    )
                    for kind, value, bracket in cases:
                        checks += 1
                        if value not in bracket:
                            violations.append({"kind": kind, "q": q, "n": n, "t": t, "value": value})
    return SweepReport(points, checks, violations)


def prime_powers(lo, hi):
    return [q for q in range(max(lo, 2), hi + 1) if is_prime_power(q)]
