"""Exact ensemble scans over Z_N* and theorem-level pass/fail harnesses.

A scan walks every numerator coprime to N, computes one statistic per
fraction with integer (or Fraction) arithmetic, and accumulates exact
first and second moments plus tail counts against thresholds that scale
with ln N.  Workers split [1, N-1] into contiguous ranges; the merge is
plain addition of exact accumulators, so the result does not depend on
the worker count.
"""

from __future__ import annotations

import math
import multiprocessing
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import (MAX_DENOMINATOR, ReducedFraction, Rational, WeightFn,
                   Window, cf_digits)
from .errors import InvalidSpec, InvalidWindow, LimitExceeded
from .dedekind import dedekind_scaled

PI2 = math.pi ** 2

STAT_KINDS = ("S", "M", "L", "S_alt", "D", "restricted")


@dataclass(frozen=True)
class StatSpec:
    """Statistic selector: S, M, L (needs b, c), S_alt, D, or restricted
    (needs f, eta, theta)."""

    kind: str
    b: Optional[int] = None
    c: Optional[int] = None
    f: Optional[WeightFn] = None
    eta: Optional[int] = None
    theta: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in STAT_KINDS:
            raise InvalidSpec(f"unknown statistic {self.kind!r}")
        if self.kind == "L":
            if self.b is None or self.c is None or self.b < 1 or self.b > self.c:
                raise InvalidSpec(f"L needs 1 <= b <= c, got ({self.b}, {self.c})")
        if self.kind == "restricted":
            if self.f is None or self.eta is None:
                raise InvalidSpec("restricted needs a weight and a window")
            Window(self.eta, self.theta)

    def label(self) -> str:
        if self.kind == "L":
            return f"L[{self.b},{self.c}]"
        if self.kind == "restricted":
            hi = "inf" if self.theta is None else self.theta
            return f"restricted[{self.eta},{hi}]"
        return self.kind


def euler_phi(N: int) -> int:
    """phi(N) by trial-division factorization."""
    if N < 1:
        raise InvalidSpec(f"phi needs N >= 1, got {N}")
    result = N
    n = N
    p = 2
    while p * p <= n:
        if n % p == 0:
            result -= result // p
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        result -= result // n
    return result


def enumerate_coprime(N: int):
    """All a in [1, N-1] with gcd(a, N) = 1, ascending."""
    if N < 2:
        raise InvalidSpec(f"need N >= 2, got {N}")
    for a in range(1, N):
        if math.gcd(a, N) == 1:
            yield ReducedFraction(a, N)


@dataclass
class EnsembleSummary:
    """Exact moments and tail counts of one statistic over Z_N*.

    Accumulators are kept at an integer scale so Dedekind sums (denominator
    dividing 24N) stay exact: the statistic's value is raw/scale.
    """

    N: int
    phi: int
    spec: StatSpec
    count: int
    scale: int
    sum_scaled: Rational
    sumsq_scaled: Rational
    tail_counts: dict
    histogram: Optional[dict]
    center: float
    absolute: bool

    @property
    def exact_mean(self) -> Fraction:
        return Fraction(self.sum_scaled) / (self.scale * self.count)

    @property
    def exact_variance(self) -> Fraction:
        m = self.exact_mean
        return Fraction(self.sumsq_scaled) / (self.scale ** 2 * self.count) - m * m

    @property
    def mean(self) -> float:
        return float(self.exact_mean)

    @property
    def variance(self) -> float:
        return float(self.exact_variance)

    def tail_fraction(self, t: float) -> float:
        return self.tail_counts[t] / self.count


def _stat_value_scaled(spec: StatSpec, a: int, N: int):
    """Raw statistic value at the selector's integer scale."""
    kind = spec.kind
    if kind == "D":
        return dedekind_scaled(a, N)
    digits = cf_digits(a, N)
    if kind == "S":
        return sum(digits)
    if kind == "M":
        return max(digits)
    if kind == "L":
        b, c = spec.b, spec.c
        return sum(1 for d in digits if b <= d <= c)
    if kind == "S_alt":
        total = 0
        for i, d in enumerate(digits, start=1):
            total += -d if i % 2 else d
        return total
    f, eta, theta = spec.f, spec.eta, spec.theta
    total = 0
    for d in digits:
        if d >= eta and (theta is None or d <= theta):
            total += f(d)
    return total


def _scan_range(args):
    (N, spec, lo, hi, thresholds, with_histogram, center, absolute,
     scale) = args
    logN = math.log(N)
    cuts = [t * logN for t in thresholds]
    tails = [0] * len(thresholds)
    hist: Optional[dict] = {} if with_histogram else None
    count = 0
    total = 0
    total_sq = 0
    for a in range(lo, hi):
        if math.gcd(a, N) != 1:
            continue
        raw = _stat_value_scaled(spec, a, N)
        count += 1
        total += raw
        total_sq += raw * raw
        if cuts or hist is not None:
            y = raw / scale if scale != 1 else raw
            if hist is not None:
                hist[y] = hist.get(y, 0) + 1
            z = float(y) - center
            if absolute:
                z = abs(z)
            for j, cut in enumerate(cuts):
                if z >= cut:
                    tails[j] += 1
    return count, total, total_sq, tails, hist


def scan(N: int, spec: StatSpec, thresholds: Optional[list] = None,
         workers: int = 1, with_histogram: bool = False,
         center: float = 0.0, absolute: bool = False) -> EnsembleSummary:
    """Exact moments/tails of spec over Z_N*, threshold t means t * ln N."""
    if N < 2:
        raise InvalidSpec(f"need N >= 2, got {N}")
    if N >= MAX_DENOMINATOR:
        raise LimitExceeded(f"denominator {N} >= 2^62")
    thresholds = list(thresholds or [])
    scale = 24 * N if spec.kind == "D" else 1
    if spec.kind == "restricted":
        spec.f.validate_on(Window(spec.eta, spec.theta), max_digit=N)
    jobs = []
    workers = max(1, workers)
    bounds = [1 + (N - 1) * i // workers for i in range(workers + 1)]
    for lo, hi in zip(bounds, bounds[1:]):
        if lo < hi:
            jobs.append((N, spec, lo, hi, thresholds, with_histogram,
                         center, absolute, scale))
    if len(jobs) > 1:
        with multiprocessing.get_context("fork").Pool(len(jobs)) as pool:
            parts = pool.map(_scan_range, jobs)
    else:
        parts = [_scan_range(job) for job in jobs]
    count = sum(p[0] for p in parts)
    total = sum(p[1] for p in parts)
    total_sq = sum(p[2] for p in parts)
    tails = {t: sum(p[3][j] for p in parts) for j, t in enumerate(thresholds)}
    hist = None
    if with_histogram:
        hist = {}
        for p in parts:
            for k, v in p[4].items():
                hist[k] = hist.get(k, 0) + v
    phi = euler_phi(N)
    assert count == phi
    return EnsembleSummary(N=N, phi=phi, spec=spec, count=count, scale=scale,
                           sum_scaled=total, sumsq_scaled=total_sq,
                           tail_counts=tails, histogram=hist,
                           center=center, absolute=absolute)


def _digit_range(args):
    N, lo, hi, m_max = args
    counts = [0] * (m_max + 1)
    overflow = 0
    for a in range(lo, hi):
        if math.gcd(a, N) != 1:
            continue
        num, den = a, N
        while num:
            q, r = divmod(den, num)
            if q <= m_max:
                counts[q] += 1
            else:
                overflow += 1
            den, num = num, r
    return counts, overflow


def digit_histogram(N: int, m_max: int, workers: int = 1) -> dict:
    """Digit-value counts over Z_N* and Gauss-Kuzmin normalized frequencies.

    The normalized frequency of m is (pi^2 / (12 ln 2 ln N)) count(m)/phi(N),
    to be compared with log2(1 + 1/(m (m+2))).
    """
    if N < 3:
        raise InvalidSpec(f"need N >= 3, got {N}")
    if N >= MAX_DENOMINATOR:
        raise LimitExceeded(f"denominator {N} >= 2^62")
    workers = max(1, workers)
    bounds = [1 + (N - 1) * i // workers for i in range(workers + 1)]
    jobs = [(N, lo, hi, m_max) for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
    if len(jobs) > 1:
        with multiprocessing.get_context("fork").Pool(len(jobs)) as pool:
            parts = pool.map(_digit_range, jobs)
    else:
        parts = [_digit_range(job) for job in jobs]
    counts = {m: sum(p[0][m] for p in parts) for m in range(1, m_max + 1)}
    phi = euler_phi(N)
    norm = PI2 / (12 * math.log(2) * math.log(N))
    freq = {m: norm * counts[m] / phi for m in counts}
    target = {m: math.log2(1 + 1 / (m * (m + 2))) for m in counts}
    return {"N": N, "phi": phi, "counts": counts, "freq": freq,
            "target": target,
            "overflow": sum(p[1] for p in parts)}


@dataclass(frozen=True)
class TheoremConstants:
    A: float
    B: float
    C: float
    D: float
    Dprime: float
    Xi: float
    mu: float


def constants(f: WeightFn, w: Window, b: int, c: int) -> TheoremConstants:
    """Expected-value and variance constants for the restricted digit sum.

    A = (12/pi^2) sum_{m=eta}^{theta} f(m) ln(1 + 1/(m(m+2)))
    B = A + f(theta)/theta
    C = 5 f(theta) / B          (needs f(theta) > 0)
    D = B sum f(m)/m^4,  D' = B sum f(m)/m^3
    Xi = 2 f(eta)^2/(eta(eta+1))
         + sum_{m=eta}^{theta-1} 2 (f(m+1)-f(m))^2 / ((m+1)(m+2))
         + 2 f(theta)^2 / ((theta+1)(theta+2))
    mu = (12/pi^2) sum_{m=b}^{c} ln(1 + 1/(m(m+2)))
    """
    eta, theta = w.eta, w.finite_theta()
    f.validate_on(w)
    if b < 1 or b > c:
        raise InvalidWindow(f"need 1 <= b <= c, got ({b}, {c})")
    A = (12 / PI2) * sum(float(f(m)) * math.log1p(1 / (m * (m + 2)))
                         for m in range(eta, theta + 1))
    B = A + float(f(theta)) / theta
    C = 5 * float(f(theta)) / B
    D = B * sum(float(f(m)) / m ** 4 for m in range(eta, theta + 1))
    Dprime = B * sum(float(f(m)) / m ** 3 for m in range(eta, theta + 1))
    Xi = (2 * float(f(eta)) ** 2 / (eta * (eta + 1))
          + sum(2 * float(f(m + 1) - f(m)) ** 2 / ((m + 1) * (m + 2))
                for m in range(eta, theta))
          + 2 * float(f(theta)) ** 2 / ((theta + 1) * (theta + 2)))
    mu = (12 / PI2) * sum(math.log1p(1 / (m * (m + 2))) for m in range(b, c + 1))
    return TheoremConstants(A=A, B=B, C=C, D=D, Dprime=Dprime, Xi=Xi, mu=mu)


def mu_window(b: int, c: int) -> float:
    """mu_[b,c] = (12/pi^2) sum_{m=b}^{c} ln(1 + 1/(m(m+2)))."""
    if b < 1 or b > c:
        raise InvalidWindow(f"need 1 <= b <= c, got ({b}, {c})")
    return (12 / PI2) * sum(math.log1p(1 / (m * (m + 2)))
                            for m in range(b, c + 1))


def thm_harness(N: int, which: str, t_values: Optional[list] = None,
                b: int = 1, c: int = 1, workers: int = 1) -> dict:
    """Empirical tail/mean reports against the four ensemble theorems.

    T1: the digit sum concentrates at (12/pi^2) ln N ln ln N; the report
        checks t * P(|S - center| >= t ln N) <= 3 for each t.
    T2: P(M >= t ln N) should sit in [0.7, 1.25] * 12/(pi^2 t) and be
        non-increasing in t.
    T3: mean of L_[b,c] should be within 10 percent of mu_[b,c] ln N.
    T4: like T1 for |D(a/N)| without centering.
    """
    if N < 3:
        raise InvalidSpec(f"harness needs N >= 3, got {N}")
    logN = math.log(N)
    if which == "T3":
        summary = scan(N, StatSpec("L", b=b, c=c), workers=workers)
        mu = mu_window(b, c)
        ratio = summary.mean / (mu * logN)
        return {"theorem": "T3", "N": N, "b": b, "c": c,
                "mean": summary.mean, "variance": summary.variance,
                "mu": mu, "mu_lnN": mu * logN, "ratio": ratio,
                "ok": abs(ratio - 1) <= 0.10}
    t_values = list(t_values or [2.0, 4.0, 8.0])
    if which == "T1":
        center = (12 / PI2) * logN * math.log(logN)
        summary = scan(N, StatSpec("S"), thresholds=t_values, workers=workers,
                       center=center, absolute=True)
        rows = [{"t": t, "fraction": summary.tail_fraction(t),
                 "product": t * summary.tail_fraction(t)} for t in t_values]
        return {"theorem": "T1", "N": N, "center": center, "rows": rows,
                "ok": all(r["product"] <= 3 for r in rows)}
    if which == "T2":
        summary = scan(N, StatSpec("M"), thresholds=t_values, workers=workers)
        rows = []
        for t in t_values:
            frac = summary.tail_fraction(t)
            bound = 12 / (PI2 * t)
            rows.append({"t": t, "fraction": frac, "bound": bound,
                         "hensley": 1 - math.exp(-12 / (PI2 * t)),
                         "in_band": 0.7 * bound <= frac <= 1.25 * bound})
        fracs = [r["fraction"] for r in rows]
        mono = all(u >= v for u, v in zip(fracs, fracs[1:]))
        return {"theorem": "T2", "N": N, "rows": rows, "monotone": mono,
                "ok": mono and all(r["in_band"] for r in rows)}
    if which == "T4":
        summary = scan(N, StatSpec("D"), thresholds=t_values, workers=workers,
                       absolute=True)
        rows = [{"t": t, "fraction": summary.tail_fraction(t),
                 "product": t * summary.tail_fraction(t)} for t in t_values]
        return {"theorem": "T4", "N": N, "rows": rows,
                "ok": all(r["product"] <= 3 for r in rows)}
    raise InvalidSpec(f"unknown harness {which!r}")


def panov_mean_report(N: int) -> dict:
    """Exact mean of S over Z_N* next to its (6/pi^2) (ln N)^2 main term."""
    summary = scan(N, StatSpec("S"))
    target = (6 / PI2) * math.log(N) ** 2
    return {"N": N, "mean": summary.mean, "exact_mean": summary.exact_mean,
            "target": target, "ratio": summary.mean / target}
