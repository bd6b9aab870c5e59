"""Interval families around reduced fractions and the digit-counting weights.

For b/k = [0; b_1, ..., b_s] (b_s > 1) and a digit value m, the interval
I(b/k, m) has endpoints [0; b_1..b_s, m] (included iff m > 1) and
[0; b_1..b_s, m+1] (excluded); I'(b/k, m) has endpoints
[0; b_1..b_{s-1}, b_s - 1, 1, m] (included iff m > 1) and the same list
ending in m+1 (excluded).  A point x lies in I(b/k, m) exactly when the
expansion of x continues b_1..b_s with digit m, and in I'(b/k, m) when it
continues the prefix through a digit 1.  Summing f(m) over both families
for all prefixes b/k therefore counts weighted digit occurrences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .core import ReducedFraction, Rational, WeightFn, Window, cf_digits, convergents_of
from .errors import BadDigit, InvalidWindow, NotCoprime


@dataclass(frozen=True, slots=True)
class IntervalQ:
    """Rational interval with explicit endpoint inclusion flags."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool
    hi_closed: bool

    def __post_init__(self) -> None:
        if self.lo > self.hi or (self.lo == self.hi
                                 and not (self.lo_closed and self.hi_closed)):
            raise InvalidWindow(f"empty interval ({self.lo}, {self.hi})")

    @property
    def measure(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def is_subset(self, other: "IntervalQ") -> bool:
        if self.lo < other.lo or (self.lo == other.lo
                                  and self.lo_closed and not other.lo_closed):
            return False
        if self.hi > other.hi or (self.hi == other.hi
                                  and self.hi_closed and not other.hi_closed):
            return False
        return True

    def __str__(self) -> str:
        return (("[" if self.lo_closed else "(") + f"{self.lo}, {self.hi}"
                + ("]" if self.hi_closed else ")"))


def _check_prefix(b: int, k: int, m: int) -> None:
    if m < 1:
        raise BadDigit(f"digit value must be >= 1, got {m}")
    if k < 1 or not 1 <= b <= k:
        raise NotCoprime(f"need 1 <= b <= k with k >= 1, got b={b}, k={k}")
    if math.gcd(b, k) != 1:
        raise NotCoprime(f"gcd({b}, {k}) != 1")


@lru_cache(maxsize=65536)
def prefix_convergents(b: int, k: int) -> tuple[int, int, int, int]:
    """(p_s, q_s, p_{s-1}, q_{s-1}) for b/k with k >= 2."""
    conv = convergents_of(cf_digits(b, k))
    (ps, qs), (ps1, qs1) = conv[-1], conv[-2]
    return ps, qs, ps1, qs1


def _ordered(e1: Fraction, e1_closed: bool, e2: Fraction) -> IntervalQ:
    # e2 is always the excluded endpoint.
    if e1 < e2:
        return IntervalQ(e1, e2, e1_closed, False)
    return IntervalQ(e2, e1, False, e1_closed)


def interval_I(b: int, k: int, m: int) -> IntervalQ:
    """The interval I(b/k, m) of points whose next digit after b/k is m."""
    _check_prefix(b, k, m)
    if k == 1:
        if m == 1:
            return IntervalQ(Fraction(1, 2), Fraction(1), False, False)
        return IntervalQ(Fraction(1, m + 1), Fraction(1, m), False, True)
    ps, qs, ps1, qs1 = prefix_convergents(b, k)
    e1 = Fraction(m * ps + ps1, m * qs + qs1)
    e2 = Fraction((m + 1) * ps + ps1, (m + 1) * qs + qs1)
    return _ordered(e1, m > 1, e2)


def interval_Iprime(b: int, k: int, m: int) -> IntervalQ:
    """The interval I'(b/k, m): next digit is m after an intervening 1."""
    _check_prefix(b, k, m)
    if k == 1:
        if m == 1:
            return IntervalQ(Fraction(1, 2), Fraction(2, 3), False, False)
        return IntervalQ(Fraction(m, m + 1), Fraction(m + 1, m + 2), True, False)
    ps, qs, ps1, qs1 = prefix_convergents(b, k)
    e1 = Fraction((m + 1) * ps - ps1, (m + 1) * qs - qs1)
    e2 = Fraction((m + 2) * ps - ps1, (m + 2) * qs - qs1)
    return _ordered(e1, m > 1, e2)


def measure_I(b: int, k: int, m: int) -> Fraction:
    """Closed-form Lebesgue measure of I(b/k, m)."""
    if k == 1:
        return Fraction(1, 2) if m == 1 else Fraction(1, m * (m + 1))
    _, qs, _, qs1 = prefix_convergents(b, k)
    return Fraction(1, (m * qs + qs1) * ((m + 1) * qs + qs1))


def measure_Iprime(b: int, k: int, m: int) -> Fraction:
    """Closed-form Lebesgue measure of I'(b/k, m)."""
    if k == 1:
        return Fraction(1, 6) if m == 1 else Fraction(1, (m + 1) * (m + 2))
    _, qs, _, qs1 = prefix_convergents(b, k)
    return Fraction(1, ((m + 1) * qs - qs1) * ((m + 2) * qs - qs1))


def interval_left(b: int, k: int, m: int) -> IntervalQ:
    """Whichever of I(b/k, m), I'(b/k, m) lies left of b/k."""
    if k < 2:
        raise NotCoprime("one-sided intervals need k >= 2")
    iv = interval_I(b, k, m)
    if iv.hi <= Fraction(b, k):
        return iv
    return interval_Iprime(b, k, m)


def weight_hits(b: int, k: int, x) -> list[int]:
    """Digit values m with x in I(b/k, m) or I'(b/k, m), with multiplicity.

    Candidate m values are recovered by inverting the endpoint formulas,
    then confirmed by exact interval membership; the cost is independent
    of the window size.
    """
    _check_prefix(b, k, 1)
    x = Fraction(x)
    hits: list[int] = []
    if k == 1:
        if x > Fraction(1, 2):
            # I(1, m) is only inhabited at m = 1 on this side.
            for m in (1,):
                if interval_I(1, 1, m).contains(x):
                    hits.append(m)
            approx = (1 - x) and x / (1 - x)
            base = math.floor(approx) if x < 1 else 0
            for m in {max(1, base - 1), max(1, base), base + 1, 1}:
                if m >= 1 and interval_Iprime(1, 1, m).contains(x):
                    hits.append(m)
        elif x > 0:
            base = math.floor(1 / x)
            for m in sorted({max(1, base - 1), base, base + 1}):
                if interval_I(1, 1, m).contains(x):
                    hits.append(m)
        return hits
    ps, qs, ps1, qs1 = prefix_convergents(b, k)
    denom = x * qs - ps
    if denom == 0:
        return hits
    t = (ps1 - x * qs1) / denom
    base = math.floor(t)
    for m in sorted({max(1, base - 1), max(1, base), max(1, base + 1)}):
        if interval_I(b, k, m).contains(x):
            hits.append(m)
    u = (x * qs1 - ps1) / denom  # equals m + 1 on I'(b/k, m) endpoints
    base = math.floor(u) - 1
    for m in sorted({max(1, base - 1), max(1, base), max(1, base + 1)}):
        if interval_Iprime(b, k, m).contains(x):
            hits.append(m)
    return hits


@lru_cache(maxsize=262144)
def _hits_at_fraction(b: int, k: int, a: int, N: int) -> tuple[int, ...]:
    """weight_hits(b, k, a/N) in pure integer arithmetic.

    Comparisons of a/N against interval endpoints p/q reduce to the sign
    of a q - N p, so no Fraction objects are built on this path.
    """
    hits = []
    if k == 1:
        if 2 * a > N:
            hits.append(1)  # I(1, 1) = (1/2, 1)
            base = a // (N - a)
            for m in range(max(1, base - 1), base + 2):
                if m == 1:
                    # I'(1, 1) = (1/2, 2/3)
                    if 2 * a > N and 3 * a < 2 * N:
                        hits.append(1)
                elif m * N <= a * (m + 1) and a * (m + 2) < (m + 1) * N:
                    hits.append(m)  # I'(1, m) = [m/(m+1), (m+1)/(m+2))
        else:
            base = N // a
            for m in range(max(2, base - 1), base + 2):
                # I(1, m) = (1/(m+1), 1/m]
                if a * (m + 1) > N and a * m <= N:
                    hits.append(m)
        return tuple(hits)
    ps, qs, ps1, qs1 = prefix_convergents(b, k)
    denom = a * qs - N * ps
    if denom == 0:
        return ()
    t_num = N * ps1 - a * qs1
    base = t_num // denom
    for m in range(max(1, base - 1), max(1, base) + 2):
        c1 = a * (m * qs + qs1) - N * (m * ps + ps1)
        c2 = a * ((m + 1) * qs + qs1) - N * ((m + 1) * ps + ps1)
        if (c1 > 0 > c2) or (c1 < 0 < c2) or (c1 == 0 and m > 1):
            hits.append(m)
    base = (-t_num) // denom - 1
    for m in range(max(1, base - 1), max(1, base) + 2):
        c1 = a * ((m + 1) * qs - qs1) - N * ((m + 1) * ps - ps1)
        c2 = a * ((m + 2) * qs - qs1) - N * ((m + 2) * ps - ps1)
        if (c1 > 0 > c2) or (c1 < 0 < c2) or (c1 == 0 and m > 1):
            hits.append(m)
    return tuple(hits)


def weight_eval(b: int, k: int, x, f: WeightFn, w: Window) -> Rational:
    """w_{f,eta,theta}(b/k, x): weighted indicator sum over both families."""
    total: Rational = 0
    for m in weight_hits(b, k, x):
        if w.contains(m):
            total += f(m)
    return total


def _candidate_numerators(a: int, N: int, k: int) -> Iterable[int]:
    # Both interval families around b/k live within 1/k^2 of b/k, so only
    # numerators b with |a k - b N| <= N/k can contribute.
    b0 = (a * k) // N
    for b in range(max(1, b0 - 1), min(k, b0 + 2) + 1):
        if math.gcd(b, k) == 1:
            yield b


def weight_row_at(a: int, N: int, k: int, f: WeightFn, w: Window) -> Rational:
    """Sum of w(b/k, a/N) over b in Z_k*."""
    total: Rational = 0
    for b in _candidate_numerators(a, N, k):
        for m in _hits_at_fraction(b, k, a, N):
            if w.contains(m):
                total += f(m)
    return total


def counting_identity_check(frac: ReducedFraction, A: Iterable[int],
                            f: WeightFn, w: Window) -> bool:
    """Exact check of the prefix-restricted digit-count identity.

    Left side: sum of f(a_i) over digits in the window whose preceding
    convergent denominator q_{i-1} lies in A.  Right side: the weight sums
    over all prefixes b/k with k in A, evaluated at a/N.
    """
    digits = cf_digits(frac.a, frac.N)
    conv = convergents_of(digits)
    f.validate_on(w, max_digit=frac.N)
    moduli = set(A)
    lhs: Rational = 0
    for i, d in enumerate(digits, start=1):
        if conv[i - 1][1] in moduli and w.contains(d):
            lhs += f(d)
    rhs: Rational = 0
    for k in moduli:
        rhs += weight_row_at(frac.a, frac.N, k, f, w)
    return lhs == rhs


def row_sum(N: int, k: int, f: WeightFn, w: Window) -> Fraction:
    """W_{k,f}: the weight row averaged over a in Z_N*, exact."""
    if not 1 <= k <= N - 1:
        raise InvalidWindow(f"need 1 <= k <= N-1, got k={k}, N={N}")
    total: Rational = 0
    count = 0
    for a in range(1, N):
        if math.gcd(a, N) == 1:
            count += 1
            total += weight_row_at(a, N, k, f, w)
    return Fraction(total) / count


def integral_row(k: int, f: WeightFn, w: Window) -> tuple[Fraction, float]:
    """(exact, main_term) for the integral of the weight row over [0, 1].

    exact sums the closed-form interval measures over b in Z_k*;
    main_term is (2 phi(k)/k^2) * sum f(m) log(1 + 1/(m(m+2))).
    """
    theta = w.finite_theta()
    f.validate_on(w)
    exact = Fraction(0)
    phi_k = 0
    if k == 1:
        phi_k = 1
        for m in range(w.eta, theta + 1):
            exact += Fraction(f(m)) * (measure_I(1, 1, m) + measure_Iprime(1, 1, m))
    else:
        for b in range(1, k):
            if math.gcd(b, k) != 1:
                continue
            phi_k += 1
            _, qs, _, qs1 = prefix_convergents(b, k)
            for m in range(w.eta, theta + 1):
                exact += Fraction(f(m)) * (
                    Fraction(1, (m * qs + qs1) * ((m + 1) * qs + qs1))
                    + Fraction(1, ((m + 1) * qs - qs1) * ((m + 2) * qs - qs1)))
    main = (2 * phi_k / k ** 2) * sum(
        float(f(m)) * math.log1p(1 / (m * (m + 2)))
        for m in range(w.eta, theta + 1))
    return exact, main


def bijection_identity_check(k: int, f: WeightFn, w: Window) -> bool:
    """Exact identity behind the row integral: b -> q_{s-1} is a bijection.

    Compares the summed closed-form measures against the same sum written
    with q_{s-1}/k replaced by a fresh b/k running over Z_k*.
    """
    if k < 2:
        raise NotCoprime("bijection identity needs k >= 2")
    theta = w.finite_theta()
    lhs, _ = integral_row(k, f, w)
    rhs = Fraction(0)
    for m in range(w.eta, theta + 1):
        fm = Fraction(f(m))
        if fm == 0:
            continue
        acc = Fraction(0)
        for b in range(1, k):
            if math.gcd(b, k) != 1:
                continue
            bk = Fraction(b, k)
            acc += 1 / ((m + bk) * (m + 1 + bk)) + 1 / ((m + 1 - bk) * (m + 2 - bk))
        rhs += fm / k ** 2 * acc
    return lhs == rhs


def weight_step_pieces(b: int, k: int, f: WeightFn, w: Window) -> list[tuple[IntervalQ, Rational]]:
    """The weight function as (interval, value) pieces for step-function use."""
    theta = w.finite_theta()
    f.validate_on(w)
    pieces = []
    for m in range(w.eta, theta + 1):
        v = f(m)
        if v:
            pieces.append((interval_I(b, k, m), v))
            pieces.append((interval_Iprime(b, k, m), v))
    return pieces
