"""Canonical continued-fraction expansion and per-fraction statistics.

Every fraction a/N handled here is reduced, with 1 <= a <= N-1 and N >= 2.
Expansions use the canonical form [0; a_1, ..., a_r] with a_r >= 2 (for
r >= 2; a single digit equals N and is always >= 2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import InvalidFraction, InvalidWeight, InvalidWindow, LimitExceeded

#: Denominators at or above this limit are rejected by the constructor so
#: that downstream consumers can rely on products q_i * q_{i-1} staying well
#: inside machine-word range in any 128-bit backend they may hand data to.
MAX_DENOMINATOR = 1 << 62

Rational = Union[int, Fraction]


@dataclass(frozen=True, slots=True)
class ReducedFraction:
    """A reduced fraction a/N with gcd(a, N) = 1 and 0 < a/N < 1."""

    a: int
    N: int

    def __post_init__(self) -> None:
        if self.N < 2:
            raise InvalidFraction(f"denominator must be >= 2, got {self.N}")
        if self.N >= MAX_DENOMINATOR:
            raise LimitExceeded(f"denominator {self.N} >= 2^62")
        if not 1 <= self.a <= self.N - 1:
            raise InvalidFraction(f"numerator {self.a} not in [1, {self.N - 1}]")
        if math.gcd(self.a, self.N) != 1:
            raise InvalidFraction(f"gcd({self.a}, {self.N}) != 1")

    def value(self) -> Fraction:
        return Fraction(self.a, self.N)


def cf_digits(a: int, N: int) -> list[int]:
    """Canonical partial quotients of a/N (assumes 0 < a < N, gcd = 1)."""
    digits = []
    num, den = a, N
    while num:
        q, r = divmod(den, num)
        digits.append(q)
        den, num = num, r
    return digits


def convergents_of(digits: Sequence[int]) -> list[tuple[int, int]]:
    """Convergent table (p_i, q_i), i = 0..r, with (p_0, q_0) = (0, 1)."""
    table = [(0, 1)]
    p0, q0 = 1, 0  # (p_{-1}, q_{-1})
    p1, q1 = 0, 1
    for d in digits:
        p0, q0, p1, q1 = p1, q1, d * p1 + p0, d * q1 + q0
        table.append((p1, q1))
    return table


def evaluate_digits(digits: Sequence[int]) -> tuple[int, int]:
    """Value (p, q) of [0; d_1, ..., d_r]; the list need not be canonical."""
    p0, q0, p1, q1 = 1, 0, 0, 1
    for d in digits:
        p0, q0, p1, q1 = p1, q1, d * p1 + p0, d * q1 + q0
    return p1, q1


@dataclass(frozen=True, slots=True)
class ContinuedFraction:
    """Digit list plus convergent table of one reduced fraction."""

    digits: tuple[int, ...]
    convergents: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.digits)

    @property
    def a(self) -> int:
        return self.convergents[-1][0]

    @property
    def N(self) -> int:
        return self.convergents[-1][1]

    def value(self) -> Fraction:
        return Fraction(self.a, self.N)


def expand(frac: ReducedFraction) -> ContinuedFraction:
    """Canonical expansion of a/N together with its convergent table."""
    digits = cf_digits(frac.a, frac.N)
    return ContinuedFraction(tuple(digits), tuple(convergents_of(digits)))


@dataclass(frozen=True, slots=True)
class Window:
    """Digit window [eta, theta]; theta=None means no upper cutoff."""

    eta: int
    theta: Optional[int] = None

    def __post_init__(self) -> None:
        if self.eta < 1:
            raise InvalidWindow(f"eta must be >= 1, got {self.eta}")
        if self.theta is not None and self.theta < self.eta:
            raise InvalidWindow(f"need eta <= theta, got ({self.eta}, {self.theta})")

    def contains(self, m: int) -> bool:
        if m < self.eta:
            return False
        return self.theta is None or m <= self.theta

    def finite_theta(self) -> int:
        if self.theta is None:
            raise InvalidWindow("operation requires a finite upper cutoff")
        return self.theta


class WeightFn:
    """Non-negative, non-decreasing weight f on digit values.

    Built-ins: constant one, identity, square.  Tabulated weights carry
    explicit values on a contiguous digit range and refuse queries outside
    it (no extrapolation).
    """

    __slots__ = ("kind", "table", "table_start")

    def __init__(self, kind: str, table: Optional[Sequence[Rational]] = None,
                 table_start: int = 1):
        if kind not in ("one", "identity", "square", "table"):
            raise InvalidWeight(f"unknown weight kind {kind!r}")
        if kind == "table":
            if not table:
                raise InvalidWeight("tabulated weight needs at least one value")
            vals = tuple(Fraction(v) for v in table)
            if any(v < 0 for v in vals):
                raise InvalidWeight("weight values must be non-negative")
            if any(u > v for u, v in zip(vals, vals[1:])):
                raise InvalidWeight("weight values must be non-decreasing")
            self.table = vals
            self.table_start = table_start
        else:
            self.table = None
            self.table_start = table_start
        self.kind = kind

    @classmethod
    def one(cls) -> "WeightFn":
        return cls("one")

    @classmethod
    def identity(cls) -> "WeightFn":
        return cls("identity")

    @classmethod
    def square(cls) -> "WeightFn":
        return cls("square")

    @classmethod
    def from_table(cls, values: Iterable[Rational], start: int = 1) -> "WeightFn":
        return cls("table", table=list(values), table_start=start)

    def __call__(self, m: int) -> Rational:
        if m < 1:
            raise InvalidWeight(f"weights are defined on positive digits, got {m}")
        if self.kind == "one":
            return 1
        if self.kind == "identity":
            return m
        if self.kind == "square":
            return m * m
        idx = m - self.table_start
        if not 0 <= idx < len(self.table):
            raise InvalidWeight(
                f"tabulated weight covers [{self.table_start}, "
                f"{self.table_start + len(self.table) - 1}], queried at {m}")
        return self.table[idx]

    def validate_on(self, window: Window, max_digit: Optional[int] = None) -> None:
        """Check non-negativity/monotonicity on the window (raises InvalidWeight).

        For windows without an upper cutoff the built-ins are monotone by
        construction; a tabulated weight must cover the window up to
        max_digit (the largest digit that can occur, i.e. N).
        """
        if self.kind != "table":
            return
        hi = window.theta if window.theta is not None else max_digit
        if hi is None:
            raise InvalidWeight("tabulated weight needs a finite window")
        end = self.table_start + len(self.table) - 1
        if window.eta < self.table_start or hi > end:
            raise InvalidWeight(
                f"tabulated weight covers [{self.table_start}, {end}], "
                f"window needs [{window.eta}, {hi}]")

    def __repr__(self) -> str:
        if self.kind == "table":
            return f"WeightFn.from_table({list(self.table)}, start={self.table_start})"
        return f"WeightFn({self.kind!r})"


def stat_sum(cf: ContinuedFraction) -> int:
    """S = sum of all partial quotients."""
    return sum(cf.digits)


def stat_max(cf: ContinuedFraction) -> int:
    """M = largest partial quotient."""
    return max(cf.digits)


def stat_count(cf: ContinuedFraction, b: int, c: int) -> int:
    """L_[b,c] = number of partial quotients in [b, c]."""
    if b < 1 or b > c:
        raise InvalidWindow(f"need 1 <= b <= c, got ({b}, {c})")
    return sum(1 for d in cf.digits if b <= d <= c)


def stat_alt(cf: ContinuedFraction) -> int:
    """Alternating sum of partial quotients, sum_i (-1)^i a_i."""
    total = 0
    for i, d in enumerate(cf.digits, start=1):
        total += -d if i % 2 else d
    return total


def restricted_sum(cf: ContinuedFraction, f: WeightFn, w: Window) -> Rational:
    """Sum of f(a_i) over digits with eta <= a_i <= theta."""
    f.validate_on(w, max_digit=cf.N)
    total: Rational = 0
    for d in cf.digits:
        if w.contains(d):
            total += f(d)
    return total


def even_odd_sums(cf: ContinuedFraction, w: Window) -> tuple[int, int]:
    """(S_e, S_o): windowed digit sums over even resp. odd indices (1-based)."""
    s_even = s_odd = 0
    for i, d in enumerate(cf.digits, start=1):
        if w.contains(d):
            if i % 2:
                s_odd += d
            else:
                s_even += d
    return s_even, s_odd
