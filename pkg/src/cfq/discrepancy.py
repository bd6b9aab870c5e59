"""Exact one-dimensional discrepancy and a Koksma-type inequality check.

The supremum defining the extreme discrepancy runs over all subintervals
of the given range, with every combination of endpoint inclusion; since
the point masses are atoms, closed degenerate intervals [v, v] are
admissible and the supremum is always attained at intervals whose
endpoints are point values or range endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import Rational
from .errors import BadRange, BadSpec, EmptySet
from .weight import IntervalQ


@dataclass(frozen=True, slots=True)
class PointSet:
    """Sorted multiset of rational points in [0, 1]."""

    points: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if any(x < 0 or x > 1 for x in self.points):
            raise BadRange("points must lie in [0, 1]")

    @classmethod
    def from_values(cls, values: Iterable[Rational]) -> "PointSet":
        return cls(tuple(sorted(Fraction(v) for v in values)))

    @classmethod
    def reduced_fractions(cls, N: int) -> "PointSet":
        """The set {a/N : a in Z_N*} as points in (0, 1)."""
        if N < 2:
            raise BadRange(f"need N >= 2, got {N}")
        return cls(tuple(Fraction(a, N) for a in range(1, N)
                         if math.gcd(a, N) == 1))

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True, slots=True)
class DiscrepancyReport:
    value: Fraction
    witness: IntervalQ


def _count_le(points: Sequence[Fraction], x: Fraction) -> int:
    import bisect
    return bisect.bisect_right(points, x)


def _count_lt(points: Sequence[Fraction], x: Fraction) -> int:
    import bisect
    return bisect.bisect_left(points, x)


def star_discrepancy(ps: PointSet) -> DiscrepancyReport:
    """Sup over anchored intervals [0, t) of |count/M - t|, exact."""
    M = len(ps)
    if M == 0:
        raise EmptySet("star discrepancy needs at least one point")
    best = Fraction(-1)
    witness = None
    for i, x in enumerate(ps.points, start=1):
        over = Fraction(i, M) - x
        under = x - Fraction(i - 1, M)
        if over > best:
            best = over
            witness = IntervalQ(Fraction(0), x, True, True)
        if under > best:
            best = under
            witness = (IntervalQ(Fraction(0), x, True, False) if x > 0
                       else IntervalQ(Fraction(0), x, True, True))
    return DiscrepancyReport(best, witness)


def extreme_discrepancy(ps: PointSet, rng: IntervalQ) -> DiscrepancyReport:
    """Sup over all subintervals I of rng of |count(I)/M - measure(I)|.

    Two sweeps.  The excess side is maximized by a closed interval whose
    endpoints are point values inside rng; writing the objective as
    (C(<=v_j)/M - v_j) + (v_i - C(<v_i)/M) splits it into independent
    endpoint terms, so a prefix-max pass finds the best pair.  The deficit
    side is maximized by an open interval with endpoints among the point
    values and the range endpoints, split the same way.
    """
    M = len(ps)
    if M == 0:
        raise EmptySet("extreme discrepancy needs at least one point")
    if rng.lo < 0 or rng.hi > 1:
        raise BadRange(f"range {rng} not within [0, 1]")
    if rng.measure == 0:
        raise BadRange("range must have positive measure")
    pts = ps.points
    best = Fraction(-1)
    witness = None

    inside = sorted({x for x in pts if rng.contains(x)})
    if inside:
        # excess: closed [v_i, v_j], i <= j
        best_b = Fraction(-10)
        best_lo = None
        for v in inside:
            b = v - Fraction(_count_lt(pts, v), M)
            if b > best_b:
                best_b, best_lo = b, v
            a = Fraction(_count_le(pts, v), M) - v
            if a + best_b > best:
                best = a + best_b
                witness = IntervalQ(best_lo, v, True, True)

    # deficit: open (lo, hi)
    cands = sorted(set(inside) | {rng.lo, rng.hi})
    best_d = Fraction(-10)
    best_lo = None
    for v in cands:
        # the open interval needs lo < hi, so score hi = v against the best
        # lo seen strictly earlier before admitting v as a lo candidate
        if best_lo is not None:
            e = v - Fraction(_count_lt(pts, v), M)
            if e + best_d > best:
                best = e + best_d
                witness = IntervalQ(best_lo, v, False, False)
        d = Fraction(_count_le(pts, v), M) - v
        if d > best_d:
            best_d, best_lo = d, v
    return DiscrepancyReport(best, witness)


def reduced_fraction_discrepancy(N: int, rng: IntervalQ) -> DiscrepancyReport:
    """Extreme discrepancy of the reduced fractions a/N within rng."""
    return extreme_discrepancy(PointSet.reduced_fractions(N), rng)


class StepFn:
    """Rational step function given as (interval, value) pieces.

    Pieces may overlap; the value at a point is the sum over pieces that
    contain it.  This matches how the digit-counting weight is built from
    its two interval families.
    """

    __slots__ = ("pieces",)

    def __init__(self, pieces: Iterable[tuple[IntervalQ, Rational]]):
        checked = []
        for iv, v in pieces:
            if not isinstance(iv, IntervalQ):
                raise BadSpec("each piece needs an IntervalQ")
            if iv.lo < 0 or iv.hi > 1:
                raise BadSpec(f"piece {iv} not within [0, 1]")
            checked.append((iv, Fraction(v)))
        self.pieces = tuple(checked)

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        return sum((v for iv, v in self.pieces if iv.contains(x)),
                   start=Fraction(0))

    def integral(self) -> Fraction:
        return sum((v * iv.measure for iv, v in self.pieces),
                   start=Fraction(0))

    def support(self) -> IntervalQ | None:
        """Smallest closed interval outside which the function vanishes."""
        live = [iv for iv, v in self.pieces if v != 0]
        if not live:
            return None
        return IntervalQ(min(iv.lo for iv in live), max(iv.hi for iv in live),
                         True, True)

    def variation(self) -> Fraction:
        """Total variation on [0, 1], exact.

        A step function with rational breakpoints only varies at those
        breakpoints; evaluating at each breakpoint and at midpoints of the
        gaps between consecutive breakpoints captures every jump.
        """
        crit = sorted({e for iv, _ in self.pieces for e in (iv.lo, iv.hi)}
                      | {Fraction(0), Fraction(1)})
        total = Fraction(0)
        prev = self(crit[0])
        for lo, hi in zip(crit, crit[1:]):
            at_lo = self(lo)
            between = self((lo + hi) / 2)
            total += abs(at_lo - prev) + abs(between - at_lo)
            prev = between
        total += abs(self(crit[-1]) - prev)
        return total


def koksma_check(g: StepFn, ps: PointSet) -> bool:
    """|mean of g over ps - integral of g| <= V(g) * extreme discrepancy.

    The discrepancy is taken over the support of g; a zero function passes
    trivially.
    """
    M = len(ps)
    if M == 0:
        raise EmptySet("koksma check needs at least one point")
    supp = g.support()
    mean = sum((g(x) for x in ps.points), start=Fraction(0)) / M
    lhs = abs(mean - g.integral())
    if supp is None or supp.measure == 0:
        return lhs == 0
    disc = extreme_discrepancy(ps, supp).value
    return lhs <= g.variation() * disc
