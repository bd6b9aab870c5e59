"""Extremal fractions: minimal digit sum or maximal digit over Z_N*.

Small values of S(a/N) or M(a/N) mark good lattice points.  Both minima
are found by full enumeration of Z_N* so the records are exact; ties go
to the smallest numerator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadRange, LimitExceeded

#: Full enumeration only; beyond this denominator the scans refuse to run.
SEARCH_LIMIT = 10 ** 7


@dataclass(frozen=True)
class ExtremalRecord:
    N: int
    argmin_a: int
    min_value: int
    bound_value: float
    bound_holds: bool


def _check_N(N: int) -> None:
    if N < 2:
        raise BadRange(f"need N >= 2, got {N}")
    if N > SEARCH_LIMIT:
        raise LimitExceeded(f"search capped at N = {SEARCH_LIMIT}")


def min_sum(N: int) -> ExtremalRecord:
    """Minimum of S(a/N) over Z_N*, with the heuristic main-term bound.

    bound_value is (12/pi^2) ln N ln ln N; whether the minimum lies below
    it is reported, not asserted, since the accompanying O(ln N) term has
    an unspecified constant.
    """
    _check_N(N)
    best = None
    best_a = None
    for a in range(1, N):
        if math.gcd(a, N) != 1:
            continue
        num, den, s = a, N, 0
        while num:
            q, r = divmod(den, num)
            s += q
            den, num = num, r
        if best is None or s < best:
            best, best_a = s, a
    bound = (12 / math.pi ** 2) * math.log(N) * math.log(math.log(N)) \
        if N >= 3 else float("inf")
    return ExtremalRecord(N=N, argmin_a=best_a, min_value=best,
                          bound_value=bound, bound_holds=best <= bound)


def min_max_quotient(N: int) -> ExtremalRecord:
    """Minimum of M(a/N) over Z_N*; always at most 3 ln N."""
    _check_N(N)
    best = None
    best_a = None
    for a in range(1, N):
        if math.gcd(a, N) != 1:
            continue
        num, den, m = a, N, 0
        while num:
            q, r = divmod(den, num)
            if q > m:
                m = q
            den, num = num, r
        if best is None or m < best:
            best, best_a = m, a
    bound = 3 * math.log(N)
    assert best <= bound, (N, best, bound)
    return ExtremalRecord(N=N, argmin_a=best_a, min_value=best,
                          bound_value=bound, bound_holds=True)


def zaremba_scan(N_lo: int, N_hi: int, K: int) -> list[int]:
    """Denominators in [N_lo, N_hi] with no numerator keeping all digits <= K.

    Stops scanning a denominator at its first witness, so the common case
    (a witness exists) is fast; an empty result supports the conjectured
    bound K on the range.
    """
    if not 2 <= N_lo <= N_hi:
        raise BadRange(f"need 2 <= N_lo <= N_hi, got ({N_lo}, {N_hi})")
    if N_hi > SEARCH_LIMIT:
        raise LimitExceeded(f"search capped at N = {SEARCH_LIMIT}")
    bad = []
    for N in range(N_lo, N_hi + 1):
        found = False
        for a in range(1, N):
            if math.gcd(a, N) != 1:
                continue
            num, den = a, N
            ok = True
            while num:
                q, r = divmod(den, num)
                if q > K:
                    ok = False
                    break
                den, num = num, r
            if ok:
                found = True
                break
        if not found:
            bad.append(N)
    return bad
