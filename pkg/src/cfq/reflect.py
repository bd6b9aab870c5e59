"""Digit-reversal bijections on the two halves of Z_N*.

For a <= N/2 the expansion starts with a_1 >= 2, so reversing the digit
list gives another canonical expansion with the same denominator.  For
a > N/2 the expansion starts with a_1 = 1 and the reversal goes through a
non-canonical rewrite: (1, a_2, ..., a_r) -> (1, a_2, ..., a_r - 1, 1),
reverse, then merge the trailing 1 into its predecessor.  Both maps are
involutions on their half, and the convergent denominators of a/N and
a*/N interlock so that matched products sum to N at every index.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ContinuedFraction, ReducedFraction, cf_digits, evaluate_digits, expand
from .errors import WrongHalf


@dataclass(frozen=True, slots=True)
class ReflectionRecord:
    source: ReducedFraction
    image: ReducedFraction
    half: str  # "lower" or "upper"


def reflect_lower(frac: ReducedFraction) -> ReducedFraction:
    """Image a* with a*/N = [0; a_r, ..., a_1]; requires a <= N/2."""
    if 2 * frac.a > frac.N:
        raise WrongHalf(f"{frac.a}/{frac.N} is in the upper half")
    digits = cf_digits(frac.a, frac.N)
    p, q = evaluate_digits(digits[::-1])
    assert q == frac.N
    return ReducedFraction(p, frac.N)


def reflect_upper(frac: ReducedFraction) -> ReducedFraction:
    """Image a* of the upper-half reflection; requires a > N/2."""
    if 2 * frac.a <= frac.N:
        raise WrongHalf(f"{frac.a}/{frac.N} is in the lower half")
    digits = cf_digits(frac.a, frac.N)
    # a > N/2 forces a_1 = 1 and r >= 2.
    rewritten = digits[:-1] + [digits[-1] - 1, 1]
    reversed_ = rewritten[::-1]
    canonical = reversed_[:-2] + [reversed_[-2] + 1]
    p, q = evaluate_digits(canonical)
    assert q == frac.N
    return ReducedFraction(p, frac.N)


def reflect(frac: ReducedFraction) -> ReflectionRecord:
    """Reflection record for either half of Z_N*."""
    if 2 * frac.a <= frac.N:
        return ReflectionRecord(frac, reflect_lower(frac), "lower")
    return ReflectionRecord(frac, reflect_upper(frac), "upper")


def verify_continuant_identity(frac: ReducedFraction) -> tuple[bool, list[tuple[int, int]]]:
    """Check the interlocking continuant identity at every admissible index.

    Lower half (a <= N/2), for 1 <= i <= r:
        q_i(a/N) q_{r-i}(a*/N) + q_{i-1}(a/N) q_{r-i-1}(a*/N) = N
    Upper half (a > N/2), for 2 <= i <= r-1, the a* index shifts by one:
        q_i(a/N) q_{r-i+1}(a*/N) + q_{i-1}(a/N) q_{r-i}(a*/N) = N

    q_{-1} = 0 throughout.  Returns (all_hold, [(i, lhs), ...]).
    """
    cf = expand(frac)
    r = cf.length
    N = frac.N
    lower = 2 * frac.a <= N

    def q(table: ContinuedFraction, i: int) -> int:
        return 0 if i < 0 else table.convergents[i][1]

    if lower:
        star = expand(reflect_lower(frac))
        indices = range(1, r + 1)
        witness = [(i, q(cf, i) * q(star, r - i) + q(cf, i - 1) * q(star, r - i - 1))
                   for i in indices]
    else:
        star = expand(reflect_upper(frac))
        indices = range(2, r)
        witness = [(i, q(cf, i) * q(star, r - i + 1) + q(cf, i - 1) * q(star, r - i))
                   for i in indices]
    return all(lhs == N for _, lhs in witness), witness
