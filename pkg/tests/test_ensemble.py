import math
from fractions import Fraction

import pytest

from cfq.core import ReducedFraction, WeightFn, Window
from cfq.ensemble import (StatSpec, constants, digit_histogram,
                          enumerate_coprime, euler_phi, mu_window,
                          panov_mean_report, scan, thm_harness)
from cfq.errors import InvalidSpec, LimitExceeded
from cfq.weight import weight_row_at


def test_enumerate_coprime():
    assert [f.a for f in enumerate_coprime(6)] == [1, 5]
    assert [f.a for f in enumerate_coprime(12)] == [1, 5, 7, 11]
    assert [f.a for f in enumerate_coprime(7)] == list(range(1, 7))


def test_euler_phi():
    assert euler_phi(1) == 1
    for N in range(2, 300):
        assert euler_phi(N) == sum(1 for a in range(1, N + 1)
                                   if math.gcd(a, N) == 1)


def test_spec_validation():
    with pytest.raises(InvalidSpec):
        StatSpec("bogus")
    with pytest.raises(InvalidSpec):
        StatSpec("L", b=3, c=1)
    with pytest.raises(InvalidSpec):
        StatSpec("restricted")


def test_scan_hand_examples():
    s = scan(10, StatSpec("S"))
    assert s.sum_scaled == 32 and s.mean == 8.0 and s.phi == 4
    assert scan(3, StatSpec("M")).mean == 2.5
    assert scan(2, StatSpec("S")).mean == 2.0
    assert scan(10, StatSpec("L", b=1, c=1)).exact_mean == Fraction(1, 2)


def test_scan_limit():
    with pytest.raises(LimitExceeded):
        scan(1 << 62, StatSpec("S"))


def test_scan_tail_example():
    t = 9 / math.log(10)
    s = scan(10, StatSpec("M"), thresholds=[t])
    assert s.tail_fraction(t) == 0.5  # M values 10, 3, 3, 9


def test_scan_determinism_across_workers():
    for spec in (StatSpec("S"), StatSpec("D"),
                 StatSpec("restricted", f=WeightFn.identity(), eta=1, theta=4)):
        one = scan(1009, spec, thresholds=[2.0, 4.0], absolute=True,
                   workers=1, with_histogram=True)
        eight = scan(1009, spec, thresholds=[2.0, 4.0], absolute=True,
                     workers=8, with_histogram=True)
        assert one.sum_scaled == eight.sum_scaled
        assert one.sumsq_scaled == eight.sumsq_scaled
        assert one.tail_counts == eight.tail_counts
        assert one.histogram == eight.histogram


def test_variance_nonnegative_and_exact():
    s = scan(101, StatSpec("S"))
    assert s.exact_variance >= 0
    values = []
    for a in range(1, 101):
        if math.gcd(a, 101) == 1:
            from cfq.core import cf_digits
            values.append(sum(cf_digits(a, 101)))
    mean = Fraction(sum(values), len(values))
    var = Fraction(sum(v * v for v in values), len(values)) - mean * mean
    assert s.exact_mean == mean and s.exact_variance == var


def test_scan_sum_matches_weight_identity():
    # identity (10) summed over the full modulus set gives the plain digit sum
    w = Window(1, 120)
    f = WeightFn.identity()
    for N in (30, 47, 120):
        total = 0
        for a in range(1, N):
            if math.gcd(a, N) == 1:
                total += sum(weight_row_at(a, N, k, f, Window(1, N))
                             for k in range(1, N))
        assert total == scan(N, StatSpec("S")).sum_scaled


def test_dedekind_scan_consistency():
    from cfq.dedekind import dedekind_bh
    s = scan(101, StatSpec("D"))
    brute = sum(dedekind_bh(ReducedFraction(a, 101)) for a in range(1, 101))
    assert Fraction(s.sum_scaled, s.scale) == brute
    # antisymmetry makes the ensemble mean vanish
    assert s.sum_scaled == 0


def test_digit_histogram_example():
    h = digit_histogram(10, 10)
    assert h["counts"][3] == 3
    assert h["counts"][9] == 1 and h["counts"][10] == 1
    assert h["overflow"] == 0
    assert abs(h["target"][1] - 0.415037) < 1e-5
    # digits above the cutoff are tallied separately
    assert digit_histogram(10, 5)["overflow"] == 2


def test_digit_histogram_counts_match_L_scan():
    for N in (101, 1009):
        h = digit_histogram(N, 6)
        for m in range(1, 7):
            assert h["counts"][m] == scan(N, StatSpec("L", b=m, c=m)).sum_scaled


def test_constants_examples():
    tc = constants(WeightFn.identity(), Window(1, 2), 1, 1)
    expected_A = (12 / math.pi ** 2) * (math.log(4 / 3) + 2 * math.log(9 / 8))
    assert abs(tc.A - expected_A) < 1e-12
    assert abs(tc.B - (tc.A + 1)) < 1e-12
    assert abs(tc.C - 10 / tc.B) < 1e-12
    assert min(tc.A, tc.B, tc.C, tc.D, tc.Dprime, tc.Xi, tc.mu) > 0
    one = constants(WeightFn.one(), Window(2, 5), 1, 1)
    assert abs(one.Xi - (2 / 6 + 2 / 42)) < 1e-12
    assert abs(mu_window(1, 1) - 0.3498) < 5e-4
    with pytest.raises(ZeroDivisionError):
        constants(WeightFn.from_table([0, 0], start=1), Window(1, 2), 1, 1)


def test_harness_shapes():
    r = thm_harness(10007, "T3", b=1, c=1)
    assert r["ok"] and abs(r["ratio"] - 1) <= 0.10
    r = thm_harness(10007, "T2", [2.0, 4.0])
    assert r["monotone"]
    r = thm_harness(10007, "T1", [8.0, 16.0])
    assert all(row["product"] <= 3 for row in r["rows"])
    r = thm_harness(10007, "T4", [8.0, 16.0])
    assert all(row["product"] <= 3 for row in r["rows"])
    with pytest.raises(InvalidSpec):
        thm_harness(10007, "T9")


def test_tail_monotone_in_t():
    s = scan(10007, StatSpec("M"), thresholds=[1.0, 2.0, 4.0, 8.0])
    fr = [s.tail_fraction(t) for t in (1.0, 2.0, 4.0, 8.0)]
    assert fr == sorted(fr, reverse=True)


def test_panov_example():
    r = panov_mean_report(10)
    assert r["exact_mean"] == 8
    assert abs(r["target"] - 3.224) < 5e-3
    assert abs(r["ratio"] - 2.48) < 0.02
