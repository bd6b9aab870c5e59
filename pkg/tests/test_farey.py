import math

import pytest

from cfq.ensemble import euler_phi
from cfq.errors import BadRange
from cfq.farey import (bd_tail, enumerate_farey, farey_count, hensley_tail,
                       vardi_sample)


def test_enumeration_examples():
    assert [(f.a, f.N) for f in enumerate_farey(3)] == [(1, 3), (1, 2), (2, 3)]
    assert [(f.a, f.N) for f in enumerate_farey(2)] == [(1, 2)]
    assert farey_count(5) == 9
    with pytest.raises(BadRange):
        list(enumerate_farey(1))


def test_count_identity():
    for Q in (2, 3, 10, 57, 200, 1000):
        assert farey_count(Q) == sum(euler_phi(n) for n in range(2, Q + 1))


def test_neighbor_property_and_order():
    prev = None
    for f in enumerate_farey(60):
        assert 1 <= f.a < f.N <= 60
        if prev is not None:
            assert f.a * prev.N - prev.a * f.N == 1
            assert f.a * prev.N > prev.a * f.N
        prev = f


def test_hensley_limit_values():
    _, lim = hensley_tail(50, 2.0)
    assert abs(lim - 0.4555) < 1e-4
    _, lim = hensley_tail(50, 1000.0)
    assert lim < 1e-2


def test_hensley_monotone_in_t():
    fr = [hensley_tail(120, t)[0] for t in (1.0, 2.0, 4.0, 8.0)]
    assert fr == sorted(fr, reverse=True)
    with pytest.raises(BadRange):
        hensley_tail(120, 0.0)
    with pytest.raises(BadRange):
        hensley_tail(2, 1.0)


def test_vardi_symmetry():
    r = vardi_sample(200)
    i = r.probes.index(0.0)
    # Dedekind antisymmetry pairs a with N - a
    assert abs(r.empirical_cdf[i] - 0.5) < 0.02
    assert abs(r.cauchy_cdf[r.probes.index(1.0)] - 0.75) < 1e-12
    assert 0 <= r.sup_distance <= 1


def test_bd_tail_trivials():
    frac, prod = bd_tail(120, 1e9)
    assert frac == 0 and prod == 0
    frac, _ = bd_tail(120, -1e9)
    assert frac == 1
