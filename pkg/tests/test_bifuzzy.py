import numpy as np
import pytest
from hypothesis import given

from conftest import unit
from neutrosophic import (
    BifuzzyPair,
    ConstraintViolation,
    bifuzzy3,
    bifuzzy4_def,
    bifuzzy4_ign,
    bifuzzy5,
    check_partition,
    fuzzy3,
    ifs4,
    make_pair,
)

PAIR_OPS = [bifuzzy3, bifuzzy4_def, bifuzzy4_ign, bifuzzy5]


def approx(values):
    return pytest.approx(values, abs=1e-12)


class TestExamples:
    def test_fuzzy3(self):
        assert fuzzy3(1.0).components() == (1.0, 0.0, 0.0)
        assert fuzzy3(0.5).components() == (0.0, 1.0, 0.0)
        assert fuzzy3(0.75).components() == approx((0.5, 0.5, 0.0))

    def test_ifs4(self):
        v = ifs4(make_pair(0.5, 0.3))
        assert (v.t, v.v, v.u, v.f) == approx((0.2, 0.6, 0.2, 0.0))
        assert ifs4(make_pair(0, 0)).u == 1.0

    def test_ifs4_rejects_non_intuitionistic(self):
        with pytest.raises(ConstraintViolation):
            ifs4(make_pair(0.7, 0.5))

    def test_bifuzzy3(self):
        v = bifuzzy3(make_pair(0.6, 0.4))
        assert (v.t, v.w, v.f) == approx((0.4, 0.4, 0.2))
        assert bifuzzy3(make_pair(1, 0)).components() == (1.0, 0.0, 0.0)
        assert bifuzzy3(make_pair(0, 0)).w == 1.0

    def test_bifuzzy4_def(self):
        v = bifuzzy4_def(make_pair(0.7, 0.5))
        assert (v.t, v.f, v.u, v.o) == approx((0.5, 0.3, 0.0, 0.2))
        assert bifuzzy4_def(make_pair(1, 1)).o == 1.0
        assert bifuzzy4_def(make_pair(0, 0)).u == 1.0

    def test_bifuzzy4_ign(self):
        v = bifuzzy4_ign(make_pair(0.7, 0.5))
        assert (v.t, v.c, v.w, v.f) == approx((0.2, 0.5, 0.3, 0.0))
        assert bifuzzy4_ign(make_pair(1, 1)).c == 1.0
        assert bifuzzy4_ign(make_pair(0.5, 0.5)).components() == approx((0.0, 0.5, 0.5, 0.0))

    def test_bifuzzy5(self):
        v = bifuzzy5(make_pair(0.7, 0.5))
        assert (v.t, v.o, v.v, v.u, v.f) == approx((0.2, 0.2, 0.6, 0.0, 0.0))
        assert bifuzzy5(make_pair(0.5, 0.5)).v == 1.0
        assert bifuzzy5(make_pair(1, 0)).t == 1.0


def test_partitions_on_random_pairs(rng):
    mu, nu = rng.random((2, 10_000))
    pair = BifuzzyPair(mu, nu)
    for op in PAIR_OPS:
        assert check_partition(op(pair)), op.__name__
    assert check_partition(fuzzy3(mu))
    assert check_partition(ifs4(BifuzzyPair(mu, nu * (1 - mu))))


def test_exclusions(rng):
    mu, nu = rng.random((2, 10_000))
    pair = BifuzzyPair(mu, nu)
    f3 = fuzzy3(mu)
    assert np.max(np.abs(f3.t * f3.f)) <= 1e-12
    i4 = ifs4(BifuzzyPair(mu, nu * (1 - mu)))
    assert np.max(np.abs(i4.t * i4.f)) <= 1e-12
    ign = bifuzzy4_ign(pair)
    assert np.max(np.abs(ign.t * ign.f)) <= 1e-12
    dfn = bifuzzy4_def(pair)
    assert np.max(np.abs(dfn.u * dfn.o)) <= 1e-12
    five = bifuzzy5(pair)
    assert np.max(np.abs(five.u * five.o)) <= 1e-12
    assert np.max(np.abs(five.t * five.f)) <= 1e-12


@pytest.mark.parametrize("op", PAIR_OPS, ids=lambda op: op.__name__)
@given(mu=unit, nu=unit)
def test_mirror_swaps_truth_and_falsity(op, mu, nu):
    v = op(make_pair(mu, nu)).as_dict()
    m = op(make_pair(nu, mu)).as_dict()
    v["t"], v["f"] = v["f"], v["t"]
    assert m == v
