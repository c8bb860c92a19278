import math

import pytest
from corpus import P_GRID, gp_weight, raw_weight, rng_for
from hypothesis import given, settings
from hypothesis import strategies as st

from morreyseq import Weight
from morreyseq.errors import NotGp, NotInAnyGp, NotNormalized, TrivialSpace
from morreyseq.weights import (
    SpaceParams,
    classify_space,
    is_gp,
    is_nontrivial,
    limits,
    r_phi,
    regularize,
    require_gp,
)

SQRT2 = math.sqrt(2.0)


def test_eval_tail_and_power():
    assert Weight(1, (1, 2), 1.0).eval(3) == 8.0
    assert Weight(1, (1,), 0.0).eval(17) == 1.0
    w = Weight(1, (1, SQRT2, 2), 0.5)
    p = Weight.power(1, 2.0)
    for k in range(10):
        assert w.eval(k) == pytest.approx(2 ** (k / 2), rel=1e-14)
        assert p.eval(k) == pytest.approx(2 ** (k / 2), rel=1e-14)


def test_scaled_does_not_overflow():
    w = Weight.power(1, 1.0)
    assert w.scaled(5000, 1.0) == 1.0
    assert Weight.power(2, 3.0).scaled(4000, 1.0) == 0.0


def test_validation():
    with pytest.raises(ValueError):
        Weight(1, ())
    with pytest.raises(ValueError):
        Weight(1, (0.0, 0.0))
    with pytest.raises(ValueError):
        Weight(1, (1.0,), -1.0)
    with pytest.raises(NotNormalized):
        Weight(1, (2.0,), normalized=True)
    with pytest.raises(ValueError):
        SpaceParams(Weight.power(1, 2), 0.0)


def test_serialization_round_trip():
    w = Weight(2, (1.0, 1.3, 2.0000000000000004), 0.7, normalized=True)
    assert Weight.from_dict(w.to_dict()) == w
    s = SpaceParams(w, 1.5)
    assert SpaceParams.from_dict(s.to_dict()) == s
    with pytest.raises(ValueError):
        SpaceParams.from_dict(w.to_dict())


def test_is_gp_examples():
    w = Weight.power(1, 2.0)
    assert is_gp(w, 1.0)
    assert not is_gp(w, 3.0)
    assert not is_gp(Weight(1, (1.0, 0.5)), 1.0)
    assert is_gp(Weight.power(1, 2.0), 2.0)


def test_r_phi_examples():
    assert r_phi(Weight.power(1, 2.0)) == pytest.approx(2.0, rel=1e-14)
    assert r_phi(Weight.constant(3)) == math.inf
    w = Weight(1, (1.0, 2**0.5, 2**0.75), 0.25)
    assert r_phi(w) == pytest.approx(2.0, rel=1e-14)
    with pytest.raises(NotInAnyGp):
        r_phi(Weight(1, (1.0, 0.5)))


def test_r_phi_is_threshold_of_is_gp():
    rng = rng_for(11)
    for _ in range(100):
        w = gp_weight(rng, int(rng.integers(1, 3)), float(rng.choice(P_GRID)))
        r = r_phi(w)
        if r == math.inf:
            assert is_gp(w, 1e6)
            continue
        assert is_gp(w, r)
        assert not is_gp(w, r * 1.001)


def test_nontriviality():
    assert is_nontrivial(Weight(1, (1.0,), 1.0), 1.0)
    assert not is_nontrivial(Weight(1, (1.0,), 1.1), 1.0)
    assert is_nontrivial(Weight.power(1, 2.0), 1.0)
    assert is_nontrivial(Weight(1, (1.0, 0.0), 50.0), 1.0)  # vanishing tail


def test_limits():
    assert limits(Weight.power(1, 1.0), 1.0) == (1.0, math.inf)
    assert limits(Weight.constant(1), 1.0) == (0.0, 1.0)
    assert limits(Weight.power(1, 2.0), 1.0) == (0.0, math.inf)
    assert limits(Weight(1, (1.0,), 2.0), 1.0)[0] == math.inf


def test_regularize_examples():
    r = regularize(Weight(1, (1.0, 0.5, 2.0)), 1.0)
    assert r.head == (1.0, 1.0, 2.0) and r.tail_exponent == 0.0
    z = regularize(Weight(1, (0.0, 0.0, 1.0)), 1.0)
    assert z.head == (0.25, 0.5, 1.0)
    assert is_gp(z, 1.0)
    w = Weight.power(1, 2.0)
    assert regularize(w, 1.0) == w
    with pytest.raises(TrivialSpace):
        regularize(Weight(1, (1.0,), 2.0), 1.0)


def test_regularize_extends_head_for_growing_tail():
    w = Weight(1, (1.0, 9.0, 2.0), 0.5)
    r = regularize(w, 1.0)
    assert is_gp(r, 1.0)
    assert r.K > w.K


def test_classify():
    c = classify_space(Weight.constant(1), 1.0)
    assert c.equals_linf and not c.equals_lp and c.comparable_with_c0 == "superset-equal-linf"
    c = classify_space(Weight.power(2, 1.0), 1.0)
    assert c.equals_lp and c.separable and c.comparable_with_c0 == "subset-equal-lp"
    c = classify_space(Weight.power(1, 2.0), 1.0)
    assert not c.equals_lp and not c.equals_linf and not c.separable
    assert c.comparable_with_c0 == "incomparable"
    with pytest.raises(NotGp):
        classify_space(Weight(1, (1.0, 0.5)), 1.0)


def test_require_gp_normalization():
    with pytest.raises(NotNormalized):
        require_gp(Weight(1, (2.0, 2.0)), 1.0)
    require_gp(Weight(1, (2.0, 2.0)), 1.0, normalized=False)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from(P_GRID), st.integers(1, 2))
def test_regularize_output_is_gp_and_idempotent(seed, p, d):
    w = raw_weight(rng_for(seed), d, p)
    r = regularize(w, p)
    assert is_gp(r, p)
    assert regularize(r, p) == r
