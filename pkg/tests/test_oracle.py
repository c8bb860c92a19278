import math

import pytest
from corpus import P_GRID, gp_weight, rng_for, sparse_sequence

import morreyseq.oracle as oracle_mod
from morreyseq import SparseSequence, Weight
from morreyseq.errors import BudgetExceeded
from morreyseq.lattice import unit_cubes_in, DyadicCube
from morreyseq.oracle import OracleConfig, oracle_norm, oracle_opnorm_indicators, oracle_opnorm_random


def test_oracle_is_independent_of_fast_paths():
    src = open(oracle_mod.__file__, encoding="utf-8").read()
    assert "from .norms" not in src and "from .finite_dim" not in src


def test_single_entry_and_char():
    rng = rng_for(5)
    for _ in range(30):
        d = int(rng.integers(1, 3))
        p = float(rng.choice(P_GRID))
        w = gp_weight(rng, d, p)
        assert oracle_norm(SparseSequence(d, {(0,) * d: 1.0}), w, p) == pytest.approx(1.0, rel=1e-12)
        k0 = int(rng.integers(0, 4))
        ind = SparseSequence.indicator(unit_cubes_in(DyadicCube(k0, (0,) * d)), 1.0, d)
        assert oracle_norm(ind, w, p) == pytest.approx(w.eval(k0), rel=1e-12)


def test_depth_check():
    s = SparseSequence(1, {(0,): 1.0, (100,): 1.0})
    with pytest.raises(BudgetExceeded):
        oracle_norm(s, Weight.power(1, 2.0), 1.0, OracleConfig(j_max=3))
    assert oracle_norm(s, Weight.power(1, 2.0), 1.0, OracleConfig(j_max=7)) == 1.0


def test_trivial_space_diverges():
    assert oracle_norm(SparseSequence(1, {(0,): 1.0}), Weight(1, (1.0,), 2.0), 1.0) == math.inf


def test_indicator_search_same_space():
    w = Weight.power(1, 2.0)
    res = oracle_opnorm_indicators(w, 1.0, w, 1.0, 2)
    assert res.exhaustive and res.subsets_tried == 15
    assert res.value == pytest.approx(1.0, rel=1e-12)


def test_indicator_search_sampled_when_over_budget():
    w = Weight.power(1, 2.0)
    res = oracle_opnorm_indicators(w, 1.0, w, 1.0, 5, OracleConfig(random_trials=50))
    assert not res.exhaustive and res.subsets_tried == 50


def test_random_search_deterministic():
    w1, w2 = Weight.power(1, 2.0), Weight.power(1, 4.0)
    cfg = OracleConfig(random_trials=200, seed=9)
    assert oracle_opnorm_random(w1, 1.0, w2, 2.0, 3, cfg) == oracle_opnorm_random(w1, 1.0, w2, 2.0, 3, cfg)


def test_negative_orthants():
    rng = rng_for(17)
    for _ in range(20):
        s = sparse_sequence(rng, 2, span=8)
        assert oracle_norm(s, Weight.constant(2), 1.0) == pytest.approx(max(abs(v) for _, v in s), rel=1e-12)
