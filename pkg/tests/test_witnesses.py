
import pytest
from corpus import gp_weight, rng_for

from morreyseq import Weight, norm_lp, norm_mps
from morreyseq.errors import BoundedWeight, LimitPositive, NotContinuous, QuasiBanachUnsupported
from morreyseq.oracle import oracle_norm
from morreyseq.witnesses import (
    blocks_disjoint,
    c0_counterexample,
    char_norm_closed_form,
    char_sequence,
    embedding_failure_witness,
    lambda_E,
    linf_copy,
    pairwise_distances,
    proper_subspace_witness,
    spike_sequence,
    ss_demo,
    verify,
)

W2 = Weight.power(1, 2.0)


def test_char_sequence_examples():
    b = char_sequence(W2, 1.0, 0)
    assert len(b.sequence) == 1 and norm_mps(b.sequence, W2, 1.0).value == 1.0
    b = char_sequence(W2, 1.0, 2)
    assert b.certificate.bound == 2.0 and norm_mps(b.sequence, W2, 1.0).value == 2.0
    raw = Weight(1, (1.0, 3.0, 1.5))
    b = char_sequence(raw, 1.0, 1)
    # phi^+ = 3 at level 1; phi^* = max(3, 1.5/2)
    assert b.certificate.bound == 3.0
    assert norm_mps(b.sequence, raw, 1.0).value == pytest.approx(oracle_norm(b.sequence, raw, 1.0), rel=1e-12)
    assert all(verify(b, raw, 1.0).values())


def test_char_closed_form_star_side():
    w = Weight(1, (1.0, 1.0, 8.0))
    # k0 = 0: level-2 cube holds the single cell, 8 * 2^{-2} = 2 wins
    assert char_norm_closed_form(w, 1.0, 0) == 2.0


def test_c0_counterexample():
    b = c0_counterexample(W2, 1.0, 1)
    assert len(b.sequence) == 1
    prev = 0.0
    for L in range(1, 9):
        b = c0_counterexample(W2, 1.0, L)
        assert all(verify(b, W2, 1.0).values())
        assert b.certificate.bound > prev
        prev = b.certificate.bound
    assert max(abs(v) for _, v in b.sequence) == 1.0  # entries shrink, first block has height 1
    with pytest.raises(BoundedWeight):
        c0_counterexample(Weight.constant(1), 1.0, 3)


def test_spike_sequence():
    b = spike_sequence(W2, 1.0, 1)
    assert norm_mps(b.sequence, W2, 1.0).value == 1.0
    for L in range(1, 11):
        b = spike_sequence(W2, 1.0, L)
        assert all(verify(b, W2, 1.0).values())
        assert b.certificate.bound <= 1.0 + 1e-12
    with pytest.raises(LimitPositive):
        spike_sequence(Weight.power(1, 1.0), 1.0, 3)


def test_lambda_E():
    assert len(lambda_E(W2, 1.0, [], 4).sequence) == 0
    fam = [[1, 3], [2], [1, 2, 3], [4]]
    D = pairwise_distances(W2, 1.0, fam, 4)
    for i in range(len(fam)):
        for j in range(len(fam)):
            if i != j:
                assert D[i][j] >= 1.0
    with pytest.raises(ValueError):
        lambda_E(W2, 1.0, [5], 4)


def test_proper_subspace():
    b = proper_subspace_witness(W2, 1.0, 1)
    assert list(b.sequence.entries.values()) == [1.0]
    assert norm_mps(b.sequence, W2, 1.0).value == 1.0
    for J in range(1, 6):
        b = proper_subspace_witness(W2, 1.0, J)
        assert norm_mps(b.sequence, W2, 1.0).value <= 2.0
        assert blocks_disjoint(b.meta["n"], J)
        nus = b.meta["nu"]
        assert all(nu > j for j, nu in enumerate(nus)) and nus == sorted(set(nus))


def test_linf_copy():
    assert norm_mps(linf_copy(W2, 1.0, [1.0]).sequence, W2, 1.0).value == 1.0
    assert norm_mps(linf_copy(W2, 1.0, [1.0, 1.0, 1.0]).sequence, W2, 1.0).value == 1.0
    assert norm_mps(linf_copy(W2, 1.0, [0.3, 2.0, 0.7]).sequence, W2, 1.0).value == 2.0


def test_ss_demo():
    b = ss_demo(W2, 1.0, 1, 0.5)
    assert norm_mps(b.sequence, W2, 1.0).value == 1.0 and norm_lp(b.sequence, 1.0) == 1.0
    b = ss_demo(W2, 1.0, 4, 0.5)
    assert all(verify(b, W2, 1.0).values())
    ratios = []
    for n in (1, 2, 4, 8):
        s = ss_demo(W2, 1.0, n).sequence
        ratios.append(norm_mps(s, W2, 1.0).value / norm_lp(s, 1.0))
    assert all(a > b for a, b in zip(ratios, ratios[1:]))
    with pytest.raises(QuasiBanachUnsupported):
        ss_demo(Weight.power(1, 1.0), 0.5, 2)
    with pytest.raises(LimitPositive):
        ss_demo(Weight.power(1, 1.0), 1.0, 2)


def test_ss_demo_shells_nested():
    b = ss_demo(Weight.power(2, 3.0), 1.5, 5)
    levels = b.meta["levels"]
    assert all(b2 >= b1 + 2 for b1, b2 in zip(levels, levels[1:]))
    assert all(verify(b, Weight.power(2, 3.0), 1.5).values())


def test_embedding_failure():
    bundles = embedding_failure_witness(Weight.power(1, 4.0), 1.0, W2, 1.0, 6)
    for ell, b in enumerate(bundles, start=1):
        assert norm_mps(b.sequence, Weight.power(1, 4.0), 1.0).value == pytest.approx(1.0, rel=1e-12)
        assert norm_mps(b.sequence, W2, 1.0).value >= ell
    bundles = embedding_failure_witness(Weight.power(1, 2.0), 1.0, Weight.power(1, 2.5), 2.0, 5)
    c = bundles[0].meta["constant"]
    for ell, b in enumerate(bundles, start=1):
        assert norm_mps(b.sequence, Weight.power(1, 2.0), 1.0).value == pytest.approx(1.0, rel=1e-12)
        assert norm_mps(b.sequence, Weight.power(1, 2.5), 2.0).value >= c * ell
    with pytest.raises(NotContinuous):
        embedding_failure_witness(W2, 1.0, W2, 1.0, 2)


def test_generators_are_deterministic():
    rng = rng_for(61)
    for _ in range(10):
        w = gp_weight(rng, 1, 1.0, unbounded=True)
        if w.tail_exponent >= 1.0:
            continue
        assert proper_subspace_witness(w, 1.0, 3).sequence == proper_subspace_witness(w, 1.0, 3).sequence
        assert spike_sequence(w, 1.0, 5).sequence == spike_sequence(w, 1.0, 5).sequence
