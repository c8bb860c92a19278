"""Seeded generators shared by the test modules (numpy PCG64)."""

from __future__ import annotations

import numpy as np

from morreyseq import SparseSequence, Weight

P_GRID = (0.5, 1.0, 2.0)


def rng_for(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def gp_weight(rng: np.random.Generator, d: int, p: float, *, max_head: int = 5, unbounded: bool | None = None) -> Weight:
    """A normalized G_p weight; ratios and tail exponent hit their endpoints now and then."""
    a = d / p
    K = int(rng.integers(0, max_head + 1))
    head = [1.0]
    for _ in range(K):
        u = rng.random()
        if u < 0.15:
            step = 0.0
        elif u < 0.3:
            step = a
        else:
            step = rng.uniform(0.0, a)
        head.append(head[-1] * 2.0**step)
    u = rng.random()
    if u < 0.15:
        e = 0.0
    elif u < 0.3:
        e = a
    else:
        e = float(rng.uniform(0.0, a))
    if unbounded is True and e == 0.0:
        e = float(rng.uniform(0.1, 1.0)) * a
    if unbounded is False:
        e = 0.0
    return Weight(d, tuple(head), e, normalized=True)


def raw_weight(rng: np.random.Generator, d: int, p: float, *, max_head: int = 6) -> Weight:
    """A non-trivial weight with an arbitrary (possibly non-monotone) head."""
    while True:
        K = int(rng.integers(1, max_head + 1))
        head = rng.uniform(0.05, 4.0, size=K + 1)
        if rng.random() < 0.2:
            head[rng.integers(0, K + 1)] = 0.0
        if head.max() == 0:
            continue
        e = 0.0 if rng.random() < 0.2 else float(rng.uniform(0.0, d / p))
        return Weight(d, tuple(float(v) for v in head), e)


def sparse_sequence(rng: np.random.Generator, d: int, *, span: int = 64, max_len: int = 12) -> SparseSequence:
    """Support in ``[-span, span]^d``; sometimes clustered, sometimes spread."""
    n = int(rng.integers(1, max_len + 1))
    if rng.random() < 0.4:
        centre = rng.integers(-span, span + 1, size=d)
        pts = np.clip(centre + rng.integers(-4, 5, size=(n, d)), -span, span)
    else:
        pts = rng.integers(-span, span + 1, size=(n, d))
    vals = rng.normal(size=n) * np.exp(rng.normal(size=n))
    return SparseSequence(d, {tuple(int(c) for c in k): float(v) for k, v in zip(pts, vals)})
