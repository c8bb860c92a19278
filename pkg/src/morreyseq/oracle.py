"""Brute-force reference computations for small instances.

Nothing here reuses the fast paths in :mod:`morreyseq.norms` or
:mod:`morreyseq.finite_dim`: the defining suprema are transcribed literally,
cube by cube, with membership decided by the containment inequality
``2^j m_i <= k_i < 2^j (m_i + 1)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded
from .lattice import DyadicCube, ancestor, orthant, unit_cubes_in

from .weights import Weight


@dataclass(frozen=True)
class OracleConfig:
    """Enumeration limits; ``j_max=None`` derives the depth from the support."""

    j_max: int | None = None
    subset_budget: int = 1 << 16
    random_trials: int = 2000
    seed: int = 0


def _prefactor(weight: Weight, j: int, p: float) -> float:
    """``phi(2^j) 2^{-jd/p}``, through logarithms once past the head."""
    K = len(weight.head) - 1
    d = weight.dim
    if j <= K:
        return weight.head[j] * 2.0 ** (-j * d / p)
    if weight.head[K] == 0.0:
        return 0.0
    log2_val = math.log2(weight.head[K]) + (j - K) * weight.tail_exponent - j * d / p
    return 2.0 ** log2_val


def _cube_value(entries: dict, cube: DyadicCube, weight: Weight, p: float) -> float:
    total = 0.0
    for k, v in entries.items():
        if cube.contains(k):
            total += abs(v) ** p
    return _prefactor(weight, cube.level, p) * total ** (1.0 / p)


def _default_depth(entries: dict) -> int:
    span = max((abs(c) for k in entries for c in k), default=0)
    return span.bit_length() + 1


def oracle_norm(seq, weight: Weight, p: float, config: OracleConfig = OracleConfig()) -> float:
    """``||seq | m_{phi,p}||`` by enumerating every cube up to ``j_max``.

    Above ``j_max`` each orthant's support must sit in one cube (checked);
    the cube sums are then frozen and only the prefactor moves.  Levels are
    enumerated through the end of the weight's head, after which the
    prefactor is geometric, so the tail supremum is infinite or already seen.
    """
    entries = seq.entries
    if not entries:
        return 0.0
    j_max = _default_depth(entries) if config.j_max is None else config.j_max
    top = {ancestor(k, j_max) for k in entries}
    if len(top) != len({orthant(k) for k in entries}):
        raise BudgetExceeded(f"j_max = {j_max} is below the level where orthant parts merge")
    d = weight.dim
    if weight.head[-1] > 0 and weight.tail_exponent > d / p * (1 + 1e-12):
        return math.inf
    best = 0.0
    for j in range(max(j_max, len(weight.head) - 1) + 2):
        for cube in {ancestor(k, j) for k in entries}:
            best = max(best, _cube_value(entries, cube, weight, p))
    return best


def _finite_norm_naive(values: dict, weight: Weight, p: float, j: int, d: int) -> float:
    best = 0.0
    for nu in range(j + 1):
        for m in itertools.product(range(1 << (j - nu)), repeat=d):
            cube = DyadicCube(nu, m)
            total = sum(abs(values.get(k, 0.0)) ** p for k in unit_cubes_in(cube))
            val = _prefactor(weight, nu, p) * total ** (1.0 / p)
            best = max(best, val)
    return best


@dataclass(frozen=True)
class IndicatorSearch:
    value: float
    exhaustive: bool
    subsets_tried: int


def oracle_opnorm_indicators(
    w1: Weight, p1: float, w2: Weight, p2: float, j: int, config: OracleConfig = OracleConfig()
) -> IndicatorSearch:
    """Largest ``||1_S|m2|| / ||1_S|m1||`` over indicator sequences on ``Q_{-j,0}``.

    All ``2^{2^{jd}} - 1`` non-empty subsets when that fits ``subset_budget``,
    otherwise ``random_trials`` seeded random subsets.
    """
    d = w1.dim
    cells = unit_cubes_in(DyadicCube(j, (0,) * d))
    n = len(cells)
    exhaustive = n < 63 and (1 << n) <= config.subset_budget
    if exhaustive:
        masks = range(1, 1 << n)
        subsets = ([cells[i] for i in range(n) if mask >> i & 1] for mask in masks)
        count = (1 << n) - 1
    else:
        rng = np.random.default_rng(config.seed)
        draws = []
        for _ in range(config.random_trials):
            density = rng.uniform(0.0, 1.0)
            pick = rng.random(n) < density
            if not pick.any():
                pick[rng.integers(n)] = True
            draws.append([cells[i] for i in np.flatnonzero(pick)])
        subsets = iter(draws)
        count = len(draws)
    best = 0.0
    for subset in subsets:
        values = {k: 1.0 for k in subset}
        ratio = _finite_norm_naive(values, w2, p2, j, d) / _finite_norm_naive(values, w1, p1, j, d)
        best = max(best, ratio)
    return IndicatorSearch(best, exhaustive, count)


def oracle_opnorm_random(
    w1: Weight, p1: float, w2: Weight, p2: float, j: int, config: OracleConfig = OracleConfig()
) -> float:
    """Best ratio over seeded random non-negative real sequences on ``Q_{-j,0}``.

    Always a lower bound for ``||id_j||``.
    """
    d = w1.dim
    cells = unit_cubes_in(DyadicCube(j, (0,) * d))
    rng = np.random.default_rng(config.seed)
    best = 0.0
    for _ in range(config.random_trials):
        raw = rng.random(len(cells)) ** rng.uniform(0.2, 6.0)
        raw[rng.random(len(cells)) < rng.uniform(0.0, 0.9)] = 0.0
        if not raw.any():
            continue
        values = {k: float(v) for k, v in zip(cells, raw) if v > 0}
        ratio = _finite_norm_naive(values, w2, p2, j, d) / _finite_norm_naive(values, w1, p1, j, d)
        best = max(best, ratio)
    return best
