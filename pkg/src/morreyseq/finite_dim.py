"""Finite-dimensional Morrey spaces on the cube ``Q_{-j,0}``.

The space ``m^{2^{jd}}_{phi,p}`` consists of sequences indexed by the
``2^{jd}`` lattice points of ``Q_{-j,0}``; its norm is the Morrey supremum
restricted to dyadic sub-cubes of ``Q_{-j,0}``.  :func:`opnorm_id` evaluates
or brackets the norm of the identity between two such spaces.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, SupportOutOfRange
from .lattice import DyadicCube, Point
from .norms import SparseSequence
from .weights import REL_TOL, Weight, require_gp


@dataclass(frozen=True)
class FiniteSpaceParams:
    weight: Weight
    p: float
    level: int

    def __post_init__(self):
        if not (self.p > 0 and math.isfinite(self.p)):
            raise ValueError(f"p must lie in (0, inf), got {self.p}")
        if self.level < 0:
            raise ValueError("level must be non-negative")

    @property
    def dim(self) -> int:
        return self.weight.dim

    @property
    def size(self) -> int:
        return 1 << (self.level * self.dim)


@dataclass(frozen=True)
class OperatorNormResult:
    exact: float | None
    lower: float
    upper: float
    regime: str
    achieved_by: str

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass(frozen=True)
class Distribution:
    """0/1 sequence from :func:`distribute_even`.

    ``achieved_constant`` is the smallest ``c`` with
    ``#(ones in Q_{-nu,n}) <= c 2^{nu d} phi(2^nu)^{-p}`` for every sub-cube.
    """

    sequence: SparseSequence
    count: int
    achieved_constant: float


def _check_support(seq: SparseSequence, params: FiniteSpaceParams) -> None:
    if seq.dim != params.dim:
        raise DimensionMismatch(f"sequence dim {seq.dim} != weight dim {params.dim}")
    side = 1 << params.level
    for k in seq.entries:
        if not all(0 <= c < side for c in k):
            raise SupportOutOfRange(f"{k} lies outside Q_{{-{params.level},0}}")


def _level_masses(entries: dict[Point, float], top: int):
    """Yield ``(level, {corner: mass})`` for levels ``0..top``."""
    groups = dict(entries)
    for level in range(top + 1):
        if level:
            merged: dict[Point, list[float]] = defaultdict(list)
            for corner, mass in groups.items():
                merged[tuple(c >> 1 for c in corner)].append(mass)
            groups = {c: math.fsum(ms) for c, ms in merged.items()}
        yield level, groups


def finite_norm(seq: SparseSequence, params: FiniteSpaceParams) -> float:
    """Morrey norm over the dyadic sub-cubes of ``Q_{-j,0}`` only."""
    _check_support(seq, params)
    w, p = params.weight, params.p
    masses = {k: abs(v) ** p for k, v in seq.entries.items()}
    if not masses:
        return 0.0
    best = 0.0
    for level, groups in _level_masses(masses, params.level):
        best = max(best, w.scaled(level, p) * max(groups.values()) ** (1.0 / p))
    return best


def _budget(w: Weight, p: float, nu: int) -> float:
    """``2^{nu d} phi(2^nu)^{-p}``, the admissible number of ones at level ``nu``."""
    return w.scaled(nu, p) ** (-p)


def kj_count(w1: Weight, p1: float, j: int) -> int:
    """``floor(2^{dj} phi1(2^j)^{-p1})``, robust to last-bit rounding."""
    require_gp(w1, p1)
    x = _budget(w1, p1, j)
    return max(1, math.floor(x * (1.0 + REL_TOL)))


def _spread(corner: Point, level: int, n: int, out: list[Point]) -> None:
    if n == 0:
        return
    if n == 1 or level == 0:
        # n <= 2^{level d} is maintained, so level 0 only ever sees n = 1
        out.append(tuple(c << level for c in corner))
        return
    d = len(corner)
    kids = DyadicCube(level, corner).children()
    base, rem = divmod(n, 1 << d)
    for i, kid in enumerate(kids):
        _spread(kid.corner, level - 1, base + (i < rem), out)


def distribute_even(w1: Weight, p1: float, j: int, nu0: int) -> Distribution:
    """``N0 = floor(2^{d nu0} phi1(2^{nu0})^{-p1})`` ones spread evenly in ``Q_{-nu0,0}``.

    Each cube splits its count among its ``2^d`` children as evenly as
    possible, the lexicographically first children taking the remainder, until
    a count drops to one (placed at the cube's lowest corner).
    """
    if not 0 <= nu0 <= j:
        raise ValueError("need 0 <= nu0 <= j")
    require_gp(w1, p1)
    d = w1.dim
    n0 = kj_count(w1, p1, nu0)
    cells: list[Point] = []
    _spread((0,) * d, nu0, n0, cells)
    seq = SparseSequence.indicator(cells, 1.0, d)
    c = 0.0
    for level, groups in _level_masses({k: 1.0 for k in cells}, nu0):
        c = max(c, max(groups.values()) / _budget(w1, p1, level))
    return Distribution(seq, n0, c)


def _random_search(
    w1: Weight, p1: float, w2: Weight, p2: float, j: int, trials: int, seed: int
) -> float:
    d = w1.dim
    n = 1 << (j * d)
    points = list(np.ndindex(*(1 << j,) * d))
    rng = np.random.default_rng(seed)
    src = FiniteSpaceParams(w1, p1, j)
    dst = FiniteSpaceParams(w2, p2, j)
    best = 0.0
    for _ in range(trials):
        vals = rng.random(n) ** rng.uniform(0.2, 6.0)
        vals[rng.random(n) < rng.uniform(0.0, 0.95)] = 0.0
        if not vals.any():
            continue
        seq = SparseSequence(d, {tuple(map(int, k)): float(v) for k, v in zip(points, vals) if v})
        best = max(best, finite_norm(seq, dst) / finite_norm(seq, src))
    return best


def opnorm_id(
    w1: Weight,
    p1: float,
    w2: Weight,
    p2: float,
    j: int,
    *,
    search_trials: int = 0,
    seed: int = 0,
) -> OperatorNormResult:
    """Norm of ``id_j: m^{2^{jd}}_{phi1,p1} -> m^{2^{jd}}_{phi2,p2}``.

    For ``p1 >= p2`` the value is ``max_{nu<=j} phi2(2^nu)/phi1(2^nu)``, attained
    by the indicator of ``Q_{-nu0,0}`` at the smallest maximizing ``nu0``.

    For ``p1 < p2`` only a bracket is known.  ``upper`` is
    ``max_nu phi2(2^nu)/phi1(2^nu)^{p1/p2}``.  ``lower`` is the best ratio
    among the even distributions of every ``nu0 <= j``, the cube indicators
    and, if ``search_trials > 0``, seeded random sequences.
    """
    require_gp(w1, p1)
    require_gp(w2, p2)
    if w1.dim != w2.dim:
        raise DimensionMismatch("weights live on different lattices")
    if j < 0:
        raise ValueError("j must be non-negative")
    ratios = [w2.eval(nu) / w1.eval(nu) for nu in range(j + 1)]
    if p1 >= p2:
        nu0 = _first_argmax(ratios)
        value = ratios[nu0]
        return OperatorNormResult(value, value, value, "p1_ge_p2", f"indicator of Q_{{-{nu0},0}}")

    rho = p1 / p2
    upper = max(w2.eval(nu) / w1.eval(nu) ** rho for nu in range(j + 1))
    src = FiniteSpaceParams(w1, p1, j)
    dst = FiniteSpaceParams(w2, p2, j)
    lower, how = 0.0, ""
    for nu0 in range(j + 1):
        dist = distribute_even(w1, p1, j, nu0)
        r = finite_norm(dist.sequence, dst) / finite_norm(dist.sequence, src)
        if r > lower * (1.0 + REL_TOL):
            lower = r
            how = f"even distribution of {dist.count} ones in Q_{{-{nu0},0}} (achieved constant {dist.achieved_constant:.6g})"
    nu0 = _first_argmax(ratios)
    if ratios[nu0] > lower * (1.0 + REL_TOL):
        lower, how = ratios[nu0], f"indicator of Q_{{-{nu0},0}}"
    if search_trials > 0:
        found = _random_search(w1, p1, w2, p2, j, search_trials, seed)
        if found > lower * (1.0 + REL_TOL):
            lower, how = found, f"random search (seed {seed}, {search_trials} trials)"
    return OperatorNormResult(None, lower, upper, "p1_lt_p2", how)


def _first_argmax(values: list[float]) -> int:
    top = max(values)
    return next(i for i, v in enumerate(values) if v >= top * (1.0 - REL_TOL))
