"""Norms of finitely supported sequences on Z^d.

The Morrey norm is

    ||lambda | m_{phi,p}|| = sup_{j >= 0, m} phi(2^j) 2^{-jd/p} (sum_{k in Q_{-j,m}} |lambda_k|^p)^{1/p}.

For finite support only finitely many levels carry information: once every
orthant's part of the support sits in a single cube, cube masses stop changing
and the prefactor ``phi(2^j) 2^{-jd/p}`` is geometric with ratio
``2^{e - d/p}``.  :func:`norm_mps` evaluates the levels up to that point and
settles the tail in closed form.
"""

from __future__ import annotations

import math
from collections import defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .errors import DimensionMismatch
from .lattice import DyadicCube, Point, merge_level, orthant
from .weights import REL_TOL, Weight, is_nontrivial


class SparseSequence:
    """Finitely supported real sequence on Z^d; zero entries are dropped."""

    __slots__ = ("dim", "_entries")

    def __init__(self, dim: int, entries: Mapping[Point, float] | Iterable[tuple[Point, float]] = ()):
        if dim < 1:
            raise ValueError("dim must be positive")
        self.dim = dim
        items = entries.items() if isinstance(entries, Mapping) else entries
        clean: dict[Point, float] = {}
        for k, v in items:
            k = tuple(int(c) for c in k)
            if len(k) != dim:
                raise DimensionMismatch(f"point {k} does not have {dim} coordinates")
            v = float(v)
            if not math.isfinite(v):
                raise ValueError(f"entry at {k} is not finite")
            if v != 0.0:
                clean[k] = v
        self._entries = clean

    @property
    def entries(self) -> dict[Point, float]:
        return dict(self._entries)

    @property
    def support(self) -> list[Point]:
        return sorted(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __getitem__(self, k: Point) -> float:
        return self._entries.get(tuple(k), 0.0)

    def __iter__(self):
        return iter(sorted(self._entries.items()))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparseSequence)
            and self.dim == other.dim
            and self._entries == other._entries
        )

    def __repr__(self) -> str:
        return f"SparseSequence(dim={self.dim}, entries={dict(self)!r})"

    def scale(self, c: float) -> SparseSequence:
        return SparseSequence(self.dim, {k: c * v for k, v in self._entries.items()})

    def __add__(self, other: SparseSequence) -> SparseSequence:
        if self.dim != other.dim:
            raise DimensionMismatch("dimension mismatch")
        out = dict(self._entries)
        for k, v in other._entries.items():
            out[k] = out.get(k, 0.0) + v
        return SparseSequence(self.dim, out)

    def __sub__(self, other: SparseSequence) -> SparseSequence:
        return self + other.scale(-1.0)

    @classmethod
    def indicator(cls, points: Iterable[Point], value: float = 1.0, dim: int | None = None) -> SparseSequence:
        pts = list(points)
        if dim is None:
            if not pts:
                raise ValueError("dim required for an empty indicator")
            dim = len(pts[0])
        return cls(dim, {k: value for k in pts})

    def to_dict(self) -> dict:
        return {"dim": self.dim, "entries": [[*k, v] for k, v in self]}

    @classmethod
    def from_dict(cls, data: dict) -> SparseSequence:
        dim = int(data["dim"])
        entries = []
        for row in data.get("entries", []):
            if len(row) != dim + 1:
                raise ValueError(f"entry {row} should hold {dim} coordinates and a value")
            coords = row[:dim]
            if any(isinstance(c, float) and not c.is_integer() for c in coords):
                raise ValueError(f"coordinates must be integers, got {coords}")
            entries.append((tuple(int(c) for c in coords), row[dim]))
        return cls(dim, entries)


@dataclass(frozen=True)
class NormResult:
    """Value of a Morrey norm with the cube realizing it.

    ``cube`` is ``None`` for the zero sequence and when the norm diverges
    (``divergent`` is then set: the tail prefactor grows geometrically).
    """

    value: float
    cube: DyadicCube | None
    divergent: bool = False

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "cube": None if self.cube is None else {"level": self.cube.level, "corner": list(self.cube.corner)},
            "divergent": self.divergent,
        }


def _root(mass: float, p: float, single: float | None) -> float:
    # a single entry needs no power round-trip: (|x|^p)^{1/p} = |x|
    return single if single is not None else mass ** (1.0 / p)


def stabilization_level(support: Iterable[Point]) -> int:
    """Smallest level from which the support's cube partition is final,
    i.e. each orthant's points share one cube."""
    by_orthant: dict[tuple[bool, ...], list[Point]] = defaultdict(list)
    for k in support:
        by_orthant[orthant(k)].append(k)
    return max((merge_level(pts) for pts in by_orthant.values()), default=0)


def norm_mps(seq: SparseSequence, weight: Weight, p: float) -> NormResult:
    """Exact ``||seq | m_{phi,p}||`` over all dyadic levels.

    The attaining cube is the one at the smallest level, ties broken by the
    lexicographically smallest corner; values within :data:`REL_TOL` of the
    running best count as ties.
    """
    if p <= 0:
        raise ValueError("p must be positive")
    if seq.dim != weight.dim:
        raise DimensionMismatch(f"sequence dim {seq.dim} != weight dim {weight.dim}")
    if len(seq) == 0:
        return NormResult(0.0, None)

    if not is_nontrivial(weight, p):
        return NormResult(math.inf, None, divergent=True)

    # level 0: every point is its own cube
    groups: dict[Point, tuple[float, float | None]] = {
        k: (abs(v) ** p, abs(v)) for k, v in seq.entries.items()
    }
    top = max(stabilization_level(groups), weight.K)

    best = -1.0
    best_cube: DyadicCube | None = None
    for level in range(top + 1):
        if level > 0:
            merged: dict[Point, list[tuple[float, float | None]]] = defaultdict(list)
            for corner, item in groups.items():
                merged[tuple(c >> 1 for c in corner)].append(item)
            groups = {
                c: items[0] if len(items) == 1 else (math.fsum(m for m, _ in items), None)
                for c, items in merged.items()
            }
        pref = weight.scaled(level, p)
        if pref == 0.0:
            continue
        # largest mass at this level, smallest corner among ties
        corner, (mass, single) = min(groups.items(), key=lambda it: (-it[1][0], it[0]))
        value = pref * _root(mass, p, single)
        if value > best * (1.0 + REL_TOL) or best_cube is None:
            best, best_cube = value, DyadicCube(level, corner)
    # beyond `top` masses are frozen and the prefactor is nonincreasing
    if best_cube is None:
        return NormResult(0.0, None)
    return NormResult(best, best_cube)


def norm_lp(seq: SparseSequence, p: float) -> float:
    if p == math.inf:
        return norm_linf(seq)
    if p <= 0:
        raise ValueError("p must be positive")
    vals = sorted((abs(v) for v in seq.entries.values()), reverse=True)
    if not vals:
        return 0.0
    return math.fsum(v ** p for v in vals) ** (1.0 / p)


def norm_linf(seq: SparseSequence) -> float:
    return max((abs(v) for v in seq.entries.values()), default=0.0)


def rearrangement(seq: SparseSequence) -> list[float]:
    """Non-increasing rearrangement ``lambda*_1 >= lambda*_2 >= ...`` of the support."""
    return sorted((abs(v) for v in seq.entries.values()), reverse=True)


def norm_lorentz(seq: SparseSequence, p: float, q: float) -> float:
    """``||seq | l_{p,q}||`` from the rearrangement."""
    if not (0 < p < math.inf) or not q > 0:
        raise ValueError("need 0 < p < inf and 0 < q <= inf")
    star = rearrangement(seq)
    if not star:
        return 0.0
    if q == math.inf:
        return max(nu ** (1.0 / p) * s for nu, s in enumerate(star, start=1))
    terms = [nu ** (q / p - 1.0) * s ** q for nu, s in enumerate(star, start=1)]
    return math.fsum(terms) ** (1.0 / q)


def lorentz_embedding_constant(p: float, r: float) -> float:
    """Constant C with ``||lambda | m_{phi,p}|| <= C ||lambda | l_{r,inf}||`` for
    ``phi`` in ``G_r(D)``, ``phi(1) = 1`` and ``p < r``.

    The argument bounds the ``2^{jd}`` largest terms of a cube by
    ``||lambda | l_{r,inf}|| N^{1/p - 1/r} c_N`` with
    ``c_N = N^{1/r - 1/p} (sum_{nu<=N} nu^{-p/r})^{1/p}``.  Comparing the sum
    with ``1 + int_1^N x^{-p/r} dx`` gives ``c_N <= (1 - p/r)^{-1/p}`` for every
    ``N``, which is also the limit as ``N -> inf``.
    """
    if not 0 < p < r:
        raise ValueError("need 0 < p < r")
    if r == math.inf:
        return 1.0
    return (1.0 - p / r) ** (-1.0 / p)
