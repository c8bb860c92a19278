"""Dyadic cube geometry on Z^d.

A lattice point ``k`` is a plain tuple of Python ints and stands for the unit
cube ``Q_{0,k} = k + [0,1)^d``.  A :class:`DyadicCube` ``Q_{-j,m}`` is the cube
``2^j([0,1)^d + m)``; it is identified by the pair ``(level, corner)`` and no
floating point is involved anywhere in this module.

Python integers are unbounded, so corners such as ``2^{n}`` never overflow.
The only guard is :data:`MAX_LEVEL`, which bounds the level of any cube that
gets constructed.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import BudgetExceeded

#: Highest admissible cube level.  Several constructions (nested shells for
#: strict singularity) need levels well beyond 64.
MAX_LEVEL = 1024

#: Default cap on the number of unit cubes :func:`unit_cubes_in` may list.
ENUMERATION_BUDGET = 1 << 20

Point = tuple[int, ...]


@dataclass(frozen=True, order=True)
class DyadicCube:
    """The dyadic cube ``Q_{-level, corner}`` of side ``2**level``."""

    level: int
    corner: Point

    def __post_init__(self):
        if not 0 <= self.level <= MAX_LEVEL:
            raise ValueError(f"cube level must lie in [0, {MAX_LEVEL}], got {self.level}")
        if len(self.corner) == 0:
            raise ValueError("corner must have at least one coordinate")

    @property
    def dim(self) -> int:
        return len(self.corner)

    @property
    def side(self) -> int:
        return 1 << self.level

    @property
    def volume(self) -> int:
        return 1 << (self.level * self.dim)

    def contains(self, point: Point) -> bool:
        """Whether the unit cube ``Q_{0,point}`` lies inside this cube."""
        s = self.side
        return all(s * m <= k < s * (m + 1) for m, k in zip(self.corner, point))

    def contains_cube(self, other: DyadicCube) -> bool:
        if other.level > self.level:
            return False
        shift = self.level - other.level
        return all((c >> shift) == m for c, m in zip(other.corner, self.corner))

    def parent(self) -> DyadicCube:
        return DyadicCube(self.level + 1, tuple(m >> 1 for m in self.corner))

    def children(self) -> list[DyadicCube]:
        """The ``2^d`` sub-cubes one level down, in lexicographic order."""
        if self.level == 0:
            raise ValueError("unit cubes have no dyadic children")
        base = [2 * m for m in self.corner]
        return [
            DyadicCube(self.level - 1, tuple(b + o for b, o in zip(base, offs)))
            for offs in itertools.product((0, 1), repeat=self.dim)
        ]

    def bounds(self) -> list[tuple[int, int]]:
        """Half-open integer index range ``[lo, hi)`` per coordinate."""
        s = self.side
        return [(s * m, s * (m + 1)) for m in self.corner]

    def __str__(self) -> str:
        c = self.corner[0] if self.dim == 1 else self.corner
        return f"Q_{{-{self.level},{c}}}"


def ancestor(point: Point, level: int) -> DyadicCube:
    """The unique ``Q_{-level,m}`` containing ``Q_{0,point}``.

    ``m_i = floor(point_i / 2**level)``; ``>>`` floors for negative ints too.
    """
    if level < 0:
        raise ValueError("level must be non-negative")
    return DyadicCube(level, tuple(k >> level for k in point))


def unit_cubes_in(cube: DyadicCube, budget: int = ENUMERATION_BUDGET) -> list[Point]:
    """All ``2^{jd}`` lattice points of ``cube`` in lexicographic order."""
    if cube.volume > budget:
        raise BudgetExceeded(
            f"{cube} holds {cube.volume} unit cubes, budget is {budget}"
        )
    return list(itertools.product(*(range(lo, hi) for lo, hi in cube.bounds())))


def group_support_by_level(support: Iterable[Point], level: int) -> dict[DyadicCube, list[Point]]:
    """Partition ``support`` by ancestor at ``level``; empty cubes are absent."""
    groups: dict[DyadicCube, list[Point]] = {}
    for k in support:
        groups.setdefault(ancestor(k, level), []).append(k)
    return groups


def orthant(point: Point) -> tuple[bool, ...]:
    """Sign pattern of ``point``; two points share a dyadic cube at a high
    enough level iff they share an orthant (cubes never straddle 0)."""
    return tuple(k < 0 for k in point)


def merge_level(points: Iterable[Point]) -> int:
    """Smallest level at which all ``points`` (one orthant) share an ancestor.

    Per coordinate, ``a >> j == b >> j`` for the extreme values exactly when
    ``j >= bit_length(a ^ b)``.
    """
    pts = list(points)
    if not pts:
        return 0
    level = 0
    for i in range(len(pts[0])):
        lo = min(p[i] for p in pts)
        hi = max(p[i] for p in pts)
        if (lo < 0) != (hi < 0):
            raise ValueError("points in different orthants never share a dyadic cube")
        level = max(level, (lo ^ hi).bit_length())
    return level
