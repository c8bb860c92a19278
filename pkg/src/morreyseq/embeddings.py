"""Continuity, equality and strict singularity of ``id: m_{phi1,p1} -> m_{phi2,p2}``.

All decisions reduce to closed-form suprema and limits over the
head-plus-geometric-tail weight representation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import BoundedWeight, NotContinuous
from .weights import Weight, close_eq, close_le, limits, r_phi, require_gp


@dataclass(frozen=True)
class EmbeddingVerdict:
    continuous: bool
    rho: float
    criterion_sup: float
    constant_bound: float | None
    compact: bool = False
    notes: tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "continuous": self.continuous,
            "rho": self.rho,
            "criterion_sup": self.criterion_sup,
            "constant_bound": self.constant_bound,
            "compact": self.compact,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class SingularityVerdict:
    kind: str  # StrictlySingular | NotStrictlySingular | Undetermined
    reason: str

    def to_dict(self) -> dict:
        return {"kind": self.kind, "reason": self.reason}


def _rho(p1: float, p2: float) -> float:
    return min(1.0, p1 / p2)


def criterion_sup(w1: Weight, p1: float, w2: Weight, p2: float) -> float:
    """``S = sup_j phi2(2^j) / phi1(2^j)^rho`` with ``rho = min(1, p1/p2)``.

    Past both heads the ratio is geometric with ratio ``2^{e2 - rho e1}``, so
    it is either divergent or maximal somewhere in the joint head.
    """
    if w1.dim != w2.dim:
        raise ValueError("weights live on different lattices")
    rho = _rho(p1, p2)
    top = max(w1.K, w2.K)
    drift = w2.effective_tail_exponent - rho * w1.effective_tail_exponent
    if drift > 0 and not close_le(w2.effective_tail_exponent, rho * w1.effective_tail_exponent):
        return math.inf
    best = 0.0
    for k in range(top + 1):
        a, b = w1.eval(k), w2.eval(k)
        if a == 0.0:
            if b > 0.0:
                return math.inf
            continue
        best = max(best, b / a**rho)
    return best


def is_continuous(w1: Weight, p1: float, w2: Weight, p2: float) -> EmbeddingVerdict:
    """Decide whether ``m_{phi1,p1}`` embeds continuously into ``m_{phi2,p2}``.

    ``constant_bound`` is a verified operator-norm bound.  When both weights
    are unbounded it equals ``S`` for every ``rho``:

    * ``p1 >= p2``: Hoelder on each cube gives
      ``phi2 avg_{p2} <= (phi2/phi1) phi1 avg_{p1} <= S ||lambda|m1||``.
    * ``p1 < p2``: ``sum_Q |lambda|^{p2} <= ||lambda||_inf^{p2-p1} sum_Q |lambda|^{p1}``
      yields ``||lambda|m2|| <= S ||lambda|m1||^rho ||lambda||_inf^{1-rho}``,
      and ``||lambda||_inf <= ||lambda|m1||`` because ``phi1(1) = 1``.
    """
    require_gp(w1, p1)
    require_gp(w2, p2)
    rho = _rho(p1, p2)
    S = criterion_sup(w1, p1, w2, p2)
    _, sup1 = limits(w1, p1)
    _, sup2 = limits(w2, p2)
    notes: list[str] = []
    if sup2 < math.inf:
        notes.append("target equals l_inf; every m_{phi,p} sits in l_inf with norm <= 1")
        return EmbeddingVerdict(True, rho, S, sup2, False, tuple(notes))
    if sup1 < math.inf:
        notes.append("source equals l_inf but the target weight is unbounded")
        return EmbeddingVerdict(False, rho, S, None, False, tuple(notes))
    if S < math.inf:
        notes.append("never compact: the embedding factors an l_p -> l_inf copy")
        return EmbeddingVerdict(True, rho, S, S, False, tuple(notes))
    notes.append("criterion supremum diverges")
    return EmbeddingVerdict(False, rho, S, None, False, tuple(notes))


def spaces_equal(w1: Weight, p1: float, w2: Weight, p2: float) -> bool:
    """Whether the two spaces coincide (with equivalent quasi-norms)."""
    require_gp(w1, p1)
    require_gp(w2, p2)
    _, sup1 = limits(w1, p1)
    _, sup2 = limits(w2, p2)
    if sup1 < math.inf or sup2 < math.inf:
        # a bounded weight gives l_inf; equality needs both bounded
        return sup1 < math.inf and sup2 < math.inf
    if not close_eq(p1, p2):
        return False
    return criterion_sup(w1, p1, w2, p1) < math.inf and criterion_sup(w2, p1, w1, p1) < math.inf


def compare_with_lr(w: Weight, p: float, r: float, direction: str) -> bool:
    """Embedding between ``m_{phi,p}`` and ``l_r``.

    ``direction="into"`` asks ``m_{phi,p} -> l_r``; ``"from"`` asks
    ``l_r -> m_{phi,p}``.
    """
    require_gp(w, p)
    if not r > 0:
        raise ValueError("r must be positive")
    limit, _ = limits(w, p)
    if direction == "into":
        if r == math.inf:
            return True
        return close_le(p, r) and limit > 0
    if direction == "from":
        if close_le(r, p):
            return True
        # sup_j 2^{-jd/r} phi(2^j) < inf; the head is finite so only the tail counts
        return close_le(w.effective_tail_exponent, 0.0 if r == math.inf else w.dim / r)
    raise ValueError(f"direction must be 'into' or 'from', got {direction!r}")


def is_strictly_singular(w1: Weight, p1: float, w2: Weight, p2: float) -> SingularityVerdict:
    """Strict singularity of a continuous embedding between unbounded-weight spaces.

    With ``L_i = lim 2^{-nu d/p_i} phi_i(2^nu)``:

    * ``L2 = 0``: strictly singular iff ``L1 > 0``.  If ``L1 = 0`` both spaces
      hold the same isometric copy of l_inf.  The positive direction is
      unproven when ``p1 = p2 = r_{phi2} < 1``, which yields ``Undetermined``.
    * ``L2 > 0``: the target is ``l_{p2}``, so the source is ``l_{p1}`` and the
      classical rule applies: strictly singular iff ``p1 < p2``.
    """
    verdict = is_continuous(w1, p1, w2, p2)
    _, sup1 = limits(w1, p1)
    _, sup2 = limits(w2, p2)
    if sup1 < math.inf or sup2 < math.inf:
        raise BoundedWeight("strict singularity is decided only for unbounded weights")
    if not verdict.continuous:
        raise NotContinuous("the embedding is not continuous")
    L1, _ = limits(w1, p1)
    L2, _ = limits(w2, p2)
    if L2 == 0:
        if L1 == 0:
            return SingularityVerdict("NotStrictlySingular", "target-limit-zero/source-limit-zero/linf-copy")
        if close_eq(p1, p2) and close_eq(p1, r_phi(w2)) and min(p1, p2) < 1:
            return SingularityVerdict("Undetermined", "target-limit-zero/source-lp/quasi-banach-gap")
        return SingularityVerdict("StrictlySingular", "target-limit-zero/source-lp")
    if L1 > 0 and p1 < p2 and not close_eq(p1, p2):
        return SingularityVerdict("StrictlySingular", "target-lp/source-lp/p1-lt-p2")
    if L1 > 0:
        return SingularityVerdict("NotStrictlySingular", "target-lp/source-lp/p1-ge-p2")
    return SingularityVerdict("NotStrictlySingular", "target-lp/source-not-lp")
