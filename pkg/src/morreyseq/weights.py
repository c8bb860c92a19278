"""Discrete weights phi: {2^k : k >= 0} -> [0, inf).

A :class:`Weight` stores a finite head ``v_0, ..., v_K`` with
``v_k = phi(2^k)`` and a geometric tail ``phi(2^k) = v_K 2^{(k-K)e}`` for
``k > K``.  That family is closed under every operation here (class
membership, limits, regularization), so each supremum over all ``k`` has a
closed form.  Weights such as ``2^{kd/u} k^{-a}`` can only be represented in
truncated form.

Comparisons against powers of two use the relative tolerance
:data:`REL_TOL`; all class tests are ratio tests, so this is where rounding
would otherwise bite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import NotGp, NotInAnyGp, NotNormalized, TrivialSpace

REL_TOL = 1e-12
LN2 = math.log(2.0)


def close_le(a: float, b: float, tol: float = REL_TOL) -> bool:
    """``a <= b`` up to a relative slack of ``tol``."""
    if a <= b:
        return True
    return a - b <= tol * max(1.0, abs(a), abs(b))


def close_eq(a: float, b: float, tol: float = REL_TOL) -> bool:
    return close_le(a, b, tol) and close_le(b, a, tol)


@dataclass(frozen=True)
class Weight:
    """Finite head plus geometric tail.

    Parameters
    ----------
    dim : int
        Lattice dimension ``d``.
    head : tuple of float
        ``phi(2^0), ..., phi(2^K)``.
    tail_exponent : float
        ``e >= 0`` with ``phi(2^k) = head[-1] * 2**((k-K)*e)`` beyond the head.
    normalized : bool
        Declares ``phi(1) = 1``; checked on construction.
    """

    dim: int
    head: tuple[float, ...]
    tail_exponent: float = 0.0
    normalized: bool = field(default=False)

    def __post_init__(self):
        object.__setattr__(self, "head", tuple(float(v) for v in self.head))
        object.__setattr__(self, "tail_exponent", float(self.tail_exponent))
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError(f"dim must be a positive int, got {self.dim!r}")
        if not self.head:
            raise ValueError("head must be non-empty")
        if any(not math.isfinite(v) or v < 0 for v in self.head):
            raise ValueError("head values must be finite and non-negative")
        if not any(v > 0 for v in self.head):
            raise ValueError("weight must not vanish identically")
        e = self.tail_exponent
        if not math.isfinite(e) or e < 0:
            raise ValueError("tail_exponent must be finite and non-negative")
        if self.normalized and self.head[0] != 1.0:
            raise NotNormalized(f"normalized weight needs phi(1) = 1, got {self.head[0]}")

    # construction helpers

    @classmethod
    def power(cls, dim: int, u: float) -> Weight:
        """``phi(t) = t^{d/u}``, the weight of the classical space ``m_{u,p}``."""
        if u == math.inf:
            return cls.constant(dim)
        return cls(dim, (1.0,), dim / u, normalized=True)

    @classmethod
    def constant(cls, dim: int, value: float = 1.0) -> Weight:
        return cls(dim, (value,), 0.0, normalized=value == 1.0)

    def normalize(self) -> Weight:
        """Divide by ``phi(1)`` (requires ``phi(1) > 0``)."""
        v0 = self.head[0]
        if v0 <= 0:
            raise NotNormalized("cannot normalize a weight with phi(1) = 0")
        return Weight(self.dim, tuple(v / v0 for v in self.head), self.tail_exponent, True)

    # evaluation

    @property
    def K(self) -> int:
        return len(self.head) - 1

    @property
    def tail_is_zero(self) -> bool:
        return self.head[-1] == 0.0

    @property
    def effective_tail_exponent(self) -> float:
        """Tail exponent, with a vanishing tail counting as constant."""
        return 0.0 if self.tail_is_zero else self.tail_exponent

    def eval(self, k: int) -> float:
        """``phi(2^k)``."""
        if k < 0:
            raise ValueError("k must be non-negative")
        if k <= self.K:
            return self.head[k]
        if self.tail_is_zero:
            return 0.0
        return self.head[-1] * 2.0 ** ((k - self.K) * self.tail_exponent)

    def scaled(self, k: int, p: float) -> float:
        """``phi(2^k) 2^{-kd/p}`` without overflowing for large ``k``."""
        a = self.dim / p
        if k <= self.K:
            return self.head[k] * 2.0 ** (-k * a)
        if self.tail_is_zero:
            return 0.0
        base = self.head[-1] * 2.0 ** (-self.K * a)
        return base * 2.0 ** ((k - self.K) * (self.tail_exponent - a))

    def values(self, n: int) -> list[float]:
        """``phi(2^0), ..., phi(2^{n-1})``."""
        return [self.eval(k) for k in range(n)]

    # serialization

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "head": list(self.head),
            "tail_exponent": self.tail_exponent,
            "normalized": self.normalized,
        }

    @classmethod
    def from_dict(cls, data: dict) -> Weight:
        try:
            return cls(
                int(data["dim"]),
                tuple(data["head"]),
                data.get("tail_exponent", 0.0),
                bool(data.get("normalized", False)),
            )
        except KeyError as exc:
            raise ValueError(f"weight record lacks field {exc}") from None


@dataclass(frozen=True)
class SpaceParams:
    """The pair ``(phi, p)`` fixing the space ``m_{phi,p}``."""

    weight: Weight
    p: float

    def __post_init__(self):
        if not (self.p > 0 and math.isfinite(self.p)):
            raise ValueError(f"p must lie in (0, inf), got {self.p}")

    @property
    def dim(self) -> int:
        return self.weight.dim

    def to_dict(self) -> dict:
        return {**self.weight.to_dict(), "p": self.p}

    @classmethod
    def from_dict(cls, data: dict) -> SpaceParams:
        if "p" not in data:
            raise ValueError("space record lacks field 'p'")
        return cls(Weight.from_dict(data), float(data["p"]))


@dataclass(frozen=True)
class ClassificationReport:
    nontrivial: bool
    equals_linf: bool
    equals_lp: bool
    separable: bool
    comparable_with_c0: str
    limit_at_infinity: float
    sup_phi: float

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def is_nontrivial(weight: Weight, p: float) -> bool:
    """``sup_j phi(2^j) 2^{-jd/p} < inf``; only the tail can violate it."""
    return weight.tail_is_zero or close_le(weight.tail_exponent, weight.dim / p)


def is_gp(weight: Weight, p: float) -> bool:
    """Membership in ``G_p(D)``.

    The two-sided bound ``1 <= phi(2^k)/phi(2^j) <= 2^{(k-j)d/p}`` telescopes,
    so it suffices to check consecutive ratios in the head and ``0 <= e <= d/p``
    for the tail.
    """
    if p <= 0:
        raise ValueError("p must be positive")
    head = weight.head
    if any(v <= 0 for v in head):
        return False
    bound = 2.0 ** (weight.dim / p)
    for a, b in zip(head, head[1:]):
        if not close_le(a, b) or not close_le(b / a, bound):
            return False
    return close_le(weight.tail_exponent, weight.dim / p)


def r_phi(weight: Weight) -> float:
    """``sup{p : phi in G_p(D)}``; ``inf`` exactly for constant weights."""
    head = weight.head
    if any(v <= 0 for v in head):
        raise NotInAnyGp("G_p weights must be strictly positive")
    best = math.inf
    for a, b in zip(head, head[1:]):
        if not close_le(a, b):
            raise NotInAnyGp(f"head is not nondecreasing ({a} > {b})")
        if b > a:
            best = min(best, weight.dim * LN2 / math.log(b / a))
    if weight.tail_exponent > 0:
        best = min(best, weight.dim / weight.tail_exponent)
    return best


def limits(weight: Weight, p: float) -> tuple[float, float]:
    """``(lim_k 2^{-kd/p} phi(2^k), sup_k phi(2^k))``."""
    a = weight.dim / p
    e = weight.effective_tail_exponent
    if weight.tail_is_zero or (e < a and not close_eq(e, a)):
        limit = 0.0
    elif close_eq(e, a):
        limit = weight.scaled(weight.K, p)
    else:
        limit = math.inf
    sup = math.inf if e > 0 else max(weight.head)
    return limit, sup


def _extend_head_past_max(weight: Weight) -> list[float]:
    """Head long enough that the tail dominates every head value."""
    head = list(weight.head)
    if weight.tail_is_zero or weight.tail_exponent == 0:
        return head
    top = max(head)
    k = weight.K
    while weight.eval(k) < top:
        k += 1
        head.append(weight.eval(k))
    return head


def regularize(weight: Weight, p: float) -> Weight:
    """An equivalent ``G_p(D)`` weight with identical Morrey norms.

    Step 1 replaces ``phi`` by its running maximum ``sup_{j<=k} phi(2^j)``.
    Because the cube averages ``sup_m (|Q_{-j,m}|^{-1} sum |lambda|^p)^{1/p}``
    are nonincreasing in ``j``, this leaves every norm unchanged and makes the
    weight nondecreasing.  Step 2 takes
    ``2^{kd/p} sup_{j>=k} phi_1(2^j) 2^{-jd/p}``, which likewise preserves the
    norm because the unnormalized cube sums are nondecreasing in ``j``.

    The tail beyond the (possibly extended) head keeps its exponent, so both
    suprema are attained inside the head.
    """
    if p <= 0:
        raise ValueError("p must be positive")
    if not is_nontrivial(weight, p):
        raise TrivialSpace(
            f"tail exponent {weight.tail_exponent} exceeds d/p = {weight.dim / p}"
        )
    head = _extend_head_past_max(weight)
    step1 = []
    running = 0.0
    for v in head:
        running = max(running, v)
        step1.append(running)
    if weight.tail_is_zero:
        tail = 0.0
    else:
        tail = weight.tail_exponent
    decay = 2.0 ** (-weight.dim / p)

    n = len(step1)
    step2 = []
    for k in range(n):
        best = step1[k]
        factor = 1.0
        for j in range(k + 1, n):
            factor *= decay
            cand = factor * step1[j]
            # keep the l = 0 term on near-ties so G_p inputs are exact fixed points
            if cand > best * (1.0 + REL_TOL):
                best = cand
        step2.append(best)
    normalized = weight.normalized and step2[0] == 1.0
    return Weight(weight.dim, tuple(step2), tail, normalized)


def require_gp(weight: Weight, p: float, *, normalized: bool = True) -> None:
    if not is_gp(weight, p):
        raise NotGp(f"weight is not in G_{p}(D)")
    if normalized and weight.head[0] != 1.0:
        raise NotNormalized(f"expected phi(1) = 1, got {weight.head[0]}")


def classify_space(weight: Weight, p: float) -> ClassificationReport:
    """Identify ``m_{phi,p}`` among l_inf, l_p and the genuinely Morrey case."""
    require_gp(weight, p)
    limit, sup = limits(weight, p)
    equals_linf = sup < math.inf
    equals_lp = limit > 0 and not equals_linf
    separable = equals_lp
    if equals_lp:
        c0 = "subset-equal-lp"
    elif equals_linf:
        c0 = "superset-equal-linf"
    else:
        c0 = "incomparable"
    return ClassificationReport(
        nontrivial=True,
        equals_linf=equals_linf,
        equals_lp=equals_lp,
        separable=separable,
        comparable_with_c0=c0,
        limit_at_infinity=limit,
        sup_phi=sup,
    )
