"""Generators for the extremal sequences and counterexamples of the theory.

Each generator returns a :class:`WitnessBundle`: a finitely supported sequence
(a truncation when the underlying object is infinite) plus one or more
certificates, i.e. inequalities the sequence's norms must satisfy.  The
certificates are claims; :func:`verify` re-evaluates them with
:mod:`morreyseq.norms` and never trusts construction-time bookkeeping.

All index choices are greedy-minimal and all placements lexicographic, so the
output is a pure function of the inputs.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .embeddings import is_continuous
from .errors import BoundedWeight, BudgetExceeded, LimitPositive, NotContinuous, QuasiBanachUnsupported, TrivialSpace
from .finite_dim import distribute_even
from .lattice import ENUMERATION_BUDGET, DyadicCube, Point, unit_cubes_in
from .norms import SparseSequence, norm_lp, norm_mps
from .weights import REL_TOL, Weight, close_le, is_nontrivial, limits, require_gp

#: Search horizon for greedy level choices.  Weights in the supported family
#: are geometric past their head, so a failed search means the condition can
#: never hold.
SEARCH_LIMIT = 1000


@dataclass(frozen=True)
class Certificate:
    """``metric(sequence) <direction> bound`` where ``metric`` is ``mps`` or ``lp``."""

    name: str
    bound: float
    direction: str  # "le", "ge" or "eq"
    metric: str = "mps"

    def to_dict(self) -> dict:
        return {"name": self.name, "bound": self.bound, "direction": self.direction, "metric": self.metric}

    def holds(self, value: float, tol: float = 1e-10) -> bool:
        if self.direction == "le":
            return close_le(value, self.bound, tol)
        if self.direction == "ge":
            return close_le(self.bound, value, tol)
        return close_le(value, self.bound, tol) and close_le(self.bound, value, tol)


@dataclass(frozen=True)
class WitnessBundle:
    kind: str
    sequence: SparseSequence
    certificates: tuple[Certificate, ...]
    trunc_param: int
    meta: dict

    @property
    def certificate(self) -> Certificate:
        return self.certificates[0]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "sequence": self.sequence.to_dict(),
            "certificate": self.certificate.to_dict(),
            "certificates": [c.to_dict() for c in self.certificates],
            "trunc_param": self.trunc_param,
            "meta": self.meta,
        }


def verify(bundle: WitnessBundle, weight: Weight, p: float) -> dict[str, bool]:
    """Re-evaluate every certificate of ``bundle`` in ``m_{phi,p}``."""
    out = {}
    for cert in bundle.certificates:
        if cert.metric == "lp":
            value = norm_lp(bundle.sequence, p)
        else:
            value = norm_mps(bundle.sequence, weight, p).value
        out[cert.name] = cert.holds(value)
    return out


def _need_limit_zero(weight: Weight, p: float) -> None:
    limit, _ = limits(weight, p)
    if limit == math.inf:
        raise TrivialSpace("the space is trivial for this weight")
    if limit > 0:
        raise LimitPositive("2^{-kd/p} phi(2^k) does not tend to 0; the space is l_p")


def _first_level(pred, start: int) -> int:
    for k in range(start, start + SEARCH_LIMIT):
        if pred(k):
            return k
    raise BudgetExceeded(f"no admissible level in [{start}, {start + SEARCH_LIMIT})")


def _axis_point(dim: int, x: int) -> Point:
    return (x,) + (0,) * (dim - 1)


def _block(cube: DyadicCube, value: float, out: dict[Point, float], budget: int) -> None:
    for k in unit_cubes_in(cube, budget - len(out)):
        out[k] = value


# characteristic sequences


def char_norm_closed_form(weight: Weight, p: float, k0: int) -> float:
    """``sup_j phi(2^j) min(2^{(k0-j)d/p}, 1) = max(phi^+(2^k0), phi^*(2^k0))``.

    ``phi^+`` is the running maximum up to ``k0`` and ``phi^*`` the supremum of
    ``phi(2^j) 2^{(k0-j)d/p}`` over ``j >= k0``; past the head the latter is
    geometric with ratio ``2^{e-d/p} <= 1``, so a finite scan suffices.
    """
    if not is_nontrivial(weight, p):
        raise TrivialSpace("the space is trivial for this weight")
    plus = max(weight.eval(j) for j in range(k0 + 1))
    a = weight.dim / p
    star = max(weight.eval(j) * 2.0 ** ((k0 - j) * a) for j in range(k0, max(k0, weight.K) + 1))
    return max(plus, star)


def char_sequence(weight: Weight, p: float, k0: int, m0: Sequence[int] | None = None) -> WitnessBundle:
    """Indicator of ``Q_{-k0,m0}``; its norm is :func:`char_norm_closed_form`."""
    if k0 < 0:
        raise ValueError("k0 must be non-negative")
    d = weight.dim
    m0 = tuple(m0) if m0 is not None else (0,) * d
    if len(m0) != d:
        raise ValueError(f"m0 needs {d} coordinates")
    bound = char_norm_closed_form(weight, p, k0)
    cells = unit_cubes_in(DyadicCube(k0, m0))
    seq = SparseSequence.indicator(cells, 1.0, d)
    return WitnessBundle(
        "char", seq, (Certificate("char-closed-form", bound, "eq"),), k0, {"k0": k0, "m0": list(m0)}
    )


# c_0 is not contained in m_{phi,p} when phi is unbounded


def c0_counterexample(weight: Weight, p: float, L: int, *, budget: int = ENUMERATION_BUDGET) -> WitnessBundle:
    """First ``L`` blocks of an element of ``c_0`` outside ``m_{phi,p}``.

    Levels ``k_1 < k_2 < ...`` are chosen greedily with ``phi(2^{k_l})``
    strictly increasing.  Block ``l`` fills ``Q_{-k_l,(1,0,...,0)}`` (the
    ``2^{k_l}``-shell along the first axis) with the value
    ``phi(2^{k_l})^{-1/2}``.  That cube alone gives the norm at least
    ``phi(2^{k_l})^{1/2}``, which is unbounded in ``l`` while the entries tend
    to zero.
    """
    if L < 1:
        raise ValueError("L must be at least 1")
    if not is_nontrivial(weight, p):
        raise TrivialSpace("the space is trivial for this weight")
    _, sup = limits(weight, p)
    if sup < math.inf:
        raise BoundedWeight("c_0 is contained in m_{phi,p} = l_inf for bounded weights")
    d = weight.dim
    levels = [_first_level(lambda k: weight.eval(k) > 0, 0)]
    while len(levels) < L:
        prev = weight.eval(levels[-1])
        levels.append(_first_level(lambda k: weight.eval(k) > prev, levels[-1] + 1))
    entries: dict[Point, float] = {}
    for k in levels:
        _block(DyadicCube(k, _axis_point(d, 1)), weight.eval(k) ** -0.5, entries, budget)
    bound = weight.eval(levels[-1]) ** 0.5
    return WitnessBundle(
        "c0-counterexample",
        SparseSequence(d, entries),
        (Certificate("c0-growth", bound, "ge"),),
        L,
        {"levels": levels},
    )


# spikes on the first axis


def spike_levels(weight: Weight, p: float, L: int) -> list[int]:
    """``n_1 = 0`` and ``n_l`` the least level above ``n_{l-1}`` with
    ``phi(2^n) 2^{-nd/p} <= l^{-1/p}``."""
    _need_limit_zero(weight, p)
    levels = [0]
    for ell in range(2, L + 1):
        target = ell ** (-1.0 / p)
        levels.append(_first_level(lambda n: close_le(weight.scaled(n, p), target), levels[-1] + 1))
    return levels


def spike_sequence(weight: Weight, p: float, L: int) -> WitnessBundle:
    """Unit spikes at ``(2^{n_l}, 0, ..., 0)``, ``l = 1..L``.

    A dyadic cube holds either one spike or the first few, the latter only as
    ``Q_{-j,0}`` with ``j > n_l``; for a ``G_p`` weight this gives
    ``||lambda|| <= sup_l phi(2^{n_l}) 2^{-d n_l/p} l^{1/p} <= 1`` uniformly in ``L``.
    """
    if L < 1:
        raise ValueError("L must be at least 1")
    require_gp(weight, p, normalized=False)
    levels = spike_levels(weight, p, L)
    d = weight.dim
    seq = SparseSequence(d, {_axis_point(d, 1 << n): 1.0 for n in levels})
    bound = max(weight.scaled(n, p) * ell ** (1.0 / p) for ell, n in enumerate(levels, start=1))
    return WitnessBundle(
        "spike", seq, (Certificate("spike-uniform-bound", bound, "le"),), L, {"levels": levels}
    )


def lambda_E(weight: Weight, p: float, E: Iterable[int], L: int) -> WitnessBundle:
    """Spikes of :func:`spike_sequence` restricted to indices in ``E`` (1-based).

    Distinct ``E`` give sequences at mutual distance at least 1, since the
    norm dominates the sup norm for ``phi(1) = 1``.
    """
    E = sorted(set(E))
    if any(not 1 <= e <= L for e in E):
        raise ValueError(f"E must be a subset of 1..{L}")
    require_gp(weight, p)
    levels = spike_levels(weight, p, L)
    d = weight.dim
    seq = SparseSequence(d, {_axis_point(d, 1 << levels[e - 1]): 1.0 for e in E})
    certs = (Certificate("nonzero-norm-at-least-1", 1.0, "ge"),) if E else (Certificate("zero", 0.0, "eq"),)
    return WitnessBundle("lambda-E", seq, certs, L, {"E": E, "levels": levels})


def pairwise_distances(weight: Weight, p: float, family: Sequence[Iterable[int]], L: int) -> list[list[float]]:
    """``||lambda^(E) - lambda^(F)||`` for all pairs of the given index sets."""
    seqs = [lambda_E(weight, p, E, L).sequence for E in family]
    return [[norm_mps(a - b, weight, p).value for b in seqs] for a in seqs]


# an element of m^0 outside the closure of finite sequences


def proper_subspace_levels(weight: Weight, p: float, J: int) -> tuple[list[int], list[int]]:
    """``(nu_0..nu_{J-1}, n_0..n_{J-1})`` with ``n_0 = 1`` and ``n_{j+1} = n_j + nu_j``.

    ``nu_j`` is the least level above ``max(j, nu_{j-1})`` with
    ``(sum_{l<=j} phi(2^l)^{-p} 2^{ld})^{1/p} <= 2^{nu d/p} phi(2^nu)^{-1}``.
    """
    _need_limit_zero(weight, p)
    d = weight.dim
    nus: list[int] = []
    ns = [1]
    for j in range(J):
        lhs = math.fsum(weight.eval(l) ** (-p) * 2.0 ** (l * d) for l in range(j + 1)) ** (1.0 / p)
        start = max(j, nus[-1] if nus else -1) + 1
        nu = _first_level(lambda v: close_le(lhs * weight.scaled(v, p), 1.0), start)
        nus.append(nu)
        if j + 1 < J:
            ns.append(ns[-1] + nu)
    return nus, ns


def proper_subspace_witness(
    weight: Weight, p: float, J: int, *, budget: int = ENUMERATION_BUDGET
) -> WitnessBundle:
    """Blocks of height ``phi(2^j)^{-1}`` on ``Q_{-j,(2^{n_j},0,...,0)}``, ``j < J``.

    The infinite sequence lies in ``m_{phi,p} cap c_0`` but is not a limit of
    finitely supported sequences; every truncation has norm at most 2.
    """
    if J < 1:
        raise ValueError("J must be at least 1")
    require_gp(weight, p)
    nus, ns = proper_subspace_levels(weight, p, J)
    d = weight.dim
    entries: dict[Point, float] = {}
    for j, n in enumerate(ns):
        _block(DyadicCube(j, _axis_point(d, 1 << n)), 1.0 / weight.eval(j), entries, budget)
    return WitnessBundle(
        "proper-subspace",
        SparseSequence(d, entries),
        (Certificate("proper-subspace-bound", 2.0, "le"),),
        J,
        {"nu": nus, "n": ns},
    )


def blocks_disjoint(ns: Sequence[int], J: int) -> bool:
    """Gap check ``2^{n_{j+1}} - 2^{n_j} >= 2^{n_j} 2^j`` for consecutive blocks."""
    return all((1 << ns[j + 1]) - (1 << ns[j]) >= (1 << ns[j]) << j for j in range(min(J, len(ns)) - 1))


# isometric copy of l_inf


def linf_levels(weight: Weight, p: float, n: int) -> list[int]:
    """Strictly increasing ``j_k >= 1``, least with ``2^{-j_k d/p} phi(2^{j_k}) <= k^{-1/p}``."""
    _need_limit_zero(weight, p)
    levels: list[int] = []
    for k in range(1, n + 1):
        target = k ** (-1.0 / p)
        start = levels[-1] + 1 if levels else 1
        levels.append(_first_level(lambda j: close_le(weight.scaled(j, p), target), start))
    return levels


def linf_copy(weight: Weight, p: float, mu: Sequence[float]) -> WitnessBundle:
    """``mu_k`` placed at ``(2^{j_k} - 1, 0, ..., 0)``; the map is an isometry from l_inf."""
    require_gp(weight, p)
    mu = [float(x) for x in mu]
    levels = linf_levels(weight, p, len(mu))
    d = weight.dim
    seq = SparseSequence(d, {_axis_point(d, (1 << j) - 1): v for j, v in zip(levels, mu)})
    bound = max((abs(v) for v in mu), default=0.0)
    return WitnessBundle(
        "linf-copy", seq, (Certificate("linf-isometry", bound, "eq"),), len(mu), {"levels": levels}
    )


# l_p -> m_{phi,p} is strictly singular: normalized vectors with vanishing Morrey norm


def ss_levels(weight: Weight, p: float, n: int) -> list[int]:
    """``b_1 < ... < b_n`` with ``phi(2^b)2^{-bd/p} < 2^{-k}`` and ``b_k >= b_{k-1} + 2``."""
    levels: list[int] = []
    for k in range(1, n + 1):
        start = levels[-1] + 2 if levels else 0
        levels.append(_first_level(lambda b: weight.scaled(b, p) < 2.0 ** (-k), start))
    return levels


def ss_demo(weight: Weight, p: float, n: int, eps: float = 0.5) -> WitnessBundle:
    """``x^(n) = n^{-1/p} sum_{k=1}^n delta_{c_k}`` with unit l_p norm.

    Cubes ``Q_k = Q_{-b_k, m_k}`` are nested with lower corners
    ``c_k = sum_{i=k}^{n-1} 2^{b_i}`` (every coordinate), so ``Q_k`` sits
    ``2^{b_k}`` away from the boundary of ``Q_{k+1}`` and ``c_k`` lies in the
    shell ``Q_k minus Q_{k-1}``.  A dyadic cube holding the points
    ``c_k..c_{k'}`` has level above ``b_{k'-1}``, hence weight factor below
    ``2^{1-k'}``; for ``p >= 1`` every such cube contributes at most
    ``n^{-1/p}``, and so ``||x^(n)|m_{phi,p}|| = n^{-1/p}``.
    """
    if p < 1:
        raise QuasiBanachUnsupported("this construction needs p >= 1")
    if not 0 < eps < 1:
        raise ValueError("eps must lie in (0, 1)")
    if n < 1:
        raise ValueError("n must be at least 1")
    require_gp(weight, p)
    _need_limit_zero(weight, p)
    b = ss_levels(weight, p, n)
    d = weight.dim
    corners = [sum(1 << b[i] for i in range(k, n - 1)) for k in range(n)]
    value = n ** (-1.0 / p)
    seq = SparseSequence(d, {(c,) * d: value for c in corners})
    certs = (
        Certificate("ss-mps-bound", (1.0 + eps) * value, "le"),
        Certificate("ss-lp-lower", 1.0 - eps, "ge", metric="lp"),
    )
    return WitnessBundle("ss-demo", seq, certs, n, {"levels": b, "eps": eps})


# failure of continuity


def embedding_failure_witness(
    w1: Weight, p1: float, w2: Weight, p2: float, L: int, *, budget: int = ENUMERATION_BUDGET
) -> list[WitnessBundle]:
    """Sequences ``lambda^(l)``, ``l = 1..L``, of norm 1 in the source space and
    target norm at least ``c l`` when the embedding is not continuous.

    With ``rho = min(1, p1/p2)``, ``j_l`` is the least level above
    ``j_{l-1}`` with ``phi2(2^j)/phi1(2^j)^rho >= l``.

    * ``p1 >= p2``: ``lambda = 1_{Q_{-j,0}} / phi1(2^j)``, ``c = 1``.
    * ``p1 < p2``: the even distribution of ``floor(2^{jd} phi1(2^j)^{-p1})``
      ones in ``Q_{-j,0}``, normalized in the source space.  Its source norm
      before scaling is at most ``2^{1/p1}`` and its target norm at least
      ``2^{-1/p2} phi2/phi1^rho``, so ``c = 2^{-1/p1 - 1/p2}``.
    """
    verdict = is_continuous(w1, p1, w2, p2)
    if verdict.continuous:
        raise NotContinuous("the embedding is continuous; no failure witness exists")
    rho = verdict.rho
    c = 1.0 if rho == 1.0 else 2.0 ** (-1.0 / p1 - 1.0 / p2)
    d = w1.dim
    out: list[WitnessBundle] = []
    j = -1
    for ell in range(1, L + 1):
        j = _first_level(lambda k: w2.eval(k) >= ell * w1.eval(k) ** rho * (1.0 - REL_TOL), j + 1)
        if rho == 1.0:
            cells = unit_cubes_in(DyadicCube(j, (0,) * d), budget)
            seq = SparseSequence.indicator(cells, 1.0 / w1.eval(j), d)
        else:
            if (1 << (j * d)) > budget:
                raise BudgetExceeded(f"level {j} exceeds the enumeration budget")
            raw = distribute_even(w1, p1, j, j).sequence
            seq = raw.scale(1.0 / norm_mps(raw, w1, p1).value)
        out.append(
            WitnessBundle(
                "embedding-failure",
                seq,
                (Certificate("target-growth", c * ell, "ge"),),
                ell,
                {"level": j, "constant": c},
            )
        )
    return out
