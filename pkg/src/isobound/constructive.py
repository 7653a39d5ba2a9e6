"""Constructive isolating sets derived from a maximal irredundant set.

Given a maximal irredundant set I and an order k close to the maximum
degree, build_isolating_set assembles a k-isolating set T out of the
partition machinery and certifies |T| against the matching size bound.
All arithmetic is exact: bounds are fractions, comparisons are never
performed on floats.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ParameterError, PreconditionError, RegimeError
from .graph import Graph, bits, components_masks
from .partition import (
    check_delta_regime,
    compute_partition,
    refine_pairs,
    refine_twins,
)
from .predicates import is_k_isolating, is_maximal_irredundant

REGIMES = ("delta_plus_1", "delta", "delta_minus_1", "delta_minus_2")


@dataclass(frozen=True)
class BoundCertificate:
    """Outcome of one constructive run.

    t is the isolating set built from input_set; bound is the certified
    ceiling on |t| for the regime; satisfied records the exact comparison
    len(t) <= bound; isolating_verified is a direct predicate check of t.
    s_param is only set in the delta_minus_1 regime.
    """

    regime: str
    k: int
    input_set: tuple
    t: tuple
    bound: Fraction
    satisfied: bool
    isolating_verified: bool
    s_param: Optional[int] = None


def _certificate(g, regime, k, iset, t, bound, s_param=None):
    t = tuple(sorted(set(t)))
    return BoundCertificate(
        regime=regime,
        k=k,
        input_set=tuple(sorted(iset)),
        t=t,
        bound=bound,
        satisfied=Fraction(len(t)) <= bound,
        isolating_verified=is_k_isolating(g, t, k),
        s_param=s_param,
    )


def build_isolating_set(
    g: Graph, i: Sequence[int], k: int, sprime_reading: str = "i-adjacency"
) -> BoundCertificate:
    """Build a k-isolating set from the maximal irredundant set i.

    Supported orders are k in {delta-2, ..., delta+1} where delta is the
    maximum degree; anything else raises RegimeError. The input set must
    be maximal irredundant (PreconditionError otherwise).
    """
    if k < 1:
        raise ParameterError(f"isolation order must be positive, got {k}")
    if not is_maximal_irredundant(g, i):
        raise PreconditionError("input set is not maximal irredundant")
    iset = tuple(sorted(set(i)))
    delta = g.max_degree()

    if k == delta + 1:
        # only components that are complete on k vertices can host a
        # k-clique when the maximum degree is k - 1; each holds a member
        # of every maximal irredundant set
        t = []
        for comp in components_masks(g):
            if comp.bit_count() != k:
                continue
            if all(g.adj[v] & comp == comp & ~(1 << v) for v in bits(comp)):
                t.append(next(bits(comp)))
        return _certificate(g, "delta_plus_1", k, iset, t, Fraction(len(iset)))

    if k == delta:
        part = compute_partition(g, iset)
        check_delta_regime(g, part, k)
        t = list(part.nhat) + list(part.m) + list(part.q) + list(part.z)
        return _certificate(g, "delta", k, iset, t, Fraction(len(iset)))

    if k == delta - 1:
        part = compute_partition(g, iset)
        ref = refine_pairs(g, iset, part, k, sprime_reading=sprime_reading)
        t = (
            list(part.nhat)
            + list(ref.y)
            + list(ref.x)
            + list(ref.mtilde)
            + list(part.q)
            + list(part.z)
        )
        if ref.s_param == 0:
            bound = Fraction(len(iset))
        else:
            bound = Fraction((3 * delta - 4) * len(iset), 2 * delta - 2) - ref.s_param + 1
        return _certificate(g, "delta_minus_1", k, iset, t, bound, s_param=ref.s_param)

    if k == delta - 2:
        part = compute_partition(g, iset)
        ref = refine_twins(g, iset, part, k)
        t = (
            list(part.nhat)
            + list(ref.mhat)
            + list(ref.mbar)
            + list(ref.qhat)
            + list(ref.qtilde)
            + list(part.z)
            + list(ref.x)
        )
        return _certificate(g, "delta_minus_2", k, iset, t, Fraction(3 * len(iset), 2))

    raise RegimeError(
        f"no constructive regime for k={k} at maximum degree {delta}; "
        f"supported orders are {max(1, delta - 2)}..{delta + 1}"
    )


def isolation_bound(k: int, delta: int, ir_value: int, s: Optional[int] = None) -> Fraction:
    """The certified upper bound on iota_k in terms of ir.

    For k in {delta, delta + 1} the bound is ir itself. For k = delta - 1
    it is (3*delta - 4) * ir / (2*delta - 2), refined to ir when s = 0 and
    to the formula minus (s - 1) when 1 <= s <= delta - 2. For k = delta - 2
    it is 3 * ir / 2. The parameter s is only accepted for k = delta - 1.
    """
    if k < 1:
        raise ParameterError(f"isolation order must be positive, got {k}")
    if delta < 0:
        raise ParameterError(f"maximum degree must be non-negative, got {delta}")
    if ir_value < 0:
        raise ParameterError(f"ir must be non-negative, got {ir_value}")

    if k in (delta, delta + 1):
        if s is not None:
            raise ParameterError("the s parameter only applies when k = delta - 1")
        return Fraction(ir_value)
    if k == delta - 1 and delta >= 2:
        base = Fraction((3 * delta - 4) * ir_value, 2 * delta - 2)
        if s is None:
            return base
        if s == 0:
            return Fraction(ir_value)
        if 1 <= s <= delta - 2:
            return base - s + 1
        raise ParameterError(f"s must lie in 0..{delta - 2}, got {s}")
    if k == delta - 2 and delta >= 3:
        if s is not None:
            raise ParameterError("the s parameter only applies when k = delta - 1")
        return Fraction(3 * ir_value, 2)
    raise RegimeError(
        f"no bound regime for k={k} at maximum degree {delta}; "
        f"supported orders are {max(1, delta - 2)}..{delta + 1}"
    )


def survey_ratios(records):
    """Aggregate iota_k / ir maxima from per-graph records.

    Each record needs delta, ir, and an iota mapping (keys may be ints or
    strings); graph6 is carried along as the witness when present. Records
    with ir = 0 contribute nothing. Returns {"rows": {(delta, k): {"ratio",
    "witness"}}, "monotone": {delta: bool}} with exact fractions.
    """
    rows = {}
    for rec in records:
        irv = rec["ir"]
        if not irv:
            continue
        delta = rec["delta"]
        for key, val in rec["iota"].items():
            kk = int(key)
            ratio = Fraction(val, irv)
            cur = rows.get((delta, kk))
            if cur is None or ratio > cur["ratio"]:
                rows[(delta, kk)] = {"ratio": ratio, "witness": rec.get("graph6")}
    monotone = {}
    for delta in sorted({d for d, _ in rows}):
        ks = sorted(kk for d, kk in rows if d == delta)
        vals = [rows[(delta, kk)]["ratio"] for kk in ks]
        monotone[delta] = all(a >= b for a, b in zip(vals, vals[1:]))
    return {"rows": rows, "monotone": monotone}
