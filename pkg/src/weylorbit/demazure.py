"""The monoid M(W) on symbols m(w) and its involution-step dynamics.

Defining relations: m(s)m(w) = m(sw) when l(sw) > l(w), and m(s)m(w) = m(w)
otherwise. Stepping an involution w by a simple reflection s falls into
exactly one of four length cases, each constraining the possible next value
to a small candidate set of involutions; which candidate is realized depends
on stabilizer geometry that this module deliberately does not model. (In the
orbit-geometry literature those finer cases are labelled I, IIa, IIb, IIIa,
IIIb, IVa, IVb; only their shadow on lengths is computable here.)
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .rootsys import RootSystem, RootSystemType
from .weyl import (
    WeylElement,
    identity,
    inverse,
    is_involution,
    lmul_s,
    multiply,
    reduced_word,
    rmul_s,
    simple_reflection,
)

CASE_DESCRIPTIONS = {
    1: "l(sws) = l(w) + 2",
    2: "l(sw) > l(w) and l(sws) = l(w)",
    3: "l(sw) < l(w) and l(sws) = l(w)",
    4: "l(sws) = l(w) - 2",
}


@dataclass(frozen=True)
class StepOutcome:
    """One involution step: the length case and the admissible next values."""

    case_id: int
    candidates: frozenset[WeylElement]


def demazure_mul(w1: WeylElement, w2: WeylElement) -> WeylElement:
    """The w with m(w) = m(w1) m(w2).

    Peels a reduced word of w1 from the right onto w2 using the defining
    relations; the result is never shorter than either factor.
    """
    if w1.rs.rstype != w2.rs.rstype:
        raise ValueError("elements live in different root systems")
    cur = w2
    cur_inv = inverse(w2)
    for a in reversed(reduced_word(w1)):
        # l(s_a cur) > l(cur) iff cur^-1(alpha_a) > 0; tracking the inverse
        # makes the test a column sign check.
        if all(c >= 0 for c in cur_inv.column(a)):
            cur = lmul_s(cur, a)
            cur_inv = rmul_s(cur_inv, a)
    return cur


def involution_step(w: WeylElement, i: int) -> StepOutcome:
    """Classify the step (w, s_i) for an involution w and list candidates.

    Cases 2 and 3 come with the commutation s w = w s; this is recomputed and
    enforced rather than assumed.
    """
    if not is_involution(w):
        raise ValueError("involution_step requires an involution")
    rs = w.rs
    rs._check_index(i)
    s = simple_reflection(rs, i)
    sw = multiply(s, w)
    w_alpha_up = all(c >= 0 for c in w.column(i))
    # w is an involution, so l(sw) = l(ws) and the sign of w(alpha_i) settles both.
    sw_alpha_up = all(c >= 0 for c in sw.column(i))
    if w_alpha_up:
        if sw_alpha_up:
            sws = rmul_s(sw, i)
            return StepOutcome(1, frozenset({sws}))
        _require_commutation(w, s, case=2)
        return StepOutcome(2, frozenset({sw, w}))
    if sw_alpha_up:
        _require_commutation(w, s, case=3)
        ws = rmul_s(w, i)
        return StepOutcome(3, frozenset({w, ws}))
    return StepOutcome(4, frozenset({w}))


def _require_commutation(w: WeylElement, s: WeylElement, case: int) -> None:
    if multiply(s, w) != multiply(w, s):
        raise AssertionError(
            f"case {case} reached without sw = ws; the input was not an involution"
        )


def weyl_group_order(rstype: RootSystemType) -> int:
    fam, n = rstype.family, rstype.rank
    if fam == "A":
        return factorial(n + 1)
    if fam in "BC":
        return 2**n * factorial(n)
    if fam == "D":
        return 2 ** (n - 1) * factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(fam, n)]


MAX_REACHABILITY_RANK = 4


def involution_reachability(rs: RootSystem) -> frozenset[WeylElement]:
    """Closure of {1} under taking any candidate of any involution step.

    Guarded to small ranks; the closure visits a subset of the involutions of
    W, typically a large one.
    """
    if rs.rank > MAX_REACHABILITY_RANK:
        raise ValueError(
            f"reachability closure is guarded to rank <= {MAX_REACHABILITY_RANK}; "
            f"|W({rs.rstype})| = {weyl_group_order(rs.rstype)} is too large"
        )
    seen = {identity(rs)}
    frontier = [identity(rs)]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(1, rs.rank + 1):
                for cand in involution_step(w, i).candidates:
                    if cand not in seen:
                        seen.add(cand)
                        nxt.append(cand)
        frontier = nxt
    return frozenset(seen)
