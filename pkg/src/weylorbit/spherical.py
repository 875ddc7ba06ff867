"""Admissible fixed-root subsets Pi and the orbit dimension formula.

For a subset Pi of the simple roots, the candidate element is w = w0 * w_Pi.
Pi is admissible when w fixes exactly the simple roots in Pi; the attached
dimension is l(w) + rk(1 - w). A second, diagram-level filter removes
isolated components of Pi that admit a same-length neighbour fixed by -w0 and
orthogonal to the rest of Pi.

Every subset evaluation is a pure function of the immutable root system, so
the enumeration is embarrassingly parallel if a caller wants it to be.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import intmat
from .rootsys import RootSystem, Vector, subsystem_positive_roots
from .weyl import (
    WeylElement,
    apply,
    fixed_simples,
    longest_element,
    multiply,
    rank_one_minus,
    reduced_word,
    w0,
)

ENUMERATION_MAX_RANK = 8


@dataclass(frozen=True)
class SphericalDatum:
    """One admissible Pi with its element w = w0 * w_Pi and its invariants."""

    pi: frozenset[int]
    w: WeylElement
    length: int
    rank_one_minus: int
    dimension: int
    central: bool

    def as_dict(self) -> dict:
        return {
            "type": str(self.w.rs.rstype),
            "pi": sorted(self.pi),
            "w_word": list(reduced_word(self.w)),
            "length": self.length,
            "rank": self.rank_one_minus,
            "dimension": self.dimension,
            "central": self.central,
        }


def candidate_element(rs: RootSystem, pi) -> WeylElement:
    """w0 * w_Pi, cached per subset."""
    pi = frozenset(pi)
    key = ("w0wpi", pi)
    if key not in rs._cache:
        rs._cache[key] = multiply(w0(rs), longest_element(rs, pi))
    return rs._cache[key]


def is_admissible(rs: RootSystem, pi) -> bool:
    """True when w0 * w_Pi fixes exactly the simple roots indexed by pi."""
    pi = frozenset(pi)
    for i in pi:
        rs._check_index(i)
    return fixed_simples(candidate_element(rs, pi)) == pi


def _adjacent(rs: RootSystem, i: int, j: int) -> bool:
    return i != j and rs.cartan[i - 1][j - 1] != 0


def _components(rs: RootSystem, pi: frozenset[int]) -> list[frozenset[int]]:
    remaining = set(pi)
    comps = []
    while remaining:
        seed = remaining.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            a = frontier.pop()
            for b in list(remaining):
                if _adjacent(rs, a, b):
                    remaining.discard(b)
                    comp.add(b)
                    frontier.append(b)
        comps.append(frozenset(comp))
    return comps


def passes_quali_no(rs: RootSystem, pi) -> tuple[bool, tuple[int, int] | None]:
    """Diagram filter on isolated components of an admissible pi.

    Fails exactly when some isolated component {a} admits a distinct simple b
    of the same length with w0(alpha_b) = -alpha_b, b adjacent to a, and b
    orthogonal to every other element of pi; the witness (a, b) is returned
    with the failure.
    """
    pi = frozenset(pi)
    long = w0(rs)
    for comp in _components(rs, pi):
        if len(comp) != 1:
            continue
        (a,) = comp
        alpha = rs.simples[a - 1]
        for b in range(1, rs.rank + 1):
            if b == a:
                continue
            beta = rs.simples[b - 1]
            if rs.length_class(beta) != rs.length_class(alpha):
                continue
            if apply(long, beta) != tuple(-c for c in beta):
                continue
            if rs.inner(alpha, beta) == 0:
                continue
            if all(rs.inner(beta, rs.simples[c - 1]) == 0 for c in pi - {a}):
                return False, (a, b)
    return True, None


def enumerate_pi(rs: RootSystem) -> list[SphericalDatum]:
    """All admissible pi passing both filters, sorted by dimension.

    The empty set and the full diagram always appear; the latter is flagged
    central (its element is the identity).
    """
    if rs.rank > ENUMERATION_MAX_RANK:
        raise ValueError(
            f"enumeration is guarded to rank <= {ENUMERATION_MAX_RANK}, "
            f"got {rs.rstype}"
        )
    indices = range(1, rs.rank + 1)
    found = []
    for size in range(rs.rank + 1):
        for combo in combinations(indices, size):
            pi = frozenset(combo)
            if not is_admissible(rs, pi):
                continue
            ok, _ = passes_quali_no(rs, pi)
            if not ok:
                continue
            found.append(_datum(rs, pi))
    found.sort(key=lambda d: (d.dimension, len(d.pi), sorted(d.pi)))
    full = frozenset(indices)
    if not any(d.pi == frozenset() for d in found) or not any(d.pi == full for d in found):
        raise AssertionError("the empty set and the full diagram must always pass")
    return found


def _datum(rs: RootSystem, pi: frozenset[int]) -> SphericalDatum:
    w = candidate_element(rs, pi)
    rk = rank_one_minus(w)
    return SphericalDatum(
        pi=pi,
        w=w,
        length=w.length,
        rank_one_minus=rk,
        dimension=w.length + rk,
        central=(len(pi) == rs.rank),
    )


def dimension(rs: RootSystem, pi) -> int:
    """l(w0 w_Pi) + rk(1 - w0 w_Pi) for an admissible pi."""
    pi = frozenset(pi)
    if not is_admissible(rs, pi):
        raise ValueError(f"pi={sorted(pi)} is not admissible in {rs.rstype}")
    return _datum(rs, pi).dimension


def spherical_datum(rs: RootSystem, pi) -> SphericalDatum:
    pi = frozenset(pi)
    if not is_admissible(rs, pi):
        raise ValueError(f"pi={sorted(pi)} is not admissible in {rs.rstype}")
    return _datum(rs, pi)


def _is_minus_identity(w: WeylElement) -> bool:
    n = w.rs.rank
    return w.rows == tuple(
        tuple(-1 if i == j else 0 for j in range(n)) for i in range(n)
    )


def toro1_rank(rs: RootSystem, pi) -> int:
    """rank - |pi|, valid when w0 = -1; cross-checked against the matrix rank."""
    if not _is_minus_identity(w0(rs)):
        raise ValueError(
            f"w0 is not -1 in {rs.rstype}; use rank_one_minus directly"
        )
    pi = frozenset(pi)
    if not is_admissible(rs, pi):
        raise ValueError(f"pi={sorted(pi)} is not admissible in {rs.rstype}")
    shortcut = rs.rank - len(pi)
    direct = rank_one_minus(candidate_element(rs, pi))
    if shortcut != direct:
        raise AssertionError(
            f"rank shortcut {shortcut} disagrees with matrix rank {direct} "
            f"for pi={sorted(pi)} in {rs.rstype}"
        )
    return shortcut


def neg_eigenlattice_basis(rs: RootSystem, pi) -> list[Vector]:
    """Primitive basis of Ker(1 + w) inside the root lattice, w = w0 w_Pi."""
    pi = frozenset(pi)
    if not is_admissible(rs, pi):
        raise ValueError(f"pi={sorted(pi)} is not admissible in {rs.rstype}")
    w = candidate_element(rs, pi)
    n = rs.rank
    one_plus = [
        [(1 if i == j else 0) + w.rows[i][j] for j in range(n)] for i in range(n)
    ]
    return intmat.kernel_basis(one_plus)


def is_theta_symmetric(rs: RootSystem, v: Vector) -> bool:
    """-w0 v = v."""
    return apply(w0(rs), tuple(v)) == tuple(-c for c in v)


def is_dominant(rs: RootSystem, v: Vector) -> bool:
    """All Cartan pairings <v, alpha_i^vee> are nonnegative."""
    v = tuple(v)
    return all(rs.pairing(v, i) >= 0 for i in range(1, rs.rank + 1))


def inversion_set_is_complement(rs: RootSystem, pi) -> bool:
    """Inversions of w0 w_Pi = positive roots outside the pi subsystem."""
    pi = frozenset(pi)
    w = candidate_element(rs, pi)
    sub = set(subsystem_positive_roots(rs, pi))
    for a in rs.positive_roots:
        inverted = any(c < 0 for c in apply(w, a))
        if inverted == (a in sub):
            return False
    return True


def type_a_cascade(rs: RootSystem, steps: int) -> WeylElement:
    """Product of reflections in the nested orthogonal highest-root chain.

    For type A_n the chain is beta_k = alpha_k + ... + alpha_{n-k+1}; the
    product of the first ``steps`` reflections equals w0 w_Pi for the interval
    pi starting at steps + 1.
    """
    if rs.rstype.family != "A":
        raise ValueError("the cascade construction is specific to type A")
    from .weyl import identity, reflection

    n = rs.rank
    out = identity(rs)
    for k in range(1, steps + 1):
        lo, hi = k, n - k + 1
        if lo > hi:
            raise ValueError(f"cascade exhausted after {k - 1} steps in {rs.rstype}")
        beta = tuple(1 if lo <= j + 1 <= hi else 0 for j in range(n))
        out = multiply(out, reflection(rs, beta))
    return out
