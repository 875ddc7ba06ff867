"""Finite crystallographic root systems of types A-G in Bourbaki numbering.

Roots and lattice vectors are integer coefficient tuples over the simple-root
basis; index 0 of a tuple is the coefficient of alpha_1. All *public* indices
(simple roots, word letters, subsets Pi) are 1-based, matching the Bourbaki
plates.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

Vector = tuple[int, ...]

LONG = "long"
SHORT = "short"

_RANK_RULES = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True)
class RootSystemType:
    """A simple type such as B3: family letter plus rank."""

    family: str
    rank: int

    def __post_init__(self):
        rule = _RANK_RULES.get(self.family)
        if rule is None:
            raise ValueError(f"unknown family {self.family!r}, expected one of A-G")
        if not isinstance(self.rank, int) or not rule(self.rank):
            raise ValueError(f"rank {self.rank} is not valid for family {self.family}")

    @classmethod
    def from_string(cls, text: str) -> "RootSystemType":
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise ValueError(f"cannot parse root system type {text!r}, expected e.g. 'B3'")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _dynkin_bonds(rstype: RootSystemType) -> list[tuple[int, int, int, int]]:
    """Bonds (i, j, c_ij, c_ji), 1-based, c_ij = <alpha_i, alpha_j^vee>."""
    fam, n = rstype.family, rstype.rank
    single = -1
    if fam == "A":
        return [(i, i + 1, single, single) for i in range(1, n)]
    if fam == "B":
        bonds = [(i, i + 1, single, single) for i in range(1, n - 1)]
        bonds.append((n - 1, n, -2, -1))
        return bonds
    if fam == "C":
        bonds = [(i, i + 1, single, single) for i in range(1, n - 1)]
        bonds.append((n - 1, n, -1, -2))
        return bonds
    if fam == "D":
        bonds = [(i, i + 1, single, single) for i in range(1, n - 2)]
        bonds.append((n - 2, n - 1, single, single))
        bonds.append((n - 2, n, single, single))
        return bonds
    if fam == "E":
        bonds = [(1, 3, single, single), (2, 4, single, single)]
        bonds += [(i, i + 1, single, single) for i in range(3, n)]
        return bonds
    if fam == "F":
        return [(1, 2, single, single), (2, 3, -2, -1), (3, 4, single, single)]
    if fam == "G":
        return [(1, 2, -1, -3)]
    raise AssertionError(fam)


def _simple_norms(rstype: RootSystemType) -> tuple[int, ...]:
    """Squared lengths of the simple roots, scaled so short roots have norm 2."""
    fam, n = rstype.family, rstype.rank
    if fam in "ADE":
        return (2,) * n
    if fam == "B":
        return (4,) * (n - 1) + (2,)
    if fam == "C":
        return (2,) * (n - 1) + (4,)
    if fam == "F":
        return (4, 4, 2, 2)
    if fam == "G":
        return (2, 6)
    raise AssertionError(fam)


class RootSystem:
    """Immutable root table for one simple type.

    Built through :func:`build`; all queries are read-only, so instances are
    safe to share across threads.
    """

    def __init__(self, rstype: RootSystemType):
        self.rstype = rstype
        self.rank = rstype.rank
        n = self.rank

        cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j, cij, cji in _dynkin_bonds(rstype):
            cartan[i - 1][j - 1] = cij
            cartan[j - 1][i - 1] = cji
        self.cartan: tuple[tuple[int, ...], ...] = tuple(map(tuple, cartan))

        norms = _simple_norms(rstype)
        # symmetric form (alpha_i, alpha_j) = c_ij * norm_j / 2, integral by scaling
        sym = [[self.cartan[i][j] * norms[j] // 2 for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                if sym[i][j] != sym[j][i]:
                    raise AssertionError(f"asymmetric form for {rstype}")
        self._sym: tuple[tuple[int, ...], ...] = tuple(map(tuple, sym))

        self.simples: tuple[Vector, ...] = tuple(
            tuple(1 if k == i else 0 for k in range(n)) for i in range(n)
        )
        roots = self._close_under_reflections()
        pos = sorted(
            (r for r in roots if all(c >= 0 for c in r)),
            key=lambda r: (sum(r), r),
        )
        self.positive_roots: tuple[Vector, ...] = tuple(pos)
        self._positive_set = frozenset(pos)
        self._all_roots = frozenset(roots)
        if 2 * len(pos) != len(roots):
            raise AssertionError(f"sign-asymmetric root table for {rstype}")

        max_norm = max(self.norm(r) for r in pos)
        self.lengths: dict[Vector, str] = {}
        for r in pos:
            cls = LONG if self.norm(r) == max_norm else SHORT
            self.lengths[r] = cls
            self.lengths[tuple(-c for c in r)] = cls

        self._highest = pos[-1]
        for r in pos:
            if any(a < b for a, b in zip(self._highest, r)):
                raise AssertionError(f"no coefficientwise-maximal root in {rstype}")

        # scratch space for the weyl module (w0, parabolic longest elements, ...)
        self._cache: dict = {}

    def _close_under_reflections(self) -> set[Vector]:
        roots = set(self.simples)
        frontier = list(self.simples)
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(1, self.rank + 1):
                    img = self.reflect_simple(v, i)
                    if img not in roots:
                        roots.add(img)
                        nxt.append(img)
            frontier = nxt
        for r in roots:
            if not (all(c >= 0 for c in r) or all(c <= 0 for c in r)):
                raise AssertionError(f"mixed-sign root {r} in {self.rstype}")
        return roots

    # -- elementwise queries ------------------------------------------------

    def simple(self, i: int) -> Vector:
        self._check_index(i)
        return self.simples[i - 1]

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple-root index {i} out of range 1..{self.rank}")

    def pairing(self, v: Vector, i: int) -> int:
        """<v, alpha_i^vee> = sum_j v_j <alpha_j, alpha_i^vee>."""
        self._check_index(i)
        col = i - 1
        return sum(v[j] * self.cartan[j][col] for j in range(self.rank))

    def reflect_simple(self, v: Vector, i: int) -> Vector:
        c = self.pairing(v, i)
        if c == 0:
            return v
        out = list(v)
        out[i - 1] -= c
        return tuple(out)

    def inner(self, a: Vector, b: Vector) -> int:
        """Symmetric form, scaled so short roots have squared length 2."""
        return sum(
            a[i] * self._sym[i][j] * b[j]
            for i in range(self.rank)
            for j in range(self.rank)
            if a[i] and self._sym[i][j]
        )

    def norm(self, v: Vector) -> int:
        return self.inner(v, v)

    def is_positive_root(self, v: Vector) -> bool:
        return tuple(v) in self._positive_set

    def length_class(self, v: Vector) -> str:
        r = tuple(v)
        if r not in self.lengths:
            raise ValueError(f"{r} is not a root of {self.rstype}")
        return self.lengths[r]

    def support(self, v: Vector) -> frozenset[int]:
        return frozenset(i + 1 for i, c in enumerate(v) if c)

    def height(self, v: Vector) -> int:
        return sum(v)


@lru_cache(maxsize=None)
def build(rstype: RootSystemType) -> RootSystem:
    """Construct (and memoize) the root system of the given type."""
    return RootSystem(rstype)


def build_named(name: str) -> RootSystem:
    return build(RootSystemType.from_string(name))


def cartan_pairing(rs: RootSystem, v: Vector, i: int) -> int:
    """<v, alpha_i^vee>, linear in v."""
    return rs.pairing(tuple(v), i)


def is_root(rs: RootSystem, v: Vector) -> bool:
    return tuple(v) in rs._all_roots


def root_sum(rs: RootSystem, a: Vector, b: Vector) -> Vector | None:
    """a + b when it is a root, else None."""
    s = tuple(x + y for x, y in zip(a, b))
    return s if s in rs._all_roots else None


def depth(rs: RootSystem, beta: Vector) -> int:
    """Minimal length of an element sending the positive root beta negative.

    Breadth-first search over the simple-reflection action; depth 1 exactly
    for the simple roots.
    """
    beta = tuple(beta)
    if not rs.is_positive_root(beta):
        raise ValueError(f"{beta} is not a positive root of {rs.rstype}")
    seen = {beta}
    queue = deque([(beta, 0)])
    while queue:
        v, d = queue.popleft()
        for i in range(1, rs.rank + 1):
            img = rs.reflect_simple(v, i)
            if any(c < 0 for c in img):
                return d + 1
            if img not in seen:
                seen.add(img)
                queue.append((img, d + 1))
    raise AssertionError("unreachable: every positive root has a negative image")


def subsystem_positive_roots(rs: RootSystem, pi) -> list[Vector]:
    """Positive roots supported on the simple-index subset pi."""
    pi = frozenset(pi)
    for i in pi:
        rs._check_index(i)
    return [r for r in rs.positive_roots if rs.support(r) <= pi]


def highest_root(rs: RootSystem) -> Vector:
    """The coefficientwise-maximal root."""
    return rs._highest
