"""Rough equality and the poset of rough classes.

Two subsets are roughly equal when their lower and upper proto
approximations coincide.  Every class is keyed by that shared pair, and the
class order is componentwise inclusion of the pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Collection, Iterable, Optional

import numpy as np

from roughprax import caps
from roughprax.approx import NeighborhoodMap, approximation_table, lower_proto, upper_proto
from roughprax.bits import canonical_key, is_subset

ATOM_TYPES = ("type-0", "type-1", "type-2", "unclassified")


def rough_equal(n: NeighborhoodMap, a: int, b: int) -> bool:
    return lower_proto(n, a) == lower_proto(n, b) and upper_proto(n, a) == upper_proto(n, b)


def rough_class_members(n: NeighborhoodMap, a: int) -> tuple[int, ...]:
    """The full class of ``a``: every subset roughly equal to it, canonically ordered."""
    lo, up = lower_proto(n, a), upper_proto(n, a)
    # Members lie between the two approximations only for reflexive relations,
    # so scan the whole powerset.
    return tuple(sorted(
        (b for b in range(1 << n.size) if lower_proto(n, b) == lo and upper_proto(n, b) == up),
        key=canonical_key,
    ))


@dataclass(frozen=True)
class RoughClass:
    lower: int
    upper: int
    members: tuple[int, ...]

    @property
    def key(self) -> tuple[int, int]:
        return (self.lower, self.upper)

    def __len__(self) -> int:
        return len(self.members)


class QuotientPoset:
    """The powerset modulo rough equality.

    Classes are referred to by their position in ``classes``, which is
    ordered by total approximation size and then by the pair itself, so the
    class of the empty set comes first.
    """

    def __init__(self, n: NeighborhoodMap, lower: list[int], upper: list[int]):
        self.neighborhoods = n
        self.lower_table = lower
        self.upper_table = upper
        groups: dict[tuple[int, int], list[int]] = {}
        for a in range(1 << n.size):
            groups.setdefault((lower[a], upper[a]), []).append(a)
        keys = sorted(groups, key=lambda k: (k[0].bit_count() + k[1].bit_count(), k[0], k[1]))
        self.classes: tuple[RoughClass, ...] = tuple(
            RoughClass(lo, up, tuple(sorted(groups[(lo, up)], key=canonical_key))) for lo, up in keys
        )
        self._index = {c.key: i for i, c in enumerate(self.classes)}
        self._lo = np.array([c.lower for c in self.classes], dtype=np.int64)
        self._up = np.array([c.upper for c in self.classes], dtype=np.int64)

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, a: int) -> int:
        return self._index[(self.lower_table[a], self.upper_table[a])]

    def index_of(self, lower: int, upper: int) -> Optional[int]:
        return self._index.get((lower, upper))

    @property
    def bottom(self) -> int:
        return self.class_of(0)

    @property
    def top(self) -> int:
        return self.class_of(self.neighborhoods.full)

    def leq(self, i: int, j: int) -> bool:
        a, b = self.classes[i], self.classes[j]
        return is_subset(a.lower, b.lower) and is_subset(a.upper, b.upper)

    def leq_memberwise(self, i: int, j: int) -> bool:
        """The order as originally quantified over every pair of members."""
        lo, up = self.lower_table, self.upper_table
        return all(
            is_subset(lo[a], lo[b]) and is_subset(up[a], up[b])
            for a in self.classes[i].members
            for b in self.classes[j].members
        )

    def _below_mask(self, j: int) -> np.ndarray:
        """Boolean vector of classes ``<= j``."""
        c = self.classes[j]
        return ((self._lo & ~c.lower) == 0) & ((self._up & ~c.upper) == 0)

    def _above_mask(self, i: int) -> np.ndarray:
        c = self.classes[i]
        return ((c.lower & ~self._lo) == 0) & ((c.upper & ~self._up) == 0)

    def down_set(self, j: int) -> list[int]:
        return np.flatnonzero(self._below_mask(j)).tolist()

    def up_set(self, i: int) -> list[int]:
        return np.flatnonzero(self._above_mask(i)).tolist()

    def upper_bounds(self, i: int, j: int) -> list[int]:
        return np.flatnonzero(self._above_mask(i) & self._above_mask(j)).tolist()

    def lower_bounds(self, i: int, j: int) -> list[int]:
        return np.flatnonzero(self._below_mask(i) & self._below_mask(j)).tolist()

    @cached_property
    def atoms(self) -> tuple[int, ...]:
        """Classes covering the bottom class."""
        bot = self.bottom
        out = []
        for j in range(len(self.classes)):
            if j == bot or not self.leq(bot, j):
                continue
            below = self._below_mask(j)
            below[j] = False
            below[bot] = False
            if not below.any():
                out.append(j)
        return tuple(out)

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Cover pairs ``(i, j)`` with ``i < j`` and nothing strictly between."""
        k = len(self.classes)
        edges = []
        for i in range(k):
            above = self._above_mask(i)
            above[i] = False
            ups = np.flatnonzero(above)
            if ups.size == 0:
                continue
            lo, up = self._lo[ups], self._up[ups]
            # ups[b] is not a cover when some other ups[a] lies strictly below it.
            under = ((lo[:, None] & ~lo[None, :]) == 0) & ((up[:, None] & ~up[None, :]) == 0)
            np.fill_diagonal(under, False)
            for b in np.flatnonzero(~under.any(axis=0)):
                edges.append((i, int(ups[b])))
        return tuple(edges)

    def atom_type(self, j: int) -> str:
        return classify_atom(self.neighborhoods, self.classes[j], self.lower_table)


def quotient(n: NeighborhoodMap) -> QuotientPoset:
    caps.require("quotient", n.size, "quotient poset")
    return QuotientPoset(n, approximation_table(n, "L"), approximation_table(n, "U"))


def is_partial_order(h: QuotientPoset) -> bool:
    k = len(h)
    for i in range(k):
        for j in range(k):
            if i != j and h.leq(i, j) and h.leq(j, i):
                return False
    return True


def is_s_ideal(h: QuotientPoset, k: Collection[int]) -> bool:
    """Downward closed, and every pair has a common upper bound inside ``k``."""
    ks = set(k)
    if not ks:
        return False
    for a in ks:
        if not set(h.down_set(a)) <= ks:
            return False
    for a in ks:
        for b in ks:
            if not ks.intersection(h.upper_bounds(a, b)):
                return False
    return True


def _isolated_neighborhood(n: NeighborhoodMap, g: int) -> bool:
    return all(h == g or h & g == 0 for h in n.plain)


def classify_atom(n: NeighborhoodMap, c: RoughClass, lower_table: list[int]) -> str:
    """Tag an atom class with its type, falling back to ``"unclassified"``.

    * type-0: the non-empty proper subsets of an isolated neighbourhood,
      or the class of that neighbourhood itself when it is a singleton
      (there are no non-empty proper subsets then).
    * type-1: every member has empty lower approximation and every
      non-empty subset of a member is a member, so the class runs from
      just above the empty set up to its maximal members.
    * type-2: every member has empty lower approximation.
    """
    members = set(c.members)
    for g in n.distinct_plain:
        if not g or not _isolated_neighborhood(n, g):
            continue
        if g.bit_count() == 1:
            if members == {g}:
                return "type-0"
        elif members == {s for s in _nonempty_proper_subsets(g)}:
            return "type-0"
    if any(lower_table[a] for a in c.members):
        return "unclassified"
    if all(s in members for m in _maximal(c.members) for s in _nonempty_subsets(m)):
        return "type-1"
    return "type-2"


def _nonempty_subsets(mask: int) -> Iterable[int]:
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def _nonempty_proper_subsets(mask: int) -> Iterable[int]:
    for s in _nonempty_subsets(mask):
        if s != mask:
            yield s


def _maximal(sets: Iterable[int]) -> list[int]:
    sets = list(sets)
    return [a for a in sets if not any(b != a and a & ~b == 0 for b in sets)]


def check_atomicity(h: QuotientPoset) -> tuple[bool, Optional[int]]:
    """Every class above the bottom is an atom or lies above one.

    Returns ``(True, None)`` or ``(False, witness_class)``.
    """
    bot = h.bottom
    atoms = h.atoms
    for j in range(len(h)):
        if j == bot or not h.leq(bot, j):
            continue
        if not any(h.leq(a, j) for a in atoms):
            return False, j
    return True, None


def atoms_with_types(h: QuotientPoset) -> list[tuple[RoughClass, str]]:
    return [(h.classes[j], h.atom_type(j)) for j in h.atoms]
