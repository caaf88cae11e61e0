"""Whole-powerset lookup tables for one neighbourhood map.

Exhaustive checks evaluate the same approximations many times; these
tables compute each operator once per subset and share the result.
"""

from __future__ import annotations

from functools import cached_property

from roughprax.approx import NeighborhoodMap, approximation_table
from roughprax.bits import is_proper_subset


class Tables:
    def __init__(self, n: NeighborhoodMap):
        self.n = n
        self.size = n.size
        self.full = n.full
        self.count = 1 << n.size

    @cached_property
    def lower(self) -> list[int]:
        return approximation_table(self.n, "L")

    @cached_property
    def upper(self) -> list[int]:
        return approximation_table(self.n, "U")

    @cached_property
    def lower_symm(self) -> list[int]:
        return approximation_table(self.n, "LO")

    @cached_property
    def upper_symm(self) -> list[int]:
        return approximation_table(self.n, "UO")

    @cached_property
    def pointwise_lower(self) -> list[int]:
        return approximation_table(self.n, "LP")

    @cached_property
    def pointwise_upper(self) -> list[int]:
        return approximation_table(self.n, "UP")

    @cached_property
    def class_id(self) -> list[int]:
        """Rough class label of every subset (labels are arbitrary but stable)."""
        labels: dict[tuple[int, int], int] = {}
        lo, up = self.lower, self.upper
        return [labels.setdefault((lo[a], up[a]), len(labels)) for a in range(self.count)]

    @cached_property
    def class_size(self) -> list[int]:
        sizes = [0] * (max(self.class_id) + 1)
        for c in self.class_id:
            sizes[c] += 1
        return sizes

    @cached_property
    def lu_definite(self) -> list[int]:
        lo, up = self.lower, self.upper
        return [a for a in range(self.count) if lo[a] == a and up[a] == a]

    @cached_property
    def lu_definite_set(self) -> frozenset[int]:
        return frozenset(self.lu_definite)

    @cached_property
    def lu_covers(self) -> list[tuple[int, int]]:
        """Cover pairs ``(x, y)`` of the inclusion order on lu-definite sets."""
        d = self.lu_definite
        out = []
        for x in d:
            above = [y for y in d if is_proper_subset(x, y)]
            for y in above:
                if not any(is_proper_subset(w, y) for w in above if w != y):
                    out.append((x, y))
        return out

    def is_requal(self, members) -> bool:
        cid = self.class_id
        it = iter(members)
        first = next(it, None)
        if first is None:
            return True
        c = cid[first]
        return all(cid[m] == c for m in it)

    def is_full(self, members) -> bool:
        """``members`` (duplicate-free) is exactly one whole rough class."""
        members = list(members)
        if not members or not self.is_requal(members):
            return False
        return len(members) == self.class_size[self.class_id[members[0]]]
