"""Naive reference implementations used to cross-check the bitmask code.

Everything here works on ``frozenset`` values and translates each
definition quantifier by quantifier.  Nothing is shared with the main
implementation except the relation's pair set.
"""

from __future__ import annotations

from itertools import chain, combinations
from typing import Callable, FrozenSet, Iterable

Set = FrozenSet[int]
Pairs = FrozenSet[tuple[int, int]]


class Oracle:
    def __init__(self, size: int, pairs: Iterable[tuple[int, int]]):
        self.size = size
        self.points = frozenset(range(size))
        self.pairs: Pairs = frozenset(pairs)
        self.powerset: list[Set] = [
            frozenset(c) for c in chain.from_iterable(combinations(range(size), k) for k in range(size + 1))
        ]

    # neighbourhoods, with [x] = {y : R y x}
    def nbhd(self, x: int) -> Set:
        return frozenset(y for y in self.points if (y, x) in self.pairs)

    def nbhd_o(self, x: int) -> Set:
        return frozenset(y for y in self.points if (y, x) in self.pairs and (x, y) in self.pairs)

    def _granules(self, symm: bool) -> list[Set]:
        f = self.nbhd_o if symm else self.nbhd
        return [f(x) for x in self.points]

    def lower(self, a: Set, symm: bool = False) -> Set:
        out: set[int] = set()
        for g in self._granules(symm):
            if g <= a:
                out |= g
        return frozenset(out)

    def upper(self, a: Set, symm: bool = False) -> Set:
        out: set[int] = set()
        for g in self._granules(symm):
            if g & a:
                out |= g
        return frozenset(out)

    def lower_point(self, a: Set) -> Set:
        return frozenset(x for x in self.points if self.nbhd(x) <= a)

    def upper_point(self, a: Set) -> Set:
        return frozenset(x for x in self.points if self.nbhd(x) & a)

    def complement(self, a: Set) -> Set:
        return self.points - a

    def operator(self, token: str) -> Callable[[Set], Set]:
        return {
            "L": self.lower,
            "U": self.upper,
            "LO": lambda a: self.lower(a, True),
            "UO": lambda a: self.upper(a, True),
            "LP": self.lower_point,
            "UP": self.upper_point,
            "C": self.complement,
        }[token]

    # relation predicates
    def proto_transitive_direct(self) -> bool:
        """Pairwise-distinct x, y, z with both-way links x-y and y-z force x-z both ways."""
        both = {(x, y) for (x, y) in self.pairs if (y, x) in self.pairs}
        for x in self.points:
            for y in self.points:
                for z in self.points:
                    if len({x, y, z}) < 3:
                        continue
                    if (x, y) in both and (y, z) in both and (x, z) not in both:
                        return False
        return True

    def compose(self, other: Iterable[tuple[int, int]]) -> Pairs:
        other = frozenset(other)
        return frozenset(
            (x, z) for (x, y) in self.pairs for (w, z) in other if y == w
        )

    # definites and rough classes
    def definite(self, test: Callable[[Set], bool]) -> list[Set]:
        return [a for a in self.powerset if test(a)]

    def rough_equal(self, a: Set, b: Set) -> bool:
        return self.lower(a) == self.lower(b) and self.upper(a) == self.upper(b)

    def classes(self) -> list[list[Set]]:
        out: list[list[Set]] = []
        for a in self.powerset:
            for c in out:
                if self.rough_equal(c[0], a):
                    c.append(a)
                    break
            else:
                out.append([a])
        return out

    def atoms(self) -> list[list[Set]]:
        """Classes covering the class of the empty set, using the member-wise order."""
        cls = self.classes()
        lo = {a: self.lower(a) for a in self.powerset}
        up = {a: self.upper(a) for a in self.powerset}

        def leq(p: list[Set], q: list[Set]) -> bool:
            return all(lo[a] <= lo[b] and up[a] <= up[b] for a in p for b in q)

        k = len(cls)
        order = [[leq(cls[i], cls[j]) for j in range(k)] for i in range(k)]
        bot = next(i for i, c in enumerate(cls) if frozenset() in c)
        out = []
        for j in range(k):
            if j == bot or not order[bot][j]:
                continue
            if not any(i not in (bot, j) and order[bot][i] and order[i][j] for i in range(k)):
                out.append(cls[j])
        return out

    # critical points
    def critical(self) -> dict[str, set]:
        ps = self.powerset
        lo = {a: self.lower(a) for a in ps}
        up = {a: self.upper(a) for a in ps}
        weak_upper, upper, weak_lower, lower_rel = set(), set(), set(), set()
        lower_abs = set()
        for x in ps:
            sups = [y for y in ps if x < y]
            subs = [y for y in ps if y < x]
            for z in subs:
                ys = [y for y in sups if lo[y] == z]
                vs = [v for v in subs if lo[v] == z]
                if all(up[x] < up[y] for y in ys):
                    weak_upper.add((x, z))
                if all(up[v] == up[x] and up[x] < up[y] for y in ys for v in vs):
                    upper.add((x, z))
            for z in sups:
                ys = [y for y in subs if up[y] == z]
                vs = [v for v in sups if up[v] == z]
                if all(lo[y] < lo[x] for y in ys):
                    weak_lower.add((x, z))
                if all(lo[y] < lo[x] and lo[x] == lo[v] for y in ys for v in vs):
                    lower_rel.add((x, z))
            if all(lo[y] < lo[x] for y in subs):
                lower_abs.add(x)
        bicritical = set()
        for b in ps:
            for a in ps:
                if not a < b:
                    continue
                inner = [x for x in ps if a < x < b]
                ok = all(
                    up[x] == up[y] and lo[x] == lo[y] and up[x] < up[b] and lo[a] < lo[x]
                    for x in inner for y in inner if x <= y
                )
                if ok:
                    bicritical.add((a, b))
        uc = {x for x, _ in upper}
        return {
            "weak_upper": weak_upper,
            "upper": upper,
            "bicritical": bicritical,
            "weak_lower": weak_lower,
            "lower_relative": lower_rel,
            "lower_absolute": lower_abs,
            "critical": {x for x in lower_abs if x in uc},
        }


def to_frozenset(mask: int) -> Set:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def to_mask(s: Iterable[int]) -> int:
    out = 0
    for i in s:
        out |= 1 << i
    return out
