"""Finite universes, binary relations and the transitivity predicates.

A relation is stored as dense adjacency rows: ``rows[x]`` is the bitmask of
every ``y`` with ``R x y``.  Subsets of the universe are plain ``int``
bitmasks over element indices throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from roughprax import caps
from roughprax.bits import indices
from roughprax.errors import FormatError, UniverseMismatch


@dataclass(frozen=True)
class Universe:
    """Ordered finite set of named elements.

    The position of a name is its canonical index; subset bitmasks use bit
    ``i`` for the element at position ``i``.
    """

    elements: tuple[str, ...]

    def __post_init__(self) -> None:
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        seen = set()
        for name in elements:
            if not isinstance(name, str) or not name:
                raise FormatError(f"element names must be non-empty strings, got {name!r}")
            if name in seen:
                raise FormatError(f"duplicate universe element {name!r}")
            seen.add(name)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.elements)}

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def full(self) -> int:
        """Bitmask of the whole universe."""
        return (1 << len(self.elements)) - 1

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise FormatError(f"unknown element {name!r}") from None

    def mask(self, names: Iterable[str]) -> int:
        out = 0
        for name in names:
            out |= 1 << self.index(name)
        return out

    def names(self, mask: int) -> list[str]:
        """Element names of a subset, in canonical order."""
        if mask & ~self.full:
            raise UniverseMismatch(f"subset {mask:#x} has bits outside the universe")
        return [self.elements[i] for i in indices(mask)]

    def parse_subset(self, text: str) -> int:
        """Parse a comma-separated list of names; the empty string is the empty set."""
        names = [part.strip() for part in text.split(",") if part.strip()]
        return self.mask(names)


@dataclass(frozen=True)
class BinaryRelation:
    universe: Universe
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        caps.require("relation", self.universe.size)
        rows = tuple(self.rows)
        if len(rows) != self.universe.size:
            raise UniverseMismatch("row count differs from universe size")
        full = self.universe.full
        for row in rows:
            if row < 0 or row & ~full:
                raise UniverseMismatch("relation row references an index outside the universe")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_pairs(cls, universe: Universe, pairs: Iterable[tuple[int, int]]) -> "BinaryRelation":
        rows = [0] * universe.size
        for x, y in pairs:
            if not (0 <= x < universe.size and 0 <= y < universe.size):
                raise UniverseMismatch(f"pair ({x}, {y}) outside universe of size {universe.size}")
            rows[x] |= 1 << y
        return cls(universe, tuple(rows))

    @classmethod
    def from_named_pairs(cls, universe: Universe, pairs: Iterable[Sequence[str]]) -> "BinaryRelation":
        idx = []
        for pair in pairs:
            if len(pair) != 2:
                raise FormatError(f"pair must have two entries, got {pair!r}")
            idx.append((universe.index(pair[0]), universe.index(pair[1])))
        return cls.from_pairs(universe, idx)

    @classmethod
    def diagonal(cls, universe: Universe) -> "BinaryRelation":
        return cls(universe, tuple(1 << i for i in range(universe.size)))

    @classmethod
    def empty(cls, universe: Universe) -> "BinaryRelation":
        return cls(universe, (0,) * universe.size)

    @classmethod
    def total(cls, universe: Universe) -> "BinaryRelation":
        return cls(universe, (universe.full,) * universe.size)

    @property
    def size(self) -> int:
        return self.universe.size

    def __contains__(self, pair: tuple[int, int]) -> bool:
        x, y = pair
        return bool(self.rows[x] >> y & 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for x, row in enumerate(self.rows):
            for y in indices(row):
                yield (x, y)

    def named_pairs(self) -> list[tuple[str, str]]:
        el = self.universe.elements
        return [(el[x], el[y]) for x, y in self.pairs()]

    def __len__(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    @cached_property
    def columns(self) -> tuple[int, ...]:
        """``columns[y]`` is the bitmask of every ``x`` with ``R x y``."""
        cols = [0] * self.size
        for x, row in enumerate(self.rows):
            for y in indices(row):
                cols[y] |= 1 << x
        return tuple(cols)

    def inverse(self) -> "BinaryRelation":
        return BinaryRelation(self.universe, self.columns)

    def union(self, other: "BinaryRelation") -> "BinaryRelation":
        _same_universe(self, other)
        return BinaryRelation(self.universe, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def intersection(self, other: "BinaryRelation") -> "BinaryRelation":
        _same_universe(self, other)
        return BinaryRelation(self.universe, tuple(a & b for a, b in zip(self.rows, other.rows)))

    def issubset(self, other: "BinaryRelation") -> bool:
        _same_universe(self, other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def with_pairs(self, pairs: Iterable[tuple[int, int]]) -> "BinaryRelation":
        return self.union(BinaryRelation.from_pairs(self.universe, pairs))

    def without_pairs(self, pairs: Iterable[tuple[int, int]]) -> "BinaryRelation":
        rows = list(self.rows)
        for x, y in pairs:
            rows[x] &= ~(1 << y)
        return BinaryRelation(self.universe, tuple(rows))

    # Property flags are cached: the relation is immutable.

    @cached_property
    def reflexive(self) -> bool:
        return is_reflexive(self)

    @cached_property
    def proto_transitive(self) -> bool:
        return is_proto_transitive(self)

    @property
    def is_prax(self) -> bool:
        return self.reflexive and self.proto_transitive


def _same_universe(r: BinaryRelation, q: BinaryRelation) -> None:
    if r.universe != q.universe:
        raise UniverseMismatch("relations are over different universes")


def is_reflexive(r: BinaryRelation) -> bool:
    return all(row >> i & 1 for i, row in enumerate(r.rows))


def is_symmetric(r: BinaryRelation) -> bool:
    return r.rows == r.columns


def weak_transitivity_witness(r: BinaryRelation) -> Optional[tuple[int, int, int]]:
    """First triple ``(x, y, z)`` with ``x != z``, ``R x y``, ``R y z`` but not ``R x z``.

    Triples are scanned lexicographically by index.  Cases with ``y`` equal
    to ``x`` or ``z`` can never violate the condition, so the result is the
    same whether the distinctness requirement is read pairwise or not.
    """
    rows = r.rows
    for x, row_x in enumerate(rows):
        for y in indices(row_x):
            missing = rows[y] & ~row_x & ~(1 << x)
            if missing:
                z = (missing & -missing).bit_length() - 1
                return (x, y, z)
    return None


def is_weakly_transitive(r: BinaryRelation) -> bool:
    return weak_transitivity_witness(r) is None


def is_transitive(r: BinaryRelation) -> bool:
    rows = r.rows
    for row_x in rows:
        for y in indices(row_x):
            if rows[y] & ~row_x:
                return False
    return True


def tau(r: BinaryRelation) -> BinaryRelation:
    """Symmetric kernel ``R & R^-1``."""
    return BinaryRelation(r.universe, tuple(a & b for a, b in zip(r.rows, r.columns)))


def is_proto_transitive(r: BinaryRelation) -> bool:
    return is_weakly_transitive(tau(r))


def proto_transitivity_witness(r: BinaryRelation) -> Optional[tuple[int, int, int]]:
    """First pairwise-distinct ``(x, y, z)`` with ``Rxy, Ryz, Ryx, Rzy`` but not ``Rxz``.

    Scans the quantified form directly (lexicographic order), so its
    verdict is an independent cross-check of the symmetric-kernel criterion.
    """
    n = r.size
    for x in range(n):
        for y in range(n):
            if y == x or (x, y) not in r or (y, x) not in r:
                continue
            for z in range(n):
                if z in (x, y):
                    continue
                if (y, z) in r and (z, y) in r and (x, z) not in r:
                    return (x, y, z)
    return None


def reflexive_closure(r: BinaryRelation) -> BinaryRelation:
    return BinaryRelation(r.universe, tuple(row | (1 << i) for i, row in enumerate(r.rows)))


def compose(r: BinaryRelation, q: BinaryRelation) -> BinaryRelation:
    """``{(x, z) : exists y. r x y and q y z}``."""
    _same_universe(r, q)
    out = []
    for row in r.rows:
        acc = 0
        for y in indices(row):
            acc |= q.rows[y]
        out.append(acc)
    return BinaryRelation(r.universe, tuple(out))


def is_equivalence(r: BinaryRelation) -> bool:
    return is_reflexive(r) and is_symmetric(r) and is_transitive(r)


@dataclass(frozen=True)
class PropertyReport:
    reflexive: bool
    symmetric: bool
    transitive: bool
    weakly_transitive: bool
    proto_transitive: bool
    equivalence: bool
    is_PRAS: bool
    is_PRAX: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "reflexive": self.reflexive,
            "symmetric": self.symmetric,
            "transitive": self.transitive,
            "weakly_transitive": self.weakly_transitive,
            "proto_transitive": self.proto_transitive,
            "equivalence": self.equivalence,
            "is_PRAS": self.is_PRAS,
            "is_PRAX": self.is_PRAX,
        }


def classify(r: BinaryRelation) -> PropertyReport:
    refl = is_reflexive(r)
    sym = is_symmetric(r)
    trans = is_transitive(r)
    proto = is_proto_transitive(r)
    return PropertyReport(
        reflexive=refl,
        symmetric=sym,
        transitive=trans,
        weakly_transitive=is_weakly_transitive(r),
        proto_transitive=proto,
        equivalence=refl and sym and trans,
        is_PRAS=proto,
        is_PRAX=proto and refl,
    )
