"""Comparing two knowledge relations on one universe."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from roughprax.approx import lower_proto, neighborhoods
from roughprax.errors import NotPRAXError, RoughError, UniverseMismatch
from roughprax.relation import BinaryRelation, tau


@dataclass(frozen=True)
class KnowledgePair:
    """``base`` is R and ``other`` is Q."""

    base: BinaryRelation
    other: BinaryRelation

    def __post_init__(self) -> None:
        if self.base.universe != self.other.universe:
            raise UniverseMismatch("knowledge relations must share a universe")

    def swapped(self) -> "KnowledgePair":
        return KnowledgePair(self.other, self.base)


def _require_prax(p: KnowledgePair) -> None:
    for label, r in (("base", p.base), ("other", p.other)):
        if not r.is_prax:
            raise NotPRAXError(f"{label} relation is not reflexive and proto-transitive")


def o_coarser(p: KnowledgePair) -> bool:
    """``tau(base)`` is contained in ``tau(other)``."""
    _require_prax(p)
    return tau(p.base).issubset(tau(p.other))


def p_coarser(p: KnowledgePair) -> bool:
    """``base`` is contained in ``other`` as a set of pairs."""
    _require_prax(p)
    return p.base.issubset(p.other)


@dataclass(frozen=True)
class PositiveRegion:
    """Per-element lower approximations (under the base relation) of the
    other relation's neighbourhoods.

    ``containing`` maps each entry to the indices of the base neighbourhoods
    that include it.
    """

    universe_size: int
    granules: tuple[tuple[int, int], ...]
    containing: tuple[tuple[int, ...], ...]

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.granules)

    def as_dict(self, universe) -> dict[str, Any]:
        return {
            universe.elements[x]: {
                "approx": universe.names(a),
                "within_base_granules_of": [universe.elements[g] for g in within],
            }
            for (x, a), within in zip(self.granules, self.containing)
        }


def granular_positive_region(p: KnowledgePair, orientation: str = "succ") -> PositiveRegion:
    if not p.other.issubset(p.base):
        raise RoughError("granular positive region needs the other relation inside the base relation")
    base = neighborhoods(p.base, orientation)
    other = neighborhoods(p.other, orientation)
    granules = tuple((x, lower_proto(base, g)) for x, g in enumerate(other.plain))
    containing = tuple(
        tuple(y for y, g in enumerate(base.plain) if a & ~g == 0) for _, a in granules
    )
    return PositiveRegion(base.size, granules, containing)
