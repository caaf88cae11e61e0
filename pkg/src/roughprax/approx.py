"""Neighbourhoods and the six approximation operators.

With the default ``"succ"`` orientation the neighbourhood of ``x`` is
``[x] = {y : R y x}`` and the symmetrized one is
``[x]_o = {y : R y x and R x y}``.  The ``"pred"`` orientation swaps the
roles of the pair components and exists for exploration only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

from roughprax.errors import FormatError, UniverseMismatch
from roughprax.relation import BinaryRelation, Universe

ORIENTATIONS = ("succ", "pred")


@dataclass(frozen=True)
class NeighborhoodMap:
    universe: Universe
    plain: tuple[int, ...]
    symmetrized: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.universe.size

    @property
    def full(self) -> int:
        return self.universe.full

    def _check(self, a: int) -> None:
        if a < 0 or a & ~self.universe.full:
            raise UniverseMismatch(f"subset {a:#x} is not over this universe")

    @cached_property
    def distinct_plain(self) -> tuple[int, ...]:
        """The plain neighbourhoods as a duplicate-free, ordered tuple."""
        return tuple(sorted(set(self.plain)))

    @cached_property
    def distinct_symmetrized(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.symmetrized)))


def neighborhoods(r: BinaryRelation, orientation: str = "succ") -> NeighborhoodMap:
    if orientation == "succ":
        plain = r.columns
    elif orientation == "pred":
        plain = r.rows
    else:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}, got {orientation!r}")
    symm = tuple(a & b for a, b in zip(r.rows, r.columns))
    return NeighborhoodMap(r.universe, tuple(plain), symm)


def _union_inside(grains: Sequence[int], a: int) -> int:
    out = 0
    for g in grains:
        if g & ~a == 0:
            out |= g
    return out


def _union_meeting(grains: Sequence[int], a: int) -> int:
    out = 0
    for g in grains:
        if g & a:
            out |= g
    return out


def lower_proto(n: NeighborhoodMap, a: int) -> int:
    """Union of the neighbourhoods contained in ``a``."""
    n._check(a)
    return _union_inside(n.distinct_plain, a)


def upper_proto(n: NeighborhoodMap, a: int) -> int:
    """Union of the neighbourhoods that meet ``a``."""
    n._check(a)
    return _union_meeting(n.distinct_plain, a)


def lower_symm(n: NeighborhoodMap, a: int) -> int:
    n._check(a)
    return _union_inside(n.distinct_symmetrized, a)


def upper_symm(n: NeighborhoodMap, a: int) -> int:
    n._check(a)
    return _union_meeting(n.distinct_symmetrized, a)


def pointwise_lower(n: NeighborhoodMap, a: int) -> int:
    """Points whose neighbourhood lies inside ``a``."""
    n._check(a)
    out = 0
    for x, g in enumerate(n.plain):
        if g & ~a == 0:
            out |= 1 << x
    return out


def pointwise_upper(n: NeighborhoodMap, a: int) -> int:
    """Points whose neighbourhood meets ``a``."""
    n._check(a)
    out = 0
    for x, g in enumerate(n.plain):
        if g & a:
            out |= 1 << x
    return out


def complement(n: NeighborhoodMap, a: int) -> int:
    n._check(a)
    return n.universe.full & ~a


# Token names as used by OperatorExpr, with their CLI spellings.
OPERATORS: dict[str, Callable[[NeighborhoodMap, int], int]] = {
    "L": lower_proto,
    "U": upper_proto,
    "LO": lower_symm,
    "UO": upper_symm,
    "LP": pointwise_lower,
    "UP": pointwise_upper,
    "C": complement,
}

CLI_TOKENS = {"l": "L", "u": "U", "lo": "LO", "uo": "UO", "l+": "LP", "u+": "UP", "c": "C"}
_TOKEN_SPELLING = {v: k for k, v in CLI_TOKENS.items()}


@dataclass(frozen=True)
class OperatorExpr:
    """A non-empty sequence of operator tokens applied left to right."""

    tokens: tuple[str, ...]

    def __post_init__(self) -> None:
        tokens = tuple(self.tokens)
        if not tokens:
            raise FormatError("operator expression is empty")
        for tok in tokens:
            if tok not in OPERATORS:
                raise FormatError(f"unknown operator token {tok!r}")
        object.__setattr__(self, "tokens", tokens)

    @classmethod
    def parse(cls, text: str) -> "OperatorExpr":
        """Parse the dotted CLI syntax, e.g. ``"uo.l"`` or ``"l.c.u"``."""
        text = text.strip()
        if not text:
            raise FormatError("operator expression is empty")
        tokens = []
        for part in text.split("."):
            part = part.strip().lower()
            if part not in CLI_TOKENS:
                raise FormatError(f"unknown operator {part!r} in {text!r}")
            tokens.append(CLI_TOKENS[part])
        return cls(tuple(tokens))

    def __str__(self) -> str:
        return ".".join(_TOKEN_SPELLING[t] for t in self.tokens)


def apply_expr(n: NeighborhoodMap, e: OperatorExpr | Sequence[str] | str, a: int) -> int:
    if isinstance(e, str):
        e = OperatorExpr.parse(e)
    elif not isinstance(e, OperatorExpr):
        e = OperatorExpr(tuple(e))
    for tok in e.tokens:
        a = OPERATORS[tok](n, a)
    return a


def approximation_table(n: NeighborhoodMap, op: str) -> list[int]:
    """Value of one operator token on every subset, indexed by bitmask."""
    fn = OPERATORS[op]
    return [fn(n, a) for a in range(1 << n.size)]
