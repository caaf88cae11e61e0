"""Definite subsets and the Boolean algebra of proto-definite subsets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Union

import numpy as np

from roughprax import caps
from roughprax.approx import (
    CLI_TOKENS,
    NeighborhoodMap,
    OperatorExpr,
    apply_expr,
    lower_proto,
    upper_proto,
)
from roughprax.bits import canonical_key
from roughprax.errors import FormatError, NotPRAXError, RoughError

# "lu" is the only named operator that is not a single token: fixed by both l and u.
NAMED_OPERATORS = ("l", "u", "lo", "uo", "l+", "u+", "lu")

Operator = Union[str, OperatorExpr]


def _fixed_point_test(n: NeighborhoodMap, op: Operator) -> tuple[str, Callable[[int], bool]]:
    if isinstance(op, OperatorExpr):
        return str(op), lambda a: apply_expr(n, op, a) == a
    name = op.strip().lower()
    if name == "lu":
        return name, lambda a: lower_proto(n, a) == a and upper_proto(n, a) == a
    if name in CLI_TOKENS:
        expr = OperatorExpr((CLI_TOKENS[name],))
        return name, lambda a: apply_expr(n, expr, a) == a
    try:
        expr = OperatorExpr.parse(name)
    except FormatError:
        raise FormatError(f"unknown operator {op!r}; expected one of {NAMED_OPERATORS} "
                          "or a dotted expression") from None
    return str(expr), lambda a: apply_expr(n, expr, a) == a


@dataclass(frozen=True)
class DefiniteFamily:
    operator: str
    universe_size: int
    members: tuple[int, ...]

    def __contains__(self, a: int) -> bool:
        return a in self.member_set

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)


def definite_family(n: NeighborhoodMap, op: Operator) -> DefiniteFamily:
    """All subsets fixed by ``op``, by exhaustive scan of the powerset."""
    caps.require("definites", n.size, "definite family")
    name, fixed = _fixed_point_test(n, op)
    members = [a for a in range(1 << n.size) if fixed(a)]
    members.sort(key=canonical_key)
    return DefiniteFamily(name, n.size, tuple(members))


def is_complete_sublattice(f: DefiniteFamily) -> bool:
    """Closed under all unions and intersections of members.

    On a finite universe this means pairwise closure plus the empty union
    and the empty intersection, i.e. the empty set and the whole universe.
    """
    full = (1 << f.universe_size) - 1
    if 0 not in f or full not in f:
        return False
    return _pairwise_closed(f.members, f.universe_size)


def _membership(members, size: int) -> np.ndarray:
    table = np.zeros(1 << size, dtype=bool)
    table[list(members)] = True
    return table


def _pairwise_closed(members, size: int) -> bool:
    arr = np.asarray(members, dtype=np.int64)
    table = _membership(members, size)
    for x in arr:
        if not table[x & arr].all() or not table[x | arr].all():
            return False
    return True


def is_prax_map(n: NeighborhoodMap) -> bool:
    """Reflexivity and proto-transitivity read off the neighbourhood map.

    The symmetrized neighbourhoods are the rows of the symmetric kernel in
    either orientation, so proto-transitivity is their weak transitivity.
    """
    if any(not (g >> x & 1) for x, g in enumerate(n.plain)):
        return False
    rows = n.symmetrized
    for x, row in enumerate(rows):
        acc = 0
        y_bits = row & ~(1 << x)
        while y_bits:
            low = y_bits & -y_bits
            acc |= rows[low.bit_length() - 1]
            y_bits ^= low
        if acc & ~row & ~(1 << x):
            return False
    return True


@dataclass(frozen=True)
class ProtoDefiniteAlgebra:
    """Subsets fixed by both l and u, with intersection, union and complement."""

    carrier: DefiniteFamily
    full: int

    bottom = 0

    @property
    def top(self) -> int:
        return self.full

    def meet(self, x, y):
        return x & y

    def join(self, x, y):
        return x | y

    def complement(self, x):
        return self.full ^ x

    def leq(self, x: int, y: int) -> bool:
        """Lattice order defined from the operations, not from inclusion."""
        return self.join(x, y) == y and self.meet(x, y) == x

    @cached_property
    def atoms(self) -> tuple[int, ...]:
        nonzero = [x for x in self.carrier.members if x]
        return tuple(x for x in nonzero if not any(y != x and y & ~x == 0 for y in nonzero))

    def axiom_failures(self) -> list[str]:
        """Exhaustively check closure and the Boolean lattice laws over the carrier."""
        size = self.carrier.universe_size
        c = np.asarray(self.carrier.members, dtype=np.int64)
        inside = _membership(self.carrier.members, size)
        meet, join, comp = self.meet, self.join, self.complement
        top, bot = self.top, self.bottom
        failed: list[str] = []

        def law(name: str, ok) -> None:
            if not bool(np.all(ok)) and name not in failed:
                failed.append(name)

        law("contains bottom", inside[bot])
        law("contains top", inside[top])
        law("closed under complement", inside[comp(c)])
        law("complement meet", meet(c, comp(c)) == bot)
        law("complement join", join(c, comp(c)) == top)
        law("meet identity", meet(c, top) == c)
        law("join identity", join(c, bot) == c)
        law("meet idempotent", meet(c, c) == c)
        law("join idempotent", join(c, c) == c)
        law("double complement", comp(comp(c)) == c)
        for x in c:
            law("closed under meet", inside[meet(x, c)])
            law("closed under join", inside[join(x, c)])
            law("meet commutative", meet(x, c) == meet(c, x))
            law("join commutative", join(x, c) == join(c, x))
            law("absorption meet-join", meet(x, join(x, c)) == x)
            law("absorption join-meet", join(x, meet(x, c)) == x)
            law("de Morgan", comp(meet(x, c)) == join(comp(x), comp(c)))
            derived = (join(x, c) == c) & (meet(x, c) == x)
            law("order is inclusion", derived == ((x & ~c) == 0))
            y = c[:, None]
            z = c[None, :]
            law("meet associative", meet(x, meet(y, z)) == meet(meet(x, y), z))
            law("join associative", join(x, join(y, z)) == join(join(x, y), z))
            law("meet distributes", meet(x, join(y, z)) == join(meet(x, y), meet(x, z)))
            law("join distributes", join(x, meet(y, z)) == meet(join(x, y), join(x, z)))
        return failed

    def is_boolean_lattice(self) -> bool:
        return not self.axiom_failures()


def proto_definite_algebra(n: NeighborhoodMap, *, require_prax: bool = True) -> ProtoDefiniteAlgebra:
    if require_prax and not is_prax_map(n):
        raise NotPRAXError("the proto-definite algebra is only defined for reflexive proto-transitive relations")
    carrier = definite_family(n, "lu")
    algebra = ProtoDefiniteAlgebra(carrier, n.full)
    if require_prax:
        for x in carrier.members:
            if algebra.complement(x) not in carrier:
                raise RoughError(f"complement of {x:#x} left the carrier")
        if not _pairwise_closed(carrier.members, n.size):
            raise RoughError("carrier is not closed under meet and join")
    return algebra
