"""Brooms, bruinvals, critical points and full sets of roughly equal subsets.

Everything here is an exhaustive evaluator over the powerset; the caps in
:mod:`roughprax.caps` keep the searches bounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Collection, Iterable, Optional, Sequence

import networkx as nx

from roughprax import caps
from roughprax.approx import NeighborhoodMap
from roughprax.bits import (
    canonical_key,
    incomparable,
    is_proper_subset,
    is_subset,
    submasks,
    supermasks,
)
from roughprax.errors import FormatError
from roughprax.quotient import rough_class_members
from roughprax.relation import Universe
from roughprax.tables import Tables


def _tables(n: NeighborhoodMap, tables: Optional[Tables]) -> Tables:
    return tables if tables is not None else Tables(n)


def _pairwise_incomparable(alpha: Sequence[int]) -> bool:
    return all(incomparable(a, b) for a, b in combinations(alpha, 2))


# -- brooms -----------------------------------------------------------------

def is_upper_broom(n: NeighborhoodMap, alpha: Collection[int], tables: Optional[Tables] = None) -> bool:
    """Non-singleton subsets sharing one upper approximation, pairwise
    incomparable, and not extendable by any further such subset.

    The pairwise conditions range over distinct members only.
    """
    members = sorted(set(alpha))
    if not members or any(a.bit_count() == 1 for a in members):
        return False
    t = _tables(n, tables)
    up = t.upper
    value = up[members[0]]
    if any(up[a] != value for a in members) or not _pairwise_incomparable(members):
        return False
    # Any larger family must add a subset with the same upper value.
    chosen = set(members)
    for y in range(t.count):
        if y in chosen or y.bit_count() == 1 or up[y] != value:
            continue
        if all(incomparable(y, a) for a in members):
            return False
    return True


def _lower_broom_clauses(lo: list[int], beta: Sequence[int]) -> bool:
    if any(lo[a] == a for a in beta):
        return False
    if len({lo[a] for a in beta}) > 1:
        return False
    return _pairwise_incomparable(beta)


def is_lower_broom(n: NeighborhoodMap, alpha: Collection[int], tables: Optional[Tables] = None) -> bool:
    """Lower broom, with the sub-collection clause applied literally.

    The first two clauses are inherited by every sub-collection, so the
    third one rejects every family with three or more members.
    """
    members = sorted(set(alpha))
    if not members or any(a.bit_count() == 1 for a in members):
        return False
    lo = _tables(n, tables).lower
    if not _lower_broom_clauses(lo, members):
        return False
    for k in range(2, len(members)):
        for beta in combinations(members, k):
            if _lower_broom_clauses(lo, beta):
                return False
    return True


@dataclass(frozen=True)
class BroomListing:
    upper: tuple[tuple[int, ...], ...]
    lower: tuple[tuple[int, ...], ...]
    upper_truncated: bool
    # Whether the lower-broom sub-collection clause ever rejected a family
    # that met the other two clauses.
    lower_clause_discriminates: bool


def _canonical_families(families: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    fams = [tuple(sorted(f, key=canonical_key)) for f in families]
    fams.sort(key=lambda f: (len(f), [canonical_key(a) for a in f]))
    return tuple(fams)


def upper_brooms(n: NeighborhoodMap, limit: Optional[int] = 10_000,
                 tables: Optional[Tables] = None) -> tuple[tuple[tuple[int, ...], ...], bool]:
    """All upper brooms: maximal antichains inside each upper-value family.

    Returns the brooms and whether the listing stopped at ``limit``.
    """
    caps.require("brooms", n.size, "broom search")
    t = _tables(n, tables)
    groups: dict[int, list[int]] = {}
    for a in range(t.count):
        if a.bit_count() != 1:
            groups.setdefault(t.upper[a], []).append(a)
    found: list[list[int]] = []
    truncated = False
    for value in sorted(groups):
        members = groups[value]
        g = nx.Graph()
        g.add_nodes_from(members)
        g.add_edges_from((a, b) for a, b in combinations(members, 2) if incomparable(a, b))
        for clique in nx.find_cliques(g):
            if limit is not None and len(found) >= limit:
                truncated = True
                break
            found.append(clique)
        if truncated:
            break
    return _canonical_families(found), truncated


def lower_brooms(n: NeighborhoodMap, tables: Optional[Tables] = None) -> tuple[tuple[int, ...], ...]:
    caps.require("brooms", n.size, "broom search")
    t = _tables(n, tables)
    lo = t.lower
    eligible = [a for a in range(t.count) if a.bit_count() != 1 and lo[a] != a]
    found = [(a,) for a in eligible]
    by_lower: dict[int, list[int]] = {}
    for a in eligible:
        by_lower.setdefault(lo[a], []).append(a)
    for members in by_lower.values():
        found.extend((a, b) for a, b in combinations(members, 2) if incomparable(a, b))
    return _canonical_families(found)


def lower_clause_discriminates(n: NeighborhoodMap, tables: Optional[Tables] = None) -> bool:
    """True when some 3-member family meets the first two lower-broom clauses."""
    t = _tables(n, tables)
    lo = t.lower
    by_lower: dict[int, list[int]] = {}
    for a in range(t.count):
        if a.bit_count() != 1 and lo[a] != a:
            by_lower.setdefault(lo[a], []).append(a)
    for members in by_lower.values():
        for trio in combinations(members, 3):
            if _pairwise_incomparable(trio):
                return True
    return False


def list_brooms(n: NeighborhoodMap, limit: Optional[int] = 10_000) -> BroomListing:
    t = Tables(n)
    ups, truncated = upper_brooms(n, limit, t)
    return BroomListing(ups, lower_brooms(n, t), truncated, lower_clause_discriminates(n, t))


# -- bruinvals --------------------------------------------------------------

BRUINVAL_KINDS = (
    "interval-0",
    "open-to-set",
    "closed-to-set",
    "set-to-set-open",
    "set-to-set-closed",
    "semi-closed",
)
BOUNDS = ("()", "[)", "(]", "[]")


def interval(x: int, y: int, bounds: str) -> list[int]:
    """Subsets ``z`` between ``x`` and ``y``; ``bounds`` picks open or closed ends."""
    if not is_subset(x, y):
        return []
    out = []
    for z in supermasks(x, y):
        if z == x and bounds[0] == "(":
            continue
        if z == y and bounds[1] == ")":
            continue
        out.append(z)
    return out


@dataclass(frozen=True)
class Bruinval:
    """A generalised interval of the powerset.

    ``interval-0`` uses ``x``/``y``; ``open-to-set`` and ``closed-to-set``
    use ``x``/``alpha``; the set-to-set kinds use ``alpha``/``beta``; and
    ``semi-closed`` stores its split ``alpha1, alpha2, beta1, beta2``.
    """

    kind: str
    bounds: str = "[]"
    x: Optional[int] = None
    y: Optional[int] = None
    alpha: tuple[int, ...] = ()
    beta: tuple[int, ...] = ()
    alpha1: tuple[int, ...] = ()
    alpha2: tuple[int, ...] = ()
    beta1: tuple[int, ...] = ()
    beta2: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        k = self.kind
        if k not in BRUINVAL_KINDS:
            raise FormatError(f"unknown bruinval kind {k!r}")
        if self.bounds not in BOUNDS:
            raise FormatError(f"bounds must be one of {BOUNDS}")
        has = {
            "x": self.x is not None,
            "y": self.y is not None,
            "alpha": bool(self.alpha),
            "beta": bool(self.beta),
            "split": any((self.alpha1, self.alpha2, self.beta1, self.beta2)),
        }
        need = {
            "interval-0": {"x", "y"},
            "open-to-set": {"x", "alpha"},
            "closed-to-set": {"x", "alpha"},
            "set-to-set-open": {"alpha", "beta"},
            "set-to-set-closed": {"alpha", "beta"},
            "semi-closed": {"split"},
        }[k]
        present = {name for name, ok in has.items() if ok}
        if present != need:
            raise FormatError(f"{k} bruinval needs exactly {sorted(need)}, got {sorted(present)}")
        if k == "open-to-set" and self.bounds == "[]":
            raise FormatError("open-to-set bruinval must have at least one open end")
        if k in ("closed-to-set", "set-to-set-closed") and self.bounds != "[]":
            raise FormatError(f"{k} bruinval is closed at both ends")
        if k == "set-to-set-open" and self.bounds != "()":
            raise FormatError("set-to-set-open bruinval is open at both ends")

    @classmethod
    def from_dict(cls, universe: Universe, data: dict[str, Any]) -> "Bruinval":
        if not isinstance(data, dict) or "kind" not in data:
            raise FormatError('bruinval JSON needs a "kind"')
        kind = data["kind"]
        default_bounds = {"set-to-set-open": "()", "open-to-set": "()"}.get(kind, "[]")
        kwargs: dict[str, Any] = {"kind": kind, "bounds": data.get("bounds", default_bounds)}
        for key in ("x", "y"):
            if key in data:
                kwargs[key] = universe.mask(data[key])
        for key in ("alpha", "beta", "alpha1", "alpha2", "beta1", "beta2"):
            if key in data:
                kwargs[key] = tuple(universe.mask(s) for s in data[key])
        unknown = set(data) - {"kind", "bounds", "x", "y", "alpha", "beta", "alpha1", "alpha2", "beta1", "beta2"}
        if unknown:
            raise FormatError(f"unknown bruinval keys {sorted(unknown)}")
        return cls(**kwargs)

    def pieces(self) -> tuple["Bruinval", ...]:
        """The four set-to-set pieces of a semi-closed bruinval."""
        if self.kind != "semi-closed":
            return (self,)
        return tuple(
            _set_to_set(a, b, bounds)
            for a, b, bounds in (
                (self.alpha1, self.beta1, "()"),
                (self.alpha2, self.beta2, "[]"),
                (self.alpha1, self.beta2, "(]"),
                (self.alpha2, self.beta1, "[)"),
            )
        )

    @property
    def full_alpha(self) -> tuple[int, ...]:
        return self.alpha if self.kind != "semi-closed" else self.alpha1 + self.alpha2

    @property
    def full_beta(self) -> tuple[int, ...]:
        return self.beta if self.kind != "semi-closed" else self.beta1 + self.beta2


@dataclass(frozen=True)
class _SetInterval:
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    bounds: str


def _set_to_set(alpha, beta, bounds) -> _SetInterval:
    return _SetInterval(tuple(alpha), tuple(beta), bounds)


def _set_members(alpha: Iterable[int], beta: Iterable[int], bounds: str) -> set[int]:
    out: set[int] = set()
    beta = list(beta)
    for a in alpha:
        for b in beta:
            out.update(interval(a, b, bounds))
    return out


def bruinval_members(n: NeighborhoodMap, b: Bruinval) -> list[int]:
    caps.require("definites", n.size, "bruinval enumeration")
    full = n.full
    for m in (b.x, b.y, *b.alpha, *b.beta, *b.alpha1, *b.alpha2, *b.beta1, *b.beta2):
        if m is not None and m & ~full:
            raise FormatError("bruinval endpoint outside the universe")
    if b.kind == "interval-0":
        out = set(interval(b.x, b.y, b.bounds))
    elif b.kind in ("open-to-set", "closed-to-set"):
        out = _set_members([b.x], b.alpha, b.bounds)
    elif b.kind in ("set-to-set-open", "set-to-set-closed"):
        out = _set_members(b.alpha, b.beta, b.bounds)
    else:
        out = set()
        for piece in b.pieces():
            out |= _set_members(piece.alpha, piece.beta, piece.bounds)
    return sorted(out, key=canonical_key)


# -- full sets of roughly equal subsets -------------------------------------

def is_requal_set(n: NeighborhoodMap, c: Iterable[int], tables: Optional[Tables] = None) -> bool:
    return _tables(n, tables).is_requal(c)


def is_full_requal_set(n: NeighborhoodMap, c: Iterable[int]) -> bool:
    """All members roughly equal, and ``c`` is their entire rough class."""
    members = set(c)
    if not members:
        return False
    first = min(members)
    return members == set(rough_class_members(n, first))


@dataclass
class TheoremResult:
    name: str
    claim: str
    cases: int = 0
    failures: int = 0
    # Failures where the interval under test has no members at all.
    empty_failures: int = 0
    counterexample: Optional[dict[str, Any]] = None
    nonempty_counterexample: Optional[dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, witness: dict[str, Any], degenerate: bool = False) -> None:
        self.cases += 1
        if ok:
            return
        self.failures += 1
        if self.counterexample is None:
            self.counterexample = witness
        if degenerate:
            self.empty_failures += 1
        elif self.nonempty_counterexample is None:
            self.nonempty_counterexample = witness


def _open_broom_candidates(t: Tables, x: int) -> list[tuple[int, ...]]:
    """Small families tried against the open-bruinval criterion.

    Singletons ``{b}`` for every non-singleton ``b``, and incomparable pairs
    sharing an upper value drawn from the strict supersets of ``x`` or from
    the rough class of ``x``.
    """
    nonsingle = [b for b in range(t.count) if b.bit_count() != 1]
    out: list[tuple[int, ...]] = [(b,) for b in nonsingle]
    cid = t.class_id
    pool = [b for b in nonsingle if is_proper_subset(x, b) or cid[b] == cid[x]]
    up = t.upper
    for a, b in combinations(pool, 2):
        if up[a] == up[b] and incomparable(a, b):
            out.append((a, b))
    return out


def full_set_theorems_check(n: NeighborhoodMap, tables: Optional[Tables] = None,
                            broom_search: bool = True) -> list[TheoremResult]:
    """Evaluate each sufficient condition for full sets of roughly equal subsets.

    Every hypothesis-satisfying case is counted; the first failing case is
    kept as a counterexample.
    """
    caps.require("brooms", n.size, "full-set theorem search")
    t = _tables(n, tables)
    lo, up = t.lower, t.upper
    definite = t.lu_definite
    dset = t.lu_definite_set
    covers = set(t.lu_covers)
    results = []

    r = TheoremResult("definite-closed-interval",
                      "for lu-definite x <= y, [x, y] is roughly equal iff x == y")
    for x in definite:
        for y in definite:
            if is_subset(x, y):
                r.record(t.is_requal(interval(x, y, "[]")) == (x == y), {"x": x, "y": y})
    results.append(r)

    r = TheoremResult("definite-cover-open-interval",
                      "(x, y) is a full rough class when y covers x among lu-definite sets")
    for x, y in sorted(covers):
        members = interval(x, y, "()")
        r.record(t.is_full(members), {"x": x, "y": y}, degenerate=not members)
    results.append(r)

    r = TheoremResult("definite-half-open-interval",
                      "for lu-definite x < y, [x, y) and (x, y] are not non-empty roughly equal sets")
    for x in definite:
        for y in definite:
            if is_proper_subset(x, y):
                bad = False
                for bounds in ("[)", "(]"):
                    members = interval(x, y, bounds)
                    if members and t.is_requal(members):
                        bad = True
                r.record(not bad, {"x": x, "y": y})
    results.append(r)

    gap = TheoremResult("half-open-cover",
                        "[x, y) is full when x^l, y^u are lu-definite, x and y share both "
                        "approximations, y^u covers x^l, and x - x^l, y^u - y are singletons")
    closed = TheoremResult("closed-interval-singleton-gap",
                           "[x, y] is full when x^l = y^l = x, x^u = y^u and y^u - y is a singleton")
    left_open = TheoremResult("left-open-interval-singleton-gap",
                              "(x, y] is full and misses [x, x^u] when x^l = y^l = x, every z in "
                              "(x, y] has z^u = y^u, and y^u - y is a singleton")
    for y in range(t.count):
        uy, ly = up[y], lo[y]
        gap_y = (uy & ~y).bit_count() == 1
        for x in submasks(y):
            lx, ux = lo[x], up[x]
            if (gap_y and lx == ly and ux == uy and lx in dset and uy in dset
                    and (lx, uy) in covers and (x & ~lx).bit_count() == 1):
                gap.record(t.is_full(interval(x, y, "[)")), {"x": x, "y": y}, degenerate=x == y)
            if gap_y and lx == x and ly == x and ux == uy:
                closed.record(t.is_full(interval(x, y, "[]")), {"x": x, "y": y})
            if gap_y and x != y and lx == x and ly == x:
                members = interval(x, y, "(]")
                if all(up[z] == uy for z in members):
                    disjoint = not set(members) & set(interval(x, ux, "[]"))
                    left_open.record(t.is_full(members) and disjoint, {"x": x, "y": y})
    results.extend([gap, closed, left_open])

    requal = TheoremResult("approximation-interval-requal",
                           "(x^l, x^u) is roughly equal when x^uu = x^u")
    full_r = TheoremResult("approximation-interval-full",
                           "(x^l, x^u) is full when x^uu = x^u and [x^l, x^u) is not full")
    for x in range(t.count):
        lx, ux = lo[x], up[x]
        if up[ux] != ux:
            continue
        members = interval(lx, ux, "()")
        requal.record(t.is_requal(members), {"x": x}, degenerate=not members)
        if not t.is_full(interval(lx, ux, "[)")):
            full_r.record(t.is_full(members), {"x": x}, degenerate=not members)
    results.extend([requal, full_r])

    if broom_search:
        results.append(_open_broom_theorem(n, t))
    return results


def _open_is_full(t: Tables, x: int, tops: Sequence[int]) -> bool:
    """Whether ``(x, tops)`` is a full rough class.

    ``tops`` holds the members of alpha at least two elements above ``x``;
    the others contribute nothing to the open bruinval.
    """
    if not tops:
        return False
    bound = sum((1 << (b & ~x).bit_count()) - 2 for b in tops)
    # Cheap size test on one member before enumerating the whole union.
    gap = tops[0] & ~x
    rep = x | (gap & -gap)
    if t.class_size[t.class_id[rep]] > bound:
        return False
    return t.is_full(sorted(_set_members([x], tops, "()")))


def _open_broom_theorem(n: NeighborhoodMap, t: Tables) -> TheoremResult:
    lo, up = t.lower, t.upper
    r = TheoremResult("open-bruinval-broom",
                      "(x, alpha) is full iff alpha is an upper broom, every member of alpha "
                      "shares both approximations with x, and z^u < x^u for x^l <= z < x")
    for x in range(t.count):
        lx, ux = lo[x], up[x]
        shrink = all(up[z] != ux for z in supermasks(lx, x) if z != x) if is_subset(lx, x) else True
        contributes = [x & ~b == 0 and (b & ~x).bit_count() >= 2 for b in range(t.count)]
        same = [lo[b] == lx and up[b] == ux for b in range(t.count)]
        for alpha in _open_broom_candidates(t, x):
            tops = [b for b in alpha if contributes[b]]
            lhs = _open_is_full(t, x, tops)
            rhs = shrink and all(same[b] for b in alpha) and is_upper_broom(n, alpha, t)
            r.record(lhs == rhs, {"x": x, "alpha": list(alpha)}, degenerate=not tops)
    return r


# -- critical points --------------------------------------------------------

@dataclass(frozen=True)
class CriticalReport:
    weak_upper: tuple[tuple[int, int], ...]
    upper: tuple[tuple[int, int], ...]
    bicritical: tuple[tuple[int, int], ...]
    weak_lower: tuple[tuple[int, int], ...]
    lower_relative: tuple[tuple[int, int], ...]
    lower_absolute: tuple[int, ...]
    critical: tuple[int, ...]

    @property
    def upper_critical_elements(self) -> tuple[int, ...]:
        return tuple(sorted({x for x, _ in self.upper}, key=canonical_key))

    def as_dict(self, universe: Universe) -> dict[str, Any]:
        def pairs(ps):
            return [[universe.names(a), universe.names(b)] for a, b in ps]

        def sets(xs):
            return [universe.names(x) for x in xs]

        return {
            "weak_upper": pairs(self.weak_upper),
            "upper": pairs(self.upper),
            "bicritical": pairs(self.bicritical),
            "weak_lower": pairs(self.weak_lower),
            "lower_relative": pairs(self.lower_relative),
            "lower_absolute": sets(self.lower_absolute),
            "critical": sets(self.critical),
            "UC": sets(self.upper_critical_elements),
            "LC": sets(self.lower_absolute),
            "CR": sets(self.critical),
        }


def _pair_key(p: tuple[int, int]) -> tuple:
    return (canonical_key(p[0]), canonical_key(p[1]))


def critical_points(n: NeighborhoodMap, tables: Optional[Tables] = None) -> CriticalReport:
    """Classify every subset by the critical-point definitions.

    Relative forms are listed as ``(x, z)`` pairs with ``z`` a strict subset
    (upper forms) or strict superset (lower forms) of ``x``; bicritical pairs
    ``(a, b)`` are listed for ``a`` a strict subset of ``b``.
    """
    caps.require("critical", n.size, "critical point search")
    t = _tables(n, tables)
    lo, up, full = t.lower, t.upper, t.full
    weak_upper, upper_rel, weak_lower, lower_rel, lower_abs = [], [], [], [], []

    for x in range(t.count):
        lx, ux = lo[x], up[x]
        # Strict supersets y of x, bucketed by y^l (upper forms) and y^u (lower forms).
        sup_by_lower: dict[int, bool] = {}
        sup_by_upper: dict[int, bool] = {}
        for y in supermasks(x, full):
            if y == x:
                continue
            sup_by_lower[lo[y]] = sup_by_lower.get(lo[y], True) and up[y] != ux
            sup_by_upper[up[y]] = sup_by_upper.get(up[y], True) and lo[y] == lx
        # Strict subsets v of x, bucketed the same way.
        sub_by_lower: dict[int, bool] = {}
        sub_by_upper: dict[int, bool] = {}
        absolute = True
        for v in submasks(x):
            if v == x:
                continue
            sub_by_lower[lo[v]] = sub_by_lower.get(lo[v], True) and up[v] == ux
            sub_by_upper[up[v]] = sub_by_upper.get(up[v], True) and lo[v] != lx
            if lo[v] == lx:
                absolute = False
        if absolute:
            lower_abs.append(x)

        for z in submasks(x):
            if z == x:
                continue
            ys = sup_by_lower.get(z)
            if ys is None or ys:
                weak_upper.append((x, z))
            vs = sub_by_lower.get(z)
            if vs is None or ys is None or (vs and ys):
                upper_rel.append((x, z))
        for z in supermasks(x, full):
            if z == x:
                continue
            ys = sub_by_upper.get(z)
            if ys is None or ys:
                weak_lower.append((x, z))
            vs = sup_by_upper.get(z)
            if ys is None or vs is None or (ys and vs):
                lower_rel.append((x, z))

    bicritical = [(a, b) for a, b in _nested_pairs(t.count, full) if _bicritical(t, a, b)]
    upper_set = {x for x, _ in upper_rel}
    critical = [x for x in lower_abs if x in upper_set]
    return CriticalReport(
        weak_upper=tuple(sorted(weak_upper, key=_pair_key)),
        upper=tuple(sorted(upper_rel, key=_pair_key)),
        bicritical=tuple(sorted(bicritical, key=_pair_key)),
        weak_lower=tuple(sorted(weak_lower, key=_pair_key)),
        lower_relative=tuple(sorted(lower_rel, key=_pair_key)),
        lower_absolute=tuple(sorted(lower_abs, key=canonical_key)),
        critical=tuple(sorted(critical, key=canonical_key)),
    )


def _nested_pairs(count: int, full: int):
    for a in range(count):
        for b in supermasks(a, full):
            if b != a:
                yield a, b


def _bicritical(t: Tables, a: int, b: int) -> bool:
    lo, up, cid = t.lower, t.upper, t.class_id
    la, ub = lo[a], up[b]
    for x in supermasks(a, b):
        if x == a or x == b:
            continue
        # a <= x <= b, so the strict inclusions reduce to inequalities.
        if up[x] == ub or lo[x] == la:
            return False
        free = b & ~x
        while free:
            e = free & -free
            free ^= e
            y = x | e
            if y != b and cid[y] != cid[x]:
                return False
    return True
