"""Randomised theorem runner and oracle cross-checks.

``verify_theorems`` draws PRAX instances from a seeded generator and
evaluates every universal law exhaustively over each instance's powerset.
Existence claims are handled as witness searches: the first instance that
exhibits the claimed behaviour is re-checked by the naive oracle and kept.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from itertools import permutations
from pathlib import Path
from typing import Any, Callable, Optional

import numpy as np

from roughprax import caps
from roughprax.approx import OPERATORS, NeighborhoodMap, lower_proto, neighborhoods
from roughprax.bits import canonical_key, incomparable, is_proper_subset
from roughprax.definites import NAMED_OPERATORS, definite_family, proto_definite_algebra
from roughprax.generate import GeneratorConfig, generate_pras, generate_prax, random_relation
from roughprax.io import dumps, relation_from_dict, relation_to_dict
from roughprax.knowledge import KnowledgePair, granular_positive_region, o_coarser, p_coarser
from roughprax.oracle import Oracle, to_frozenset, to_mask
from roughprax.quotient import check_atomicity, is_partial_order, quotient
from roughprax.relation import (
    BinaryRelation,
    classify,
    compose,
    is_proto_transitive,
    is_weakly_transitive,
    proto_transitivity_witness,
    reflexive_closure,
    tau,
)
from roughprax.report import ConformanceReport
from roughprax.representation import (
    critical_points,
    full_set_theorems_check,
    interval,
    is_lower_broom,
    is_upper_broom,
)
from roughprax.tables import Tables

log = logging.getLogger(__name__)

UNCLASSIFIED_NOTE = (
    "An atom member has a non-empty lower approximation exactly when the atom "
    "is the one-member class holding {y} for an element y whose neighbourhood "
    "is {y}. If no other neighbourhood contains y, that atom is the degenerate "
    "type-0 case. Otherwise {y} is lower-definite without being isolated, the "
    "atom fits none of the three descriptive types, and it is reported as "
    "unclassified."
)


# -- oracle suite -----------------------------------------------------------

def oracle_suite(r: BinaryRelation,
                 overrides: Optional[dict[str, Callable[[NeighborhoodMap, int], int]]] = None,
                 fixture: str = "instance") -> ConformanceReport:
    """Compare every bitmask routine with its naive counterpart on ``r``.

    ``overrides`` replaces operator implementations by token (``"L"``,
    ``"U"``, ...); the mutation self-test uses it to seed a defect.
    """
    caps.require("oracle", r.size, "oracle suite")
    report = ConformanceReport(fixture)
    o = Oracle(r.size, r.pairs())
    n = neighborhoods(r)
    names = r.universe.names
    count = 1 << r.size

    bad = next((x for x in range(r.size) if n.plain[x] != to_mask(o.nbhd(x))), None)
    report.add("oracle-neighbourhoods", "neighbourhood of every element matches the direct definition",
               bad is None, element=None if bad is None else r.universe.elements[bad])
    bad = next((x for x in range(r.size) if n.symmetrized[x] != to_mask(o.nbhd_o(x))), None)
    report.add("oracle-symmetrized-neighbourhoods",
               "symmetrized neighbourhood of every element matches the direct definition",
               bad is None, element=None if bad is None else r.universe.elements[bad])

    impl = dict(OPERATORS)
    impl.update(overrides or {})
    for tok in sorted(OPERATORS):
        fn, ref = impl[tok], o.operator(tok)
        bad = next((a for a in range(count) if fn(n, a) != to_mask(ref(to_frozenset(a)))), None)
        report.add(f"oracle-operator-{tok}", f"operator {tok} agrees with the direct definition on every subset",
                   bad is None, subset=None if bad is None else names(bad))

    for op in NAMED_OPERATORS:
        fam = set(definite_family(n, op).members)
        if op == "lu":
            test = lambda s: o.lower(s) == s and o.upper(s) == s
        else:
            tok = {"l": "L", "u": "U", "lo": "LO", "uo": "UO", "l+": "LP", "u+": "UP"}[op]
            ref = o.operator(tok)
            test = lambda s, ref=ref: ref(s) == s
        want = {to_mask(s) for s in o.definite(test)}
        diff = sorted(fam ^ want, key=canonical_key)
        report.add(f"oracle-definite-{op}", f"{op}-definite family matches the direct fixed-point scan",
                   not diff, subset=names(diff[0]) if diff else None)

    h = quotient(n)
    got = {frozenset(c.members) for c in h.classes}
    ref_classes = o.classes()
    want = {frozenset(to_mask(s) for s in c) for c in ref_classes}
    report.add("oracle-quotient-classes", "rough classes match pairwise rough-equality grouping",
               got == want, classes=len(got), expected=len(want))
    got_atoms = {frozenset(h.classes[j].members) for j in h.atoms}
    want_atoms = {frozenset(to_mask(s) for s in c) for c in o.atoms()}
    report.add("oracle-atoms", "atoms match the member-wise order on classes",
               got_atoms == want_atoms, atoms=len(got_atoms), expected=len(want_atoms))

    if r.size <= caps.cap("critical"):
        rep = critical_points(n)
        ref = o.critical()
        for key in ("weak_upper", "upper", "bicritical", "weak_lower", "lower_relative"):
            mine = set(getattr(rep, key))
            theirs = {(to_mask(a), to_mask(b)) for a, b in ref[key]}
            report.add(f"oracle-critical-{key}", f"{key} critical pairs match direct quantifier evaluation",
                       mine == theirs, missing=len(theirs - mine), extra=len(mine - theirs))
        for key in ("lower_absolute", "critical"):
            mine = set(getattr(rep, key))
            theirs = {to_mask(a) for a in ref[key]}
            report.add(f"oracle-critical-{key}", f"{key} critical sets match direct quantifier evaluation",
                       mine == theirs, missing=len(theirs - mine), extra=len(mine - theirs))

    report.add("oracle-proto-transitive", "symmetric-kernel criterion matches the direct triple scan",
               is_proto_transitive(r) == o.proto_transitive_direct())
    report.add("oracle-compose", "relation composed with itself matches the naive triple loop",
               set(compose(r, r).pairs()) == set(o.compose(r.pairs())))
    return report


# -- theorem runner ---------------------------------------------------------

@dataclass
class _Law:
    claim: str
    instances: int = 0
    cases: int = 0
    failures: int = 0
    counterexample: Optional[dict[str, Any]] = None
    extra: dict[str, Any] = field(default_factory=dict)


class _Tally:
    def __init__(self) -> None:
        self.laws: dict[str, _Law] = {}

    def record(self, name: str, claim: str, cases: int, failures: int,
               example: Callable[[], dict[str, Any]] | None = None) -> _Law:
        law = self.laws.setdefault(name, _Law(claim))
        law.instances += 1
        law.cases += cases
        law.failures += failures
        if failures and law.counterexample is None and example is not None:
            law.counterexample = example()
        return law

    def vector(self, name: str, claim: str, ok: np.ndarray, r: BinaryRelation,
               describe: Callable[[tuple[int, ...]], dict[str, Any]]) -> None:
        """Record a law evaluated as a boolean array over subsets or pairs."""
        failures = int(ok.size - np.count_nonzero(ok))

        def example() -> dict[str, Any]:
            where = tuple(int(i) for i in np.argwhere(~ok)[0])
            return {"relation": relation_to_dict(r), **describe(where)}

        self.record(name, claim, int(ok.size), failures, example)


def _sub(a, b):
    return (a & ~b) == 0


@dataclass
class _Witness:
    name: str
    claim: str
    found: Optional[dict[str, Any]] = None
    oracle_confirmed: bool = False


def _trial_seeds(seed: int, trials: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.getrandbits(63) for _ in range(trials)]


def verify_theorems(trials: int, size: int, seed: int,
                    fixture_dir: Optional[Path | str] = None) -> ConformanceReport:
    """Run every law on ``trials`` generated instances of ``size`` elements."""
    caps.require("relation", size, "verification universe")
    tally = _Tally()
    witnesses = {
        w.name: w for w in (
            _Witness("witness-lower-vs-symmetrized-lower",
                     "some subset A of some PRAX has A^l incomparable with A^lo"),
            _Witness("witness-definite-families-incomparable",
                     "some PRAX has l-definite and lo-definite families incomparable"),
            _Witness("witness-u-definite-not-in-uo-definite",
                     "some proto-transitive, non-reflexive relation has a u-definite set that is not uo-definite"),
            _Witness("witness-upper-critical-not-upper-definite",
                     "some PRAX has an upper critical set that is not upper definite"),
            _Witness("witness-uol-strictly-below",
                     "some reflexive, non-proto-transitive relation has A^(uo l) strictly inside A"),
            _Witness("witness-uol-incomparable",
                     "some reflexive, non-proto-transitive relation has A^(uo l) incomparable with A"),
            _Witness("witness-uol-strictly-above",
                     "some reflexive, non-proto-transitive relation has A strictly inside A^(uo l)"),
        )
    }
    atom_types: dict[str, int] = {}
    report = ConformanceReport(f"verify trials={trials} size={size} seed={seed}")

    for ts in _trial_seeds(seed, trials):
        trng = random.Random(ts)
        cfg = GeneratorConfig(size, ts, asym_pairs=trng.randint(0, size * (size - 1) // 2))
        r = generate_prax(cfg)
        pras = generate_pras(cfg)
        arb = random_relation(size, trng)
        _relation_laws(tally, r, pras, arb)
        n = neighborhoods(r)
        t = Tables(n)
        _approximation_laws(tally, r, t)
        _definite_laws(tally, r, n, t, witnesses)
        _pras_witness(pras, witnesses)
        _uol_witnesses(reflexive_closure(arb), witnesses)
        if size <= caps.cap("quotient"):
            _quotient_laws(tally, r, n, atom_types)
        if size <= caps.cap("brooms"):
            _representation_laws(tally, r, n, t, witnesses)
        _knowledge_laws(tally, r, trng, GeneratorConfig(size, ts ^ 0x5A5A, asym_pairs=cfg.asym_pairs))
        if size <= caps.cap("oracle"):
            sub = oracle_suite(r)
            failed = [c.name for c in sub.failures]
            tally.record("oracle-equivalence", "bitmask routines agree with the naive oracle on every operation",
                         len(sub.checks), len(failed),
                         lambda: {"relation": relation_to_dict(r), "checks": failed})

    for name, law in tally.laws.items():
        detail: dict[str, Any] = {
            "instances": law.instances,
            "cases": law.cases,
            "failures": law.failures,
            "counterexample": law.counterexample,
        }
        detail.update(law.extra)
        report.add(name, law.claim, law.failures == 0, **detail)

    if trials:
        for w in witnesses.values():
            ok = w.found is not None and w.oracle_confirmed
            report.add(w.name, w.claim, ok, found=w.found is not None,
                       oracle_confirmed=w.oracle_confirmed, witness=w.found)
            if ok and fixture_dir is not None:
                path = Path(fixture_dir)
                path.mkdir(parents=True, exist_ok=True)
                (path / f"{w.name}.json").write_text(dumps({"name": w.name, "claim": w.claim, **w.found}))
        total = sum(atom_types.values())
        report.notes["atom_types"] = atom_types
        report.notes["atoms_total"] = total
        report.notes["atoms_unclassified"] = atom_types.get("unclassified", 0)
        report.notes["unclassified_explanation"] = UNCLASSIFIED_NOTE
    return report


# -- law groups -------------------------------------------------------------

def _relation_laws(tally: _Tally, r: BinaryRelation, pras: BinaryRelation, arb: BinaryRelation) -> None:
    flags = classify(r)
    tally.record("generator-prax", "generated PRAX instances are reflexive and proto-transitive",
                 1, int(not (flags.reflexive and flags.proto_transitive)),
                 lambda: {"relation": relation_to_dict(r)})
    tally.record("generator-pras", "generated PRAS instances are proto-transitive",
                 1, int(not classify(pras).is_PRAS), lambda: {"relation": relation_to_dict(pras)})
    for name, rel in (("prax", r), ("pras", pras), ("random", arb)):
        agree = is_proto_transitive(rel) == (proto_transitivity_witness(rel) is None)
        tally.record("proto-criterion-equivalence",
                     "symmetric-kernel criterion equals the pairwise-distinct triple scan",
                     1, int(not agree), lambda rel=rel: {"relation": relation_to_dict(rel)})
    refl = reflexive_closure(arb)
    for rel in (r, refl):
        agree = is_proto_transitive(rel) == classify(tau(rel)).equivalence
        tally.record("reflexive-proto-iff-kernel-equivalence",
                     "a reflexive relation is proto-transitive iff its symmetric kernel is an equivalence",
                     1, int(not agree), lambda rel=rel: {"relation": relation_to_dict(rel)})
    ok = not is_weakly_transitive(arb) or is_proto_transitive(arb)
    tally.record("weakly-transitive-implies-proto", "weak transitivity implies proto-transitivity",
                 1, int(not ok), lambda: {"relation": relation_to_dict(arb)})
    k = tau(arb)
    ok = k.rows == k.inverse().rows and tau(k).rows == k.rows
    tally.record("kernel-symmetric-idempotent", "the symmetric kernel is symmetric and idempotent",
                 1, int(not ok), lambda: {"relation": relation_to_dict(arb)})
    bigger = arb.union(pras) if arb.universe == pras.universe else arb
    ok = (reflexive_closure(refl).rows == refl.rows
          and reflexive_closure(arb).issubset(reflexive_closure(bigger)))
    tally.record("reflexive-closure-idempotent-monotone", "reflexive closure is idempotent and monotone",
                 1, int(not ok), lambda: {"relation": relation_to_dict(arb)})


def _arrays(t: Tables) -> dict[str, np.ndarray]:
    return {
        "L": np.array(t.lower, dtype=np.int64),
        "U": np.array(t.upper, dtype=np.int64),
        "LO": np.array(t.lower_symm, dtype=np.int64),
        "UO": np.array(t.upper_symm, dtype=np.int64),
        "LP": np.array(t.pointwise_lower, dtype=np.int64),
        "UP": np.array(t.pointwise_upper, dtype=np.int64),
    }


def _approximation_laws(tally: _Tally, r: BinaryRelation, t: Tables) -> None:
    ar = _arrays(t)
    L, U, LO, UO, LP, UP = (ar[k] for k in ("L", "U", "LO", "UO", "LP", "UP"))
    full = t.full
    A = np.arange(t.count, dtype=np.int64)
    names = r.universe.names

    def one(where):
        return {"A": names(int(A[where[0]]))}

    unary = (
        ("pointwise-lower-in-lower", "A^(l+) is inside A^l", _sub(LP, L)),
        ("pointwise-upper-in-upper", "A^(u+) is inside A^u", _sub(UP, U)),
        ("pointwise-lower-in-symm-lower", "A^(l+) is inside A^lo", _sub(LP, LO)),
        ("symm-upper-in-pointwise-upper", "A^uo is inside A^(u+)", _sub(UO, UP)),
        ("symm-upper-in-upper", "A^uo is inside A^u", _sub(UO, U)),
        ("lower-complement-dual", "A^(l c) is inside A^(c u)", _sub(full ^ L, U[full ^ A])),
        ("lower-idempotent", "A^(l l) equals A^l", L[L] == L),
        ("upper-extensive-twice", "A^u is inside A^(u u)", _sub(U, U[U])),
        ("lower-inside-inside-upper", "A^l is inside A and A is inside A^u", _sub(L, A) & _sub(A, U)),
        ("pointwise-duality", "complement of A^(l+) equals (A^c)^(u+)", (full ^ LP) == UP[full ^ A]),
    )
    for name, claim, ok in unary:
        tally.vector(name, claim, ok, r, one)

    a, b = A[:, None], A[None, :]

    def two(where):
        return {"A": names(int(where[0])), "B": names(int(where[1]))}

    binary = (
        ("lower-cup", "A^l union B^l is inside (A union B)^l", _sub(L[a] | L[b], L[a | b])),
        ("lower-cap", "(A meet B)^l is inside A^l meet B^l", _sub(L[a & b], L[a] & L[b])),
        ("upper-cup", "(A union B)^u equals A^u union B^u", U[a | b] == (U[a] | U[b])),
        ("upper-cap", "(A meet B)^u is inside A^u meet B^u", _sub(U[a & b], U[a] & U[b])),
        ("pointwise-lower-cap", "(A meet B)^(l+) equals A^(l+) meet B^(l+)", LP[a & b] == (LP[a] & LP[b])),
        ("pointwise-lower-cup", "A^(l+) union B^(l+) is inside (A union B)^(l+)", _sub(LP[a] | LP[b], LP[a | b])),
        ("pointwise-upper-cup", "(A union B)^(u+) equals A^(u+) union B^(u+)", UP[a | b] == (UP[a] | UP[b])),
        ("pointwise-monotone", "l+ and u+ are monotone",
         ~_sub(a, b) | (_sub(LP[a], LP[b]) & _sub(UP[a], UP[b]))),
    )
    for name, claim, ok in binary:
        tally.vector(name, claim, ok, r, two)

    ok = int(LP[full]) == full and int(UP[0]) == 0
    tally.record("pointwise-complete-morphisms", "l+ keeps the whole set and u+ keeps the empty set",
                 1, int(not ok), lambda: {"relation": relation_to_dict(r)})

    img_lp, img_up = set(LP.tolist()), set(UP.tolist())
    fix_lp = {x for x in range(t.count) if LP[x] == x}
    fix_up = {x for x in range(t.count) if UP[x] == x}
    for name, claim, fam, meet, unit in (
        ("pointwise-lower-image-closure-system", "image of l+ is closed under meets and contains the whole set",
         img_lp, np.bitwise_and, full),
        ("pointwise-upper-image-interior-system", "image of u+ is closed under unions and contains the empty set",
         img_up, np.bitwise_or, 0),
        ("pointwise-lower-fixed-closure-system", "fixed points of l+ are closed under meets and contain the whole set",
         fix_lp, np.bitwise_and, full),
        ("pointwise-upper-fixed-interior-system", "fixed points of u+ are closed under unions and contain the empty set",
         fix_up, np.bitwise_or, 0),
    ):
        members = np.array(sorted(fam), dtype=np.int64)
        inside = np.zeros(t.count, dtype=bool)
        inside[members] = True
        ok = bool(inside[unit]) and bool(inside[meet(members[:, None], members[None, :])].all())
        tally.record(name, claim, 1, int(not ok), lambda: {"relation": relation_to_dict(r)})
    ok = {full ^ x for x in img_lp} == img_up
    tally.record("pointwise-image-duality", "complement maps the image of l+ onto the image of u+",
                 1, int(not ok), lambda: {"relation": relation_to_dict(r)})


def _definite_laws(tally: _Tally, r: BinaryRelation, n: NeighborhoodMap, t: Tables,
                   witnesses: dict[str, _Witness]) -> None:
    cnt = t.count
    d = {key: {a for a in range(cnt) if table[a] == a} for key, table in (
        ("l", t.lower), ("u", t.upper), ("lo", t.lower_symm), ("uo", t.upper_symm))}
    names = r.universe.names
    tally.record("symm-lower-definite-eq-symm-upper-definite", "lo-definite and uo-definite families coincide",
                 1, int(d["lo"] != d["uo"]), lambda: {"relation": relation_to_dict(r)})
    tally.record("upper-definite-in-symm-upper-definite", "every u-definite set is uo-definite",
                 1, int(not d["u"] <= d["uo"]), lambda: {"relation": relation_to_dict(r)})
    algebra = proto_definite_algebra(n)
    failed = algebra.axiom_failures()
    tally.record("proto-definite-boolean-algebra", "lu-definite sets form a Boolean lattice under meet, union, complement",
                 1, int(bool(failed)), lambda: {"relation": relation_to_dict(r), "axioms": failed})
    carrier = algebra.carrier.member_set
    bad = [x for x in carrier if (t.full ^ x) not in carrier]
    tally.record("lu-definite-complement-closed", "the complement of an lu-definite set is lu-definite",
                 len(carrier), len(bad), lambda: {"relation": relation_to_dict(r), "A": names(bad[0])})

    o = None
    w = witnesses["witness-lower-vs-symmetrized-lower"]
    if w.found is None:
        hit = next((a for a in range(cnt) if incomparable(t.lower[a], t.lower_symm[a])), None)
        if hit is not None:
            o = o or Oracle(r.size, r.pairs())
            s = to_frozenset(hit)
            lo_, los = o.lower(s), o.lower(s, True)
            w.oracle_confirmed = not lo_ <= los and not los <= lo_
            w.found = {"relation": relation_to_dict(r), "A": names(hit),
                       "lower": names(t.lower[hit]), "lower_symm": names(t.lower_symm[hit])}
    w = witnesses["witness-definite-families-incomparable"]
    if w.found is None and not d["l"] <= d["lo"] and not d["lo"] <= d["l"]:
        o = o or Oracle(r.size, r.pairs())
        ref_l = {to_mask(s) for s in o.definite(lambda s: o.lower(s) == s)}
        ref_lo = {to_mask(s) for s in o.definite(lambda s: o.lower(s, True) == s)}
        only_l = min(ref_l - ref_lo, key=canonical_key, default=None)
        only_lo = min(ref_lo - ref_l, key=canonical_key, default=None)
        w.oracle_confirmed = only_l is not None and only_lo is not None
        w.found = {"relation": relation_to_dict(r),
                   "l_definite_only": names(min(d["l"] - d["lo"], key=canonical_key)),
                   "lo_definite_only": names(min(d["lo"] - d["l"], key=canonical_key))}


def _pras_witness(pras: BinaryRelation, witnesses: dict[str, _Witness]) -> None:
    w = witnesses["witness-u-definite-not-in-uo-definite"]
    if w.found is not None or pras.reflexive:
        return
    t = Tables(neighborhoods(pras))
    hit = next((a for a in range(t.count) if t.upper[a] == a and t.upper_symm[a] != a), None)
    if hit is None:
        return
    o = Oracle(pras.size, pras.pairs())
    s = to_frozenset(hit)
    w.oracle_confirmed = o.upper(s) == s and o.upper(s, True) != s and o.proto_transitive_direct()
    w.found = {"relation": relation_to_dict(pras), "A": pras.universe.names(hit),
               "upper_symm": pras.universe.names(t.upper_symm[hit])}


def _uol_witnesses(refl: BinaryRelation, witnesses: dict[str, _Witness]) -> None:
    keys = ("witness-uol-strictly-below", "witness-uol-incomparable", "witness-uol-strictly-above")
    if all(witnesses[k].found is not None for k in keys) or refl.proto_transitive:
        return
    t = Tables(neighborhoods(refl))
    o = None
    for a in range(t.count):
        v = t.lower[t.upper_symm[a]]
        for key, hit, ref_test in (
            (keys[0], is_proper_subset(v, a), lambda rv, s: rv < s),
            (keys[1], incomparable(v, a), lambda rv, s: not rv <= s and not s <= rv),
            (keys[2], is_proper_subset(a, v), lambda rv, s: s < rv),
        ):
            w = witnesses[key]
            if w.found is None and hit:
                o = o or Oracle(refl.size, refl.pairs())
                s = to_frozenset(a)
                w.oracle_confirmed = ref_test(o.lower(o.upper(s, True)), s) and not o.proto_transitive_direct()
                w.found = {"relation": relation_to_dict(refl), "A": refl.universe.names(a),
                           "uol": refl.universe.names(v)}


def _quotient_laws(tally: _Tally, r: BinaryRelation, n: NeighborhoodMap, atom_types: dict[str, int]) -> None:
    h = quotient(n)
    names = r.universe.names
    cnt = 1 << r.size
    seen = [0] * cnt
    for c in h.classes:
        for m in c.members:
            seen[m] += 1
    tally.record("classes-partition-powerset", "rough classes are disjoint and cover every subset",
                 cnt, sum(1 for s in seen if s != 1), lambda: {"relation": relation_to_dict(r)})

    class_id = [0] * cnt
    for j, c in enumerate(h.classes):
        for m in c.members:
            class_id[m] = j
    bad_convex = []
    for j, c in enumerate(h.classes):
        for lo_m in c.members:
            for hi_m in c.members:
                if lo_m & ~hi_m == 0 and any(class_id[z] != j for z in interval(lo_m, hi_m, "[]")):
                    bad_convex.append(j)
    tally.record("classes-convex", "every rough class is convex under inclusion",
                 len(h), len(set(bad_convex)),
                 lambda: {"relation": relation_to_dict(r), "class": [names(m) for m in h.classes[bad_convex[0]].members]})

    mismatch = sum(1 for i in range(len(h)) for j in range(len(h)) if h.leq(i, j) != h.leq_memberwise(i, j))
    tally.record("class-order-memberwise", "member-wise class order equals comparison of the shared approximations",
                 len(h) ** 2, mismatch, lambda: {"relation": relation_to_dict(r)})
    tally.record("class-order-partial", "the class order is a partial order",
                 1, int(not is_partial_order(h)), lambda: {"relation": relation_to_dict(r)})
    ok, wit = check_atomicity(h)
    tally.record("quotient-atomic", "every non-bottom class lies above an atom",
                 1, int(not ok), lambda: {"relation": relation_to_dict(r),
                                          "class": [names(m) for m in h.classes[wit].members]})
    tally.record("bottom-is-empty-set", "the bottom class contains only the empty set",
                 1, int(h.classes[h.bottom].members != (0,)), lambda: {"relation": relation_to_dict(r)})
    atoms = h.atoms
    bad_atoms = [j for j in atoms if any(h.lower_table[m] for m in h.classes[j].members)]
    tally.record("atom-members-lower-empty", "every member of every atom has empty lower approximation",
                 len(atoms), len(bad_atoms),
                 lambda: {"relation": relation_to_dict(r),
                          "atom": [names(m) for m in h.classes[bad_atoms[0]].members],
                          "lower": names(h.classes[bad_atoms[0]].lower)})
    for j in atoms:
        kind = h.atom_type(j)
        atom_types[kind] = atom_types.get(kind, 0) + 1


def _representation_laws(tally: _Tally, r: BinaryRelation, n: NeighborhoodMap, t: Tables,
                         witnesses: dict[str, _Witness]) -> None:
    names = r.universe.names
    bad_up = [x for x in t.lu_definite if is_upper_broom(n, [x], t)]
    tally.record("definite-singleton-not-upper-broom", "no {x} with x lu-definite is an upper broom",
                 len(t.lu_definite), len(bad_up), lambda: {"relation": relation_to_dict(r), "x": names(bad_up[0])})
    bad_lo = [x for x in t.lu_definite if is_lower_broom(n, [x], t)]
    tally.record("definite-singleton-not-lower-broom", "no {x} with x lu-definite is a lower broom",
                 len(t.lu_definite), len(bad_lo), lambda: {"relation": relation_to_dict(r), "x": names(bad_lo[0])})

    groups: dict[int, list[int]] = {}
    for a, c in enumerate(t.class_id):
        groups.setdefault(c, []).append(a)
    bad = 0
    for members in groups.values():
        if not t.is_full(members):
            bad += 1
        if len(members) > 1 and any(t.is_full(members[:i] + members[i + 1:]) for i in range(len(members))):
            bad += 1
    tally.record("classes-full-subcollections-not", "every rough class is full and none of its strict sub-collections is",
                 len(groups), bad, lambda: {"relation": relation_to_dict(r)})

    for res in full_set_theorems_check(n, t):
        law = tally.record(f"fullset-{res.name}", res.claim, res.cases, res.failures,
                           lambda res=res: {"relation": relation_to_dict(r),
                                            **_named_witness(r, res.counterexample)})
        law.extra["empty_interval_failures"] = law.extra.get("empty_interval_failures", 0) + res.empty_failures
        if res.nonempty_counterexample is not None and "nonempty_counterexample" not in law.extra:
            law.extra["nonempty_counterexample"] = {"relation": relation_to_dict(r),
                                                    **_named_witness(r, res.nonempty_counterexample)}

    rep = critical_points(n, t)
    uc = set(rep.upper_critical_elements)
    upper_definite = [x for x in range(t.count) if t.upper[x] == x]
    bad = [x for x in upper_definite if x not in uc]
    tally.record("upper-definite-is-upper-critical", "every upper-definite set is upper critical",
                 len(upper_definite), len(bad), lambda: {"relation": relation_to_dict(r), "x": names(bad[0])})
    bad_pairs = [(x, z) for x, z in rep.upper
                 if not (t.is_requal(interval(z, x, "[)")) or t.is_requal(interval(z, x, "()")))]
    tally.record("upper-critical-interval-requal",
                 "if x is upper critical relative to z then [z, x) or (z, x) is roughly equal",
                 len(rep.upper), len(bad_pairs),
                 lambda: {"relation": relation_to_dict(r), "x": names(bad_pairs[0][0]), "z": names(bad_pairs[0][1])})

    w = witnesses["witness-upper-critical-not-upper-definite"]
    if w.found is None:
        hit = next((x for x in sorted(uc, key=canonical_key) if t.upper[x] != x), None)
        if hit is not None:
            ref = Oracle(r.size, r.pairs()).critical()
            s = to_frozenset(hit)
            w.oracle_confirmed = any(x == s for x, _ in ref["upper"]) and Oracle(r.size, r.pairs()).upper(s) != s
            z = next(z for x, z in rep.upper if x == hit)
            w.found = {"relation": relation_to_dict(r), "x": names(hit), "relative_to": names(z),
                       "upper": names(t.upper[hit])}


def _named_witness(r: BinaryRelation, w: Optional[dict[str, Any]]) -> dict[str, Any]:
    if w is None:
        return {}
    out: dict[str, Any] = {}
    for k, v in w.items():
        out[k] = [r.universe.names(a) for a in v] if isinstance(v, list) else r.universe.names(v)
    return out


def _knowledge_laws(tally: _Tally, r: BinaryRelation, rng: random.Random, other_cfg: GeneratorConfig) -> None:
    kernel = tau(r)
    loose = [p for p in r.pairs() if p not in kernel]
    dropped = [p for p in loose if rng.random() < 0.5]
    q = r.without_pairs(dropped)
    other = generate_prax(other_cfg)
    rels = (q, r, other)
    ok_refl = all(o_coarser(KnowledgePair(x, x)) and p_coarser(KnowledgePair(x, x)) for x in rels)
    tally.record("coarseness-reflexive", "o- and p-coarseness are reflexive", 1, int(not ok_refl),
                 lambda: {"relation": relation_to_dict(r)})
    fails = 0
    cases = 0
    for a, b, c in permutations(rels, 3):
        for rel in (o_coarser, p_coarser):
            cases += 1
            if rel(KnowledgePair(a, b)) and rel(KnowledgePair(b, c)) and not rel(KnowledgePair(a, c)):
                fails += 1
    tally.record("coarseness-transitive", "o- and p-coarseness are transitive", cases, fails,
                 lambda: {"relation": relation_to_dict(r)})
    fails = sum(1 for a, b in permutations(rels, 2)
                if p_coarser(KnowledgePair(a, b)) and not o_coarser(KnowledgePair(a, b)))
    tally.record("p-coarser-implies-o-coarser", "p-coarseness implies o-coarseness", 6, fails,
                 lambda: {"relation": relation_to_dict(r)})

    region = granular_positive_region(KnowledgePair(r, q))
    n_r, n_q = neighborhoods(r), neighborhoods(q)
    bad = [x for x, a in region.granules
           if a & ~lower_proto(n_r, n_q.plain[x]) or lower_proto(n_r, a) != a]
    tally.record("positive-region-entries", "positive-region entries lie in the base lower approximation "
                 "of the other neighbourhood and are lower-definite",
                 len(region.granules), len(bad), lambda: {"relation": relation_to_dict(r)})


# -- stored witnesses -------------------------------------------------------

def recheck_witness(data: dict[str, Any]) -> bool:
    """Re-establish a stored witness from its relation using only the oracle."""
    r = relation_from_dict(data["relation"])
    u = r.universe
    o = Oracle(r.size, r.pairs())
    reflexive = all((x, x) in o.pairs for x in o.points)
    proto = o.proto_transitive_direct()

    def s(key: str):
        return to_frozenset(u.mask(data[key]))

    def incomparable_sets(p, q) -> bool:
        return not p <= q and not q <= p

    name = data["name"]
    if name == "witness-lower-vs-symmetrized-lower":
        a = s("A")
        lo, lo_s = o.lower(a), o.lower(a, True)
        return (reflexive and proto and incomparable_sets(lo, lo_s)
                and lo == s("lower") and lo_s == s("lower_symm"))
    if name == "witness-definite-families-incomparable":
        l_only, lo_only = s("l_definite_only"), s("lo_definite_only")
        lower, lower_s = o.operator("L"), o.operator("LO")
        return (reflexive and proto
                and lower(l_only) == l_only and lower_s(l_only) != l_only
                and lower_s(lo_only) == lo_only and lower(lo_only) != lo_only)
    if name == "witness-u-definite-not-in-uo-definite":
        a = s("A")
        return (proto and not reflexive and o.upper(a) == a
                and o.upper(a, True) != a and o.upper(a, True) == s("upper_symm"))
    if name.startswith("witness-uol-"):
        a = s("A")
        v = o.lower(o.upper(a, True))
        relation = {
            "witness-uol-strictly-below": v < a,
            "witness-uol-incomparable": incomparable_sets(v, a),
            "witness-uol-strictly-above": a < v,
        }[name]
        return reflexive and not proto and relation and v == s("uol")
    if name == "witness-upper-critical-not-upper-definite":
        x, z = s("x"), s("relative_to")
        return (reflexive and proto and (x, z) in o.critical()["upper"]
                and o.upper(x) != x and o.upper(x) == s("upper"))
    raise KeyError(f"unknown witness {name!r}")
