"""The nine-element worked example and its conformance checks.

The relation is shipped exactly as printed (``VERBATIM_PAIRS``).  As printed
it is not proto-transitive: ``c``-``g`` and ``g``-``b`` are linked both ways
but ``(c, b)`` is missing.  ``fixed_relation`` adds that single pair.
"""

from __future__ import annotations

from roughprax.approx import lower_proto, lower_symm, neighborhoods
from roughprax.relation import (
    BinaryRelation,
    Universe,
    classify,
    proto_transitivity_witness,
    reflexive_closure,
    weak_transitivity_witness,
    tau,
)
from roughprax.report import ConformanceReport

UNIVERSE = Universe(("a", "b", "c", "e", "f", "g", "h", "l", "n"))

VERBATIM_PAIRS = (
    ("a", "a"), ("l", "l"), ("n", "n"), ("n", "h"), ("h", "n"), ("l", "n"),
    ("g", "c"), ("c", "g"), ("g", "l"), ("b", "g"), ("g", "b"), ("h", "g"),
    ("a", "b"), ("b", "c"), ("h", "a"), ("a", "c"),
)
FIX_PAIR = ("c", "b")

# Neighbourhood table as printed, row by row.
PRINTED_PLAIN = {
    "a": "ah", "b": "bcg", "c": "bcg", "g": "bcgh", "e": "e",
    "f": "f", "h": "hn", "l": "lg", "n": "nlgh",
}
PRINTED_SYMMETRIZED = {
    "a": "a", "b": "bcg", "c": "bcg", "g": "bcg", "e": "e",
    "f": "f", "h": "hn", "l": "l", "n": "nh",
}
# Rows where the printed table disagrees with the neighbourhood definition.
KNOWN_PLAIN_DISCREPANCIES = ("b", "c", "n")
KNOWN_SYMMETRIZED_DISCREPANCIES = ("b", "c")


def verbatim_relation() -> BinaryRelation:
    return BinaryRelation.from_named_pairs(UNIVERSE, VERBATIM_PAIRS)


def fixed_relation() -> BinaryRelation:
    return BinaryRelation.from_named_pairs(UNIVERSE, (*VERBATIM_PAIRS, FIX_PAIR))


def _names(mask: int) -> list[str]:
    return UNIVERSE.names(mask)


def _named_triple(t):
    return None if t is None else [UNIVERSE.elements[i] for i in t]


def run_example1() -> ConformanceReport:
    report = ConformanceReport("example1")
    r = verbatim_relation()
    p = reflexive_closure(r)
    n = neighborhoods(p)
    m = UNIVERSE.mask

    a_set, f_set = m("ahf"), m("l")
    for name, claim, got, want in (
        ("A-lower", "lower approximation of {a,h,f} is {a,h,f}", lower_proto(n, a_set), m("ahf")),
        ("A-lower-symm", "symmetrized lower approximation of {a,h,f} is {a,f}", lower_symm(n, a_set), m("af")),
        ("F-lower", "lower approximation of {l} is empty", lower_proto(n, f_set), 0),
        ("F-lower-symm", "symmetrized lower approximation of {l} is {l}", lower_symm(n, f_set), m("l")),
    ):
        report.add(name, claim, got == want, got=_names(got), expected=_names(want))
    report.add("A-strict", "symmetrized lower of {a,h,f} is strictly inside its lower",
               lower_symm(n, a_set) != lower_proto(n, a_set)
               and lower_symm(n, a_set) & ~lower_proto(n, a_set) == 0)
    report.add("F-strict", "lower of {l} is strictly inside its symmetrized lower",
               lower_proto(n, f_set) != lower_symm(n, f_set)
               and lower_proto(n, f_set) & ~lower_symm(n, f_set) == 0)

    for kind, rows, printed, known in (
        ("plain", n.plain, PRINTED_PLAIN, KNOWN_PLAIN_DISCREPANCIES),
        ("symmetrized", n.symmetrized, PRINTED_SYMMETRIZED, KNOWN_SYMMETRIZED_DISCREPANCIES),
    ):
        for x, elem in enumerate(UNIVERSE.elements):
            got, want = rows[x], m(printed[elem])
            name = f"table-{kind}-{elem}"
            claim = f"{kind} neighbourhood of {elem} matches the printed table"
            detail = {"got": _names(got), "printed": _names(want)}
            if got == want:
                report.add(name, claim, True, **detail)
            elif elem in known:
                report.discrepancy(name, claim + " (printed row disagrees with the definition)", **detail)
            else:
                report.add(name, claim, False, **detail)

    report.add("verbatim-reflexive", "the relation as printed is not reflexive", not classify(r).reflexive)
    report.add("closure-reflexive", "its reflexive closure is reflexive", classify(p).reflexive)
    witness = proto_transitivity_witness(r)
    report.add("verbatim-proto-transitive",
               "the relation as printed fails proto-transitivity with witness (c, g, b)",
               witness == tuple(UNIVERSE.index(e) for e in "cgb"),
               witness=_named_triple(witness),
               kernel_witness=_named_triple(weak_transitivity_witness(tau(r))))

    fixed = fixed_relation()
    fixed_p = reflexive_closure(fixed)
    fr, fp = classify(fixed), classify(fixed_p)
    report.add("fixed-pras", "adding (c, b) gives a proto-transitive relation that is not reflexive",
               fr.is_PRAS and not fr.is_PRAX)
    report.add("fixed-prax", "the reflexive closure of the repaired relation is reflexive and proto-transitive",
               fp.is_PRAX and not fp.transitive, flags=fp.as_dict())
    fixed_n = neighborhoods(fixed_p)
    report.notes["fixed_symmetrized_rows_matching_table"] = [
        e for x, e in enumerate(UNIVERSE.elements) if fixed_n.symmetrized[x] == m(PRINTED_SYMMETRIZED[e])
    ]
    report.notes["universe"] = list(UNIVERSE.elements)
    return report
