"""Command-line interface.

Every subcommand prints canonical JSON on stdout.  Exit codes: 0 success,
1 usage error, 2 input format error, 3 cap exceeded, 4 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from roughprax import caps
from roughprax.approx import ORIENTATIONS, OperatorExpr, apply_expr, neighborhoods
from roughprax.definites import definite_family, is_complete_sublattice, is_prax_map, proto_definite_algebra
from roughprax.errors import CapExceeded, FormatError, NotPRAXError, RoughError, UniverseMismatch
from roughprax.example1 import run_example1
from roughprax.generate import GeneratorConfig, generate_pras, generate_prax
from roughprax.io import dumps, family_names, format_edge_list, load_relation, relation_to_dict
from roughprax.knowledge import KnowledgePair, granular_positive_region, o_coarser, p_coarser
from roughprax.quotient import check_atomicity, quotient
from roughprax.relation import (
    BinaryRelation,
    classify,
    proto_transitivity_witness,
    tau,
    weak_transitivity_witness,
)
from roughprax.representation import Bruinval, bruinval_members, critical_points, list_brooms
from roughprax.verify import oracle_suite, verify_theorems

EXIT_OK, EXIT_USAGE, EXIT_FORMAT, EXIT_CAP, EXIT_VERIFY = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits with 2 by default
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(obj: Any) -> None:
    sys.stdout.write(dumps(obj))


def _named(r: BinaryRelation, triple) -> Optional[list[str]]:
    return None if triple is None else [r.universe.elements[i] for i in triple]


def cmd_check(args) -> int:
    r = load_relation(args.relation)
    flags = classify(r).as_dict()
    _emit({
        "flags": flags,
        "proto_transitivity_witness": _named(r, proto_transitivity_witness(r)),
        "kernel_weak_transitivity_witness": _named(r, weak_transitivity_witness(tau(r))),
        "size": r.size,
    })
    return EXIT_OK


def cmd_nbhd(args) -> int:
    r = load_relation(args.relation)
    n = neighborhoods(r, args.orientation)
    names = r.universe.names
    _emit({
        "orientation": args.orientation,
        "plain": {e: names(n.plain[i]) for i, e in enumerate(r.universe.elements)},
        "symmetrized": {e: names(n.symmetrized[i]) for i, e in enumerate(r.universe.elements)},
    })
    return EXIT_OK


def cmd_approx(args) -> int:
    r = load_relation(args.relation)
    n = neighborhoods(r, args.orientation)
    a = r.universe.parse_subset(args.set)
    expr = OperatorExpr.parse(args.expr)
    _emit({"set": r.universe.names(a), "expr": str(expr), "result": r.universe.names(apply_expr(n, expr, a))})
    return EXIT_OK


def cmd_definites(args) -> int:
    r = load_relation(args.relation)
    n = neighborhoods(r, args.orientation)
    fam = definite_family(n, args.op)
    out: dict[str, Any] = {
        "operator": fam.operator,
        "count": len(fam),
        "members": family_names(r.universe, fam.members),
        "complete_sublattice": is_complete_sublattice(fam),
    }
    if fam.operator == "lu" and is_prax_map(n):
        out["boolean_algebra_failures"] = proto_definite_algebra(n).axiom_failures()
    _emit(out)
    return EXIT_OK


def _dot(h, universe) -> str:
    def label(c) -> str:
        return "(" + ",".join(universe.names(c.lower)) + " | " + ",".join(universe.names(c.upper)) + ")"

    lines = ["digraph quotient {", "  rankdir=BT;"]
    for i, c in enumerate(h.classes):
        lines.append(f'  c{i} [label="{label(c)}"];')
    for i, j in h.covers:
        lines.append(f"  c{i} -> c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_quotient(args) -> int:
    r = load_relation(args.relation)
    n = neighborhoods(r, args.orientation)
    h = quotient(n)
    u = r.universe
    atomic, witness = check_atomicity(h)
    _emit({
        "classes": [
            {"index": i, "lower": u.names(c.lower), "upper": u.names(c.upper), "members": family_names(u, c.members)}
            for i, c in enumerate(h.classes)
        ],
        "covers": [list(p) for p in h.covers],
        "atoms": [{"index": j, "type": h.atom_type(j)} for j in h.atoms],
        "atomic": atomic,
        "atomicity_witness": witness,
        "bottom": h.bottom,
        "top": h.top,
    })
    if args.dot:
        Path(args.dot).write_text(_dot(h, u))
    return EXIT_OK


def cmd_critical(args) -> int:
    r = load_relation(args.relation)
    _emit(critical_points(neighborhoods(r, args.orientation)).as_dict(r.universe))
    return EXIT_OK


def cmd_brooms(args) -> int:
    r = load_relation(args.relation)
    listing = list_brooms(neighborhoods(r, args.orientation), limit=args.limit)
    u = r.universe
    _emit({
        "upper": [family_names(u, b) for b in listing.upper],
        "lower": [family_names(u, b) for b in listing.lower],
        "upper_truncated": listing.upper_truncated,
        "lower_clause_discriminates": listing.lower_clause_discriminates,
    })
    return EXIT_OK


def cmd_bruinval(args) -> int:
    r = load_relation(args.relation)
    text = Path(args.spec).read_text() if args.spec.lstrip()[:1] != "{" else args.spec
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad bruinval JSON: {exc}") from None
    b = Bruinval.from_dict(r.universe, data)
    members = bruinval_members(neighborhoods(r, args.orientation), b)
    _emit({"kind": b.kind, "members": family_names(r.universe, members)})
    return EXIT_OK


def cmd_compare(args) -> int:
    base = load_relation(args.base)
    other = load_relation(args.other)
    p = KnowledgePair(base, other)
    out: dict[str, Any] = {
        "o_coarser_RQ": o_coarser(p),
        "o_coarser_QR": o_coarser(p.swapped()),
        "p_coarser_RQ": p_coarser(p),
        "p_coarser_QR": p_coarser(p.swapped()),
        "gpos": None,
    }
    if other.issubset(base):
        out["gpos"] = granular_positive_region(p, args.orientation).as_dict(base.universe)
    _emit(out)
    return EXIT_OK


def cmd_gen(args) -> int:
    profile = tuple(int(b) for b in args.blocks.split(",")) if args.blocks else None
    try:
        cfg = GeneratorConfig(args.size, args.seed, profile, args.asym)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    r = generate_pras(cfg) if args.pras else generate_prax(cfg)
    if args.format == "edges":
        sys.stdout.write(format_edge_list(r))
    else:
        _emit(relation_to_dict(r))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_theorems(args.trials, args.size, args.seed, fixture_dir=args.fixtures)
    _emit(report.as_dict())
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_oracle(args) -> int:
    report = oracle_suite(load_relation(args.relation), fixture=str(args.relation))
    _emit(report.as_dict())
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_example1(args) -> int:
    report = run_example1()
    _emit(report.as_dict())
    return EXIT_OK if report.ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="roughprax", description="Rough sets over proto-transitive approximation spaces.")
    p.add_argument("--orientation", choices=ORIENTATIONS, default="succ",
                   help="neighbourhood convention (default: succ, [x] = {y : R y x})")
    p.add_argument("--cap", help="cap override, an integer or name=value pairs (also PRAX_CAP_OVERRIDE)")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_relation(name: str, fn, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("relation", help="relation file (JSON or edge list)")
        sp.set_defaults(func=fn)
        return sp

    with_relation("check", cmd_check, "classify a relation")
    with_relation("nbhd", cmd_nbhd, "plain and symmetrized neighbourhoods")
    sp = with_relation("approx", cmd_approx, "apply an operator expression to a subset")
    sp.add_argument("--set", required=True, help="comma-separated element names")
    sp.add_argument("--expr", required=True, help="dotted operators applied left to right, e.g. uo.l")
    sp = with_relation("definites", cmd_definites, "definite family of an operator")
    sp.add_argument("--op", required=True, help="l, u, lo, uo, l+, u+, lu or a dotted expression")
    sp = with_relation("quotient", cmd_quotient, "rough classes, covers and atoms")
    sp.add_argument("--dot", help="also write the Hasse diagram in Graphviz format")
    with_relation("critical", cmd_critical, "critical point classification")
    sp = with_relation("brooms", cmd_brooms, "upper and lower brooms")
    sp.add_argument("--limit", type=int, default=10_000, help="stop listing upper brooms after this many")
    sp = with_relation("bruinval", cmd_bruinval, "members of a bruinval")
    sp.add_argument("--spec", required=True, help="bruinval JSON, inline or as a file path")
    with_relation("oracle", cmd_oracle, "cross-check a relation against the naive oracle")

    sp = sub.add_parser("compare", help="coarseness and granular positive region of two relations")
    sp.add_argument("base", help="relation R")
    sp.add_argument("other", help="relation Q")
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("gen", help="generate a random PRAX (or PRAS)")
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--asym", type=int, default=0, help="one-directional pairs to add")
    sp.add_argument("--blocks", help="comma-separated kernel block sizes")
    sp.add_argument("--pras", action="store_true", help="skip the reflexive closure and drop diagonal pairs")
    sp.add_argument("--format", choices=("json", "edges"), default="json")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="run the randomised theorem suite")
    sp.add_argument("--trials", type=int, default=200)
    sp.add_argument("--size", type=int, default=6)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--fixtures", help="directory for witness fixtures")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("example1", help="conformance checks for the nine-element example")
    sp.set_defaults(func=cmd_example1)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        if args.cap:
            caps.set_override(caps.parse_override(args.cap))
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (FormatError, UniverseMismatch, NotPRAXError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except RoughError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    finally:
        caps.set_override({})


if __name__ == "__main__":
    sys.exit(main())
