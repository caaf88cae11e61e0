"""Acceptance criteria, one test per criterion.

Each criterion function returns ``(ok, summary)``. The pytest run prints
one PASS/FAIL line per criterion in the terminal summary; running this file
directly prints the same lines.
"""

from __future__ import annotations

import json
import random
import subprocess
import sys
import time
from functools import lru_cache
from itertools import product
from pathlib import Path

import pytest

from roughprax.approx import lower_proto, neighborhoods
from roughprax.definites import proto_definite_algebra
from roughprax.example1 import KNOWN_PLAIN_DISCREPANCIES, KNOWN_SYMMETRIZED_DISCREPANCIES, run_example1
from roughprax.generate import GeneratorConfig, default_universe, generate_pras, generate_prax, random_relation
from roughprax.oracle import Oracle
from roughprax.quotient import ATOM_TYPES, check_atomicity, quotient
from roughprax.relation import BinaryRelation, is_proto_transitive, proto_transitivity_witness
from roughprax.verify import UNCLASSIFIED_NOTE, oracle_suite, recheck_witness, verify_theorems

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []

SEED = 20261015
VERIFY_TRIALS, VERIFY_SIZE = 200, 6
VERIFY_BUDGET_S = 60.0
EXAMPLE_BUDGET_S = 1.0
FIXTURES = Path(__file__).parent / "fixtures" / "witnesses"
WITNESSES = (
    "witness-lower-vs-symmetrized-lower",
    "witness-definite-families-incomparable",
    "witness-u-definite-not-in-uo-definite",
    "witness-upper-critical-not-upper-definite",
)


@lru_cache(maxsize=None)
def _verify_run():
    start = time.perf_counter()
    report = verify_theorems(VERIFY_TRIALS, VERIFY_SIZE, SEED)
    return report, time.perf_counter() - start


def criterion_1():
    start = time.perf_counter()
    report = run_example1()
    elapsed = time.perf_counter() - start
    names = ("A-lower", "A-lower-symm", "F-lower", "F-lower-symm", "A-strict", "F-strict")
    bad = [n for n in names if report.by_name(n).status != "pass"]
    ok = not bad and elapsed < EXAMPLE_BUDGET_S
    return ok, f"approximation values exact ({len(names) - len(bad)}/{len(names)}), {elapsed:.3f}s"


def criterion_2():
    report = run_example1()
    u = ("a", "b", "c", "e", "f", "g", "h", "l", "n")
    bad = []
    for kind, known in (("plain", KNOWN_PLAIN_DISCREPANCIES), ("symmetrized", KNOWN_SYMMETRIZED_DISCREPANCIES)):
        for e in u:
            status = report.by_name(f"table-{kind}-{e}").status
            want = "documented-discrepancy" if e in known else "pass"
            if status != want:
                bad.append(f"{kind}-{e}:{status}")
    # rows named explicitly as expected values
    for e in ("a", "g", "h", "l"):
        if report.by_name(f"table-plain-{e}").status != "pass":
            bad.append(f"plain-{e}")
    discrepancies = sorted(c.name for c in report.checks if c.status == "documented-discrepancy")
    return not bad, f"mismatches={bad or 'none'}; documented discrepancies={discrepancies}"


def criterion_3():
    report, elapsed = _verify_run()
    laws = [c for c in report.checks if not c.name.startswith("witness-")]
    failed = [c for c in laws if c.failed]
    short = [c for c in laws if c.detail.get("cases", 0) < VERIFY_TRIALS and c.detail.get("instances", 0) < VERIFY_TRIALS]
    ok = not failed and not short and elapsed < VERIFY_BUDGET_S
    listing = ", ".join(f"{c.name} {c.detail['failures']}/{c.detail['cases']}" for c in failed)
    return ok, (f"{len(laws) - len(failed)}/{len(laws)} laws hold, {elapsed:.1f}s"
                + (f"; failing: {listing}" if failed else ""))


def _mutants(rng: random.Random, size: int, count: int):
    """Relations near the proto-transitive boundary: generated PRAX and PRAS
    with one pair toggled, plus arbitrary relations."""
    out = []
    for i in range(count):
        kind = i % 3
        if kind == 2:
            out.append(random_relation(size, rng))
            continue
        cfg = GeneratorConfig(size, rng.getrandbits(32), asym_pairs=rng.randint(0, size * (size - 1) // 2))
        r = generate_prax(cfg) if kind == 0 else generate_pras(cfg)
        if rng.random() < 0.5:
            pairs = set(r.pairs())
            pairs ^= {(rng.randrange(size), rng.randrange(size))}
            r = BinaryRelation.from_pairs(r.universe, pairs)
        out.append(r)
    return out


def _agree(r: BinaryRelation) -> tuple[bool, bool]:
    kernel_route = is_proto_transitive(r)
    scan_route = proto_transitivity_witness(r) is None
    oracle_route = Oracle(r.size, r.pairs()).proto_transitive_direct()
    return kernel_route == scan_route == oracle_route, kernel_route


def criterion_4():
    disagreements, positives, total = 0, 0, 0
    for size in range(1, 5):
        u = default_universe(size)
        cells = [(x, y) for x in range(size) for y in range(size)]
        for bits in product((0, 1), repeat=len(cells)):
            r = BinaryRelation.from_pairs(u, [c for c, b in zip(cells, bits) if b])
            same, pt = _agree(r)
            disagreements += not same
            positives += pt
            total += 1
    exhaustive = total
    for r in _mutants(random.Random(SEED), 7, 1000):
        same, pt = _agree(r)
        disagreements += not same
        positives += pt
        total += 1
    return disagreements == 0, (f"{exhaustive} exhaustive (|S|<=4) + 1000 at |S|=7, "
                                f"{positives} proto-transitive, {disagreements} disagreements")


def criterion_5():
    rng = random.Random(SEED)
    failures, instances = [], 0
    for size in range(1, 9):
        for _ in range(25):
            cfg = GeneratorConfig(size, rng.getrandbits(32), asym_pairs=rng.randint(0, size * (size - 1) // 2))
            r = generate_prax(cfg)
            bad = proto_definite_algebra(neighborhoods(r)).axiom_failures()
            instances += 1
            if bad:
                failures.append((size, cfg.seed, bad))
    return not failures, f"{instances} PRAX instances of size 1..8, {len(failures)} with axiom failures"


def _explained(n, cls) -> bool:
    """The stated cause of an unclassified atom: a single member {y} with [y] = {y}
    and y inside some other neighbourhood."""
    if len(cls.members) != 1:
        return False
    (m,) = cls.members
    if m.bit_count() != 1:
        return False
    y = m.bit_length() - 1
    return n.plain[y] == m and any(g & m for x, g in enumerate(n.plain) if x != y)


def criterion_6():
    rng = random.Random(SEED)
    counts = {t: 0 for t in ATOM_TYPES}
    non_atomic, untagged, unexplained, instances = 0, 0, 0, 0
    for size in range(1, 7):
        for _ in range(50):
            cfg = GeneratorConfig(size, rng.getrandbits(32), asym_pairs=rng.randint(0, size * (size - 1) // 2))
            n = neighborhoods(generate_prax(cfg))
            h = quotient(n)
            instances += 1
            non_atomic += not check_atomicity(h)[0]
            for j in h.atoms:
                tag = h.atom_type(j)
                if tag not in ATOM_TYPES:
                    untagged += 1
                    continue
                counts[tag] += 1
                if tag == "unclassified" and not _explained(n, h.classes[j]):
                    unexplained += 1
    total = sum(counts.values())
    rate = counts["unclassified"] / total if total else 0.0
    ok = non_atomic == 0 and untagged == 0 and unexplained == 0 and bool(UNCLASSIFIED_NOTE)
    return ok, (f"{instances} PRAX, non-atomic={non_atomic}, atom types={counts}, "
                f"unclassified rate={rate:.3f}, unexplained={unexplained}")


def criterion_7():
    report, _ = _verify_run()
    fresh = {c.name: c.status == "pass" for c in report.checks if c.name.startswith("witness-")}
    stored = {}
    for name in WITNESSES:
        path = FIXTURES / f"{name}.json"
        stored[name] = path.exists() and recheck_witness(json.loads(path.read_text()))
    bad = [w for w in WITNESSES if not (fresh.get(w) and stored[w])]
    return not bad, f"{len(WITNESSES) - len(bad)}/{len(WITNESSES)} witnesses found, oracle-confirmed and stored"


def criterion_8():
    rng = random.Random(SEED)
    failing = []
    for i in range(50):
        cfg = GeneratorConfig(8, rng.getrandbits(32), asym_pairs=rng.randint(0, 28))
        r = generate_prax(cfg) if i % 5 else random_relation(8, rng)
        rep = oracle_suite(r)
        if not rep.ok:
            failing.append([c.name for c in rep.failures])
    r = generate_prax(GeneratorConfig(8, SEED, asym_pairs=10))

    def mutant(n, a):
        got = lower_proto(n, a)
        return got ^ 1 if a == n.full else got

    caught = [c.name for c in oracle_suite(r, overrides={"L": mutant}).failures]
    ok = not failing and caught == ["oracle-operator-L"]
    return ok, f"50 instances at |S|=8, {len(failing)} disagreeing; seeded defect caught by {caught}"


def _cli(*argv) -> bytes:
    return subprocess.run([sys.executable, "-m", "roughprax", *argv], capture_output=True, check=False).stdout


def criterion_9():
    runs = {
        "verify": ("verify", "--trials", "20", "--size", "6", "--seed", str(SEED)),
        "example1": ("example1",),
    }
    same = {}
    for name, argv in runs.items():
        first, second = _cli(*argv), _cli(*argv)
        same[name] = bool(first) and first == second
    return all(same.values()), f"byte-identical reruns: {same}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


def _line(i: int, ok: bool, summary: str) -> str:
    return f"criterion {i}: {'PASS' if ok else 'FAIL'} - {summary}"


@pytest.mark.slow
@pytest.mark.parametrize("index", range(1, len(CRITERIA) + 1))
def test_criterion(index):
    ok, summary = CRITERIA[index - 1]()
    line = _line(index, ok, summary)
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    results = []
    for i, fn in enumerate(CRITERIA, 1):
        ok, summary = fn()
        print(_line(i, ok, summary), flush=True)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
