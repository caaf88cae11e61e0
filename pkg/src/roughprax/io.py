"""Relation file formats and canonical JSON output.

Two input formats are accepted:

* JSON: ``{"universe": ["a", "b"], "pairs": [["a", "b"], ...]}``
* edge list: one ``x y`` pair per line, with an optional
  ``# universe: a b c`` header.  Without the header the universe is the set
  of names in order of first appearance.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Iterable

from roughprax.bits import canonical_key
from roughprax.errors import FormatError
from roughprax.relation import BinaryRelation, Universe


def relation_from_dict(data: Any) -> BinaryRelation:
    if not isinstance(data, dict) or "universe" not in data or "pairs" not in data:
        raise FormatError('relation JSON needs "universe" and "pairs" keys')
    names = data["universe"]
    pairs = data["pairs"]
    if not isinstance(names, list) or not isinstance(pairs, list):
        raise FormatError('"universe" and "pairs" must be arrays')
    universe = Universe(tuple(names))
    for pair in pairs:
        if not isinstance(pair, list) or len(pair) != 2:
            raise FormatError(f"pair must be a two-element array, got {pair!r}")
    return BinaryRelation.from_named_pairs(universe, pairs)


def relation_to_dict(r: BinaryRelation) -> dict[str, Any]:
    return {
        "universe": list(r.universe.elements),
        "pairs": [list(p) for p in r.named_pairs()],
    }


def parse_edge_list(text: str) -> BinaryRelation:
    declared: list[str] | None = None
    seen: list[str] = []
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.lower().startswith("universe:"):
                if declared is not None:
                    raise FormatError(f"line {lineno}: second universe header")
                declared = body.split(":", 1)[1].split()
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'x y', got {raw!r}")
        pairs.append((parts[0], parts[1]))
        for name in parts:
            if name not in seen:
                seen.append(name)
    universe = Universe(tuple(declared if declared is not None else seen))
    return BinaryRelation.from_named_pairs(universe, pairs)


def format_edge_list(r: BinaryRelation) -> str:
    lines = ["# universe: " + " ".join(r.universe.elements)]
    lines.extend(f"{x} {y}" for x, y in r.named_pairs())
    return "\n".join(lines) + "\n"


def parse_relation(text: str) -> BinaryRelation:
    """Parse either format; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from None
        return relation_from_dict(data)
    return parse_edge_list(text)


def load_relation(path: str | Path) -> BinaryRelation:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None
    return parse_relation(text)


def subset_names(universe: Universe, mask: int) -> list[str]:
    return universe.names(mask)


def family_names(universe: Universe, masks: Iterable[int]) -> list[list[str]]:
    """Subsets as name lists, ordered by cardinality then bit pattern."""
    return [universe.names(m) for m in sorted(set(masks), key=canonical_key)]


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
