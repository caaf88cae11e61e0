import json
from pathlib import Path

import pytest

from roughprax.verify import recheck_witness

FIXTURES = Path(__file__).parent / "fixtures" / "witnesses"
NAMES = (
    "witness-lower-vs-symmetrized-lower",
    "witness-definite-families-incomparable",
    "witness-u-definite-not-in-uo-definite",
    "witness-upper-critical-not-upper-definite",
    "witness-uol-strictly-below",
    "witness-uol-incomparable",
    "witness-uol-strictly-above",
)


def load(name):
    return json.loads((FIXTURES / f"{name}.json").read_text())


@pytest.mark.parametrize("name", NAMES)
def test_stored_witness_rechecks(name):
    data = load(name)
    assert data["name"] == name
    assert recheck_witness(data)


def test_tampered_witness_is_rejected():
    data = load("witness-lower-vs-symmetrized-lower")
    data["lower"] = data["lower_symm"]
    assert not recheck_witness(data)
    data = load("witness-uol-strictly-below")
    data["relation"]["pairs"] = [[e, e] for e in data["relation"]["universe"]]
    assert not recheck_witness(data)
