import json

import pytest
from hypothesis import given, settings

from conftest import prax, reflexive, universe
from roughprax.approx import neighborhoods, upper_proto
from roughprax.errors import CapExceeded, FormatError
from roughprax.representation import (
    Bruinval,
    bruinval_members,
    critical_points,
    full_set_theorems_check,
    interval,
    is_full_requal_set,
    is_lower_broom,
    is_upper_broom,
    list_brooms,
)
from roughprax.relation import BinaryRelation, Universe
from roughprax.tables import Tables


def test_interval_bounds():
    assert sorted(interval(0b001, 0b111, "[]")) == [0b001, 0b011, 0b101, 0b111]
    assert sorted(interval(0b001, 0b111, "()")) == [0b011, 0b101]
    assert sorted(interval(0b001, 0b111, "[)")) == [0b001, 0b011, 0b101]
    assert sorted(interval(0b001, 0b111, "(]")) == [0b011, 0b101, 0b111]
    assert interval(0b010, 0b101, "[]") == []


def test_open_to_set_bruinval():
    u = universe(3)
    n = neighborhoods(reflexive(3))
    b = Bruinval.from_dict(u, {"kind": "open-to-set", "x": [], "alpha": [["a", "b"]]})
    assert b.bounds == "()"
    assert bruinval_members(n, b) == [0b001, 0b010]


def test_semi_closed_pieces():
    u = universe(3)
    n = neighborhoods(reflexive(3))
    b = Bruinval.from_dict(u, {
        "kind": "semi-closed",
        "alpha1": [[]], "alpha2": [["c"]],
        "beta1": [["a", "c"]], "beta2": [["a", "b", "c"]],
    })
    assert len(b.pieces()) == 4
    assert b.full_alpha == (0, 0b100)
    members = set(bruinval_members(n, b))
    # (∅, ac) ∪ [c, abc] ∪ (∅, abc] ∪ [c, ac)
    assert members == {0b001, 0b100, 0b011, 0b010, 0b101, 0b110, 0b111}


@pytest.mark.parametrize("data", [
    {"x": [], "y": []},
    {"kind": "blob"},
    {"kind": "interval-0", "x": ["a"]},
    {"kind": "interval-0", "x": ["a"], "y": ["a"], "alpha": [["a"]]},
    {"kind": "open-to-set", "x": [], "alpha": [["a"]], "bounds": "[]"},
    {"kind": "closed-to-set", "x": [], "alpha": [["a"]], "bounds": "()"},
    {"kind": "set-to-set-open", "alpha": [[]], "beta": [["a"]], "bounds": "[]"},
    {"kind": "interval-0", "x": [], "y": ["a"], "bounds": "<>"},
    {"kind": "interval-0", "x": [], "y": ["a"], "extra": 1},
])
def test_bruinval_validation(data):
    with pytest.raises(FormatError):
        Bruinval.from_dict(universe(3), data)


def test_bruinval_cap():
    u = Universe(tuple(f"x{i}" for i in range(17)))
    n = neighborhoods(BinaryRelation.from_pairs(u, [(i, i) for i in range(17)]))
    with pytest.raises(CapExceeded):
        bruinval_members(n, Bruinval("interval-0", x=0, y=1))


def test_brooms_small():
    r = reflexive(3, "ab")
    n = neighborhoods(r)
    listing = list_brooms(n)
    assert listing.upper == ((0,), (0b011,), (0b111,), (0b101, 0b110))
    assert listing.lower == ((0b110,),)
    assert not listing.upper_truncated
    assert not listing.lower_clause_discriminates
    for fam in listing.upper:
        assert is_upper_broom(n, fam)
        assert len({upper_proto(n, a) for a in fam}) == 1
    for fam in listing.lower:
        assert is_lower_broom(n, fam)
    assert not is_upper_broom(n, (0b101,))  # extends by {b, c}


def test_broom_limit_truncates():
    listing = list_brooms(neighborhoods(reflexive(3, "ab")), limit=2)
    assert len(listing.upper) == 2 and listing.upper_truncated


def test_critical_two_points():
    r = reflexive(2, "ab")  # [b] = {a, b}
    rep = critical_points(neighborhoods(r))
    assert rep.critical == (0b01, 0b11)
    assert rep.lower_absolute == (0, 0b01, 0b11)
    assert rep.upper_critical_elements == (0b01, 0b10, 0b11)
    assert (0, 0b11) not in rep.bicritical
    d = rep.as_dict(r.universe)
    assert d["CR"] == [["a"], ["a", "b"]]
    assert set(d) >= {"UC", "LC", "CR", "bicritical", "weak_upper", "weak_lower"}


def test_full_requal_set():
    n = neighborhoods(reflexive(2, "ab", "ba"))
    assert is_full_requal_set(n, [0b01, 0b10])
    assert not is_full_requal_set(n, [0b01])
    assert not is_full_requal_set(n, [])


@settings(max_examples=40, deadline=None)
@given(prax(max_size=5))
def test_closed_definite_interval_always_full(r):
    n = neighborhoods(r)
    results = {t.name: t for t in full_set_theorems_check(n, broom_search=False)}
    assert results["definite-closed-interval"].failures == 0
    assert "open-bruinval-broom" not in results
    assert len(full_set_theorems_check(n)) == 9


@settings(max_examples=40, deadline=None)
@given(prax(max_size=5))
def test_upper_brooms_share_upper_and_are_antichains(r):
    n = neighborhoods(r)
    t = Tables(n)
    for fam in list_brooms(n, limit=200).upper:
        assert len({t.upper[a] for a in fam}) == 1
        for a in fam:
            for b in fam:
                assert a == b or (a & ~b and b & ~a)


@settings(max_examples=40, deadline=None)
@given(prax(max_size=5))
def test_critical_report_is_consistent(r):
    n = neighborhoods(r)
    rep = critical_points(n)
    assert set(rep.upper) <= set(rep.weak_upper)
    for x, z in rep.upper:
        assert z & ~x == 0 and z != x
    for a, b in rep.bicritical:
        assert a & ~b == 0 and a != b
    assert set(rep.critical) <= set(rep.lower_absolute)
    assert set(rep.critical) <= set(rep.upper_critical_elements)
    json.dumps(rep.as_dict(r.universe))
