import pytest

from conftest import reflexive, universe
from roughprax.errors import NotPRAXError, RoughError, UniverseMismatch
from roughprax.knowledge import KnowledgePair, granular_positive_region, o_coarser, p_coarser
from roughprax.relation import BinaryRelation


def test_discrete_inside_example(ex1_fixed):
    u = ex1_fixed.universe
    q = BinaryRelation.from_pairs(u, [(i, i) for i in range(len(u.elements))])
    p = KnowledgePair(ex1_fixed, q)
    assert not p_coarser(p) and p_coarser(p.swapped())
    assert not o_coarser(p) and o_coarser(p.swapped())
    g = granular_positive_region(p).as_dict(u)
    assert g["e"]["approx"] == ["e"]
    assert g["f"]["approx"] == ["f"]
    assert g["l"]["approx"] == []
    assert g["a"]["approx"] == []
    assert g["e"]["within_base_granules_of"] == ["e"]


def test_entries_are_lower_approximations():
    big = reflexive(3, "ab", "ba", "bc")
    small = reflexive(3, "ab", "ba")
    p = KnowledgePair(big, small)
    reg = granular_positive_region(p)
    # [a] = [b] = {a, b} in both; [c] grows to {b, c} in the base
    assert reg.entries == (0b011, 0b011, 0)
    assert reg.containing[0] == (0, 1)


def test_validation():
    with pytest.raises(UniverseMismatch):
        KnowledgePair(reflexive(2), reflexive(3))
    with pytest.raises(RoughError):
        granular_positive_region(KnowledgePair(reflexive(2), reflexive(2, "ab")))
    not_reflexive = BinaryRelation.from_pairs(universe(2), [(0, 0)])
    with pytest.raises(NotPRAXError):
        o_coarser(KnowledgePair(reflexive(2), not_reflexive))
    with pytest.raises(NotPRAXError):
        p_coarser(KnowledgePair(not_reflexive, reflexive(2)))


def test_coarseness_reflexive():
    r = reflexive(3, "ab", "bc", "cb")
    p = KnowledgePair(r, r)
    assert o_coarser(p) and p_coarser(p)
