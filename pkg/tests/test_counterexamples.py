"""Smallest instances refuting stated sufficient conditions.

Each case is checked twice: directly from the approximations, and through
the theorem evaluator, which must report a failure.
"""

import pytest

from conftest import reflexive
from roughprax.approx import lower_proto, neighborhoods, upper_proto
from roughprax.quotient import quotient, rough_class_members
from roughprax.representation import (
    critical_points,
    full_set_theorems_check,
    interval,
    is_full_requal_set,
    is_upper_broom,
)
from roughprax.tables import Tables

A, B, C = 0b001, 0b010, 0b100


def theorem(n, name):
    return {t.name: t for t in full_set_theorems_check(n)}[name]


def requal(n, members):
    members = list(members)
    return all(lower_proto(n, m) == lower_proto(n, members[0])
               and upper_proto(n, m) == upper_proto(n, members[0]) for m in members)


def test_atom_member_with_nonempty_lower():
    n = neighborhoods(reflexive(1))
    h = quotient(n)
    (j,) = h.atoms
    assert h.classes[j].members == (A,)
    assert lower_proto(n, A) == A


def test_singleton_definite_upper_broom():
    n = neighborhoods(reflexive(2))
    t = Tables(n)
    assert 0b11 in t.lu_definite_set and is_upper_broom(n, (0b11,))
    assert 0 in t.lu_definite_set and is_upper_broom(n, (0,))


def test_definite_cover_open_interval():
    n = neighborhoods(reflexive(2, "ba"))  # [a] = {a, b}, [b] = {b}
    assert Tables(n).lu_definite_set == {0, 0b11}
    members = interval(0, 0b11, "()")
    assert sorted(members) == [A, B]
    assert not requal(n, members)
    assert theorem(n, "definite-cover-open-interval").nonempty_counterexample is not None


def test_definite_half_open_interval():
    n = neighborhoods(reflexive(1))
    members = interval(0, A, "[)")
    assert members == [0]
    assert requal(n, members)  # non-empty and roughly equal
    assert theorem(n, "definite-half-open-interval").failures > 0


def test_half_open_cover():
    n = neighborhoods(reflexive(3, "ba", "ca", "cb"))
    members = interval(B, A | B, "[)")
    assert members == [B]
    assert A in rough_class_members(n, B)
    assert not is_full_requal_set(n, members)
    assert theorem(n, "half-open-cover").nonempty_counterexample is not None


def test_closed_interval_singleton_gap():
    n = neighborhoods(reflexive(3, "ac", "bc", "cb"))
    members = interval(A, A | B, "[]")
    assert requal(n, members)
    assert A | C in rough_class_members(n, A)
    assert theorem(n, "closed-interval-singleton-gap").failures > 0


def test_left_open_interval_singleton_gap():
    n = neighborhoods(reflexive(2, "ab", "ba"))
    members = interval(0, A, "(]")
    assert members == [A]
    assert B in rough_class_members(n, A)
    assert theorem(n, "left-open-interval-singleton-gap").failures > 0


@pytest.mark.parametrize("name", ["approximation-interval-requal", "approximation-interval-full"])
def test_approximation_interval(name):
    n = neighborhoods(reflexive(2, "ba"))
    lo, up = lower_proto(n, A), upper_proto(n, A)
    assert (lo, up) == (0, 0b11)
    assert upper_proto(n, up) == up
    assert sorted(interval(lo, up, "()")) == [A, B]
    assert not requal(n, interval(lo, up, "()"))
    assert theorem(n, name).failures > 0


def test_open_bruinval_broom():
    n = neighborhoods(reflexive(2, "ab", "ba"))
    members = interval(0, 0b11, "()")
    assert is_full_requal_set(n, members)
    # the criterion also asks the top of the broom to share the lower value of x
    assert lower_proto(n, 0b11) != lower_proto(n, 0)
    assert theorem(n, "open-bruinval-broom").failures > 0


def test_upper_definite_not_upper_critical():
    n = neighborhoods(reflexive(1))
    assert upper_proto(n, 0) == 0
    assert 0 not in critical_points(n).upper_critical_elements


def test_upper_critical_interval_not_requal():
    n = neighborhoods(reflexive(2))
    rep = critical_points(n)
    assert (0b11, 0) in rep.upper
    assert not requal(n, interval(0, 0b11, "[)"))
    assert not requal(n, interval(0, 0b11, "()"))
