import random

import pytest
from hypothesis import strategies as st

from roughprax.example1 import fixed_relation, verbatim_relation
from roughprax.relation import BinaryRelation, Universe, reflexive_closure


def universe(size: int) -> Universe:
    return Universe(tuple("abcdefghij"[:size]))


def rel(size: int, *pairs: str) -> BinaryRelation:
    """Relation from two-letter pair strings, e.g. ``rel(3, "ab", "ba")``."""
    return BinaryRelation.from_named_pairs(universe(size), [tuple(p) for p in pairs])


def reflexive(size: int, *pairs: str) -> BinaryRelation:
    return reflexive_closure(rel(size, *pairs))


@pytest.fixture
def ex1_verbatim():
    return verbatim_relation()


@pytest.fixture
def ex1_closure():
    return reflexive_closure(verbatim_relation())


@pytest.fixture
def ex1_fixed():
    return reflexive_closure(fixed_relation())


@pytest.fixture
def rng():
    return random.Random(12345)


@st.composite
def relations(draw, min_size=1, max_size=5, reflexive_only=False):
    size = draw(st.integers(min_size, max_size))
    bits = draw(st.lists(st.booleans(), min_size=size * size, max_size=size * size))
    pairs = [(i // size, i % size) for i, b in enumerate(bits) if b]
    r = BinaryRelation.from_pairs(universe(size), pairs)
    return reflexive_closure(r) if reflexive_only else r


@st.composite
def relation_and_subsets(draw, k=2, **kw):
    r = draw(relations(**kw))
    full = r.universe.full
    subs = [draw(st.integers(0, full)) for _ in range(k)]
    return (r, *subs)


@st.composite
def prax(draw, min_size=1, max_size=6):
    from roughprax.generate import GeneratorConfig, generate_prax
    size = draw(st.integers(min_size, max_size))
    seed = draw(st.integers(0, 2**32))
    asym = draw(st.integers(0, size * (size - 1) // 2))
    return generate_prax(GeneratorConfig(size, seed, asym_pairs=asym))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
