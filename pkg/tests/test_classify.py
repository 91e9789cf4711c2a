import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import random_rules, random_weak_rules, validated
from latticegames.classify import (
    Level,
    Witness,
    check_condition1_on_region,
    check_doubling_on_region,
    classify,
    is_squarefree,
    is_squarefree_via_positive_part,
    is_weakly_squarefree,
    squarefree_violation_witness,
)
from latticegames.core import RuleSet
from latticegames.heap_codec import nim_rules

ERRATUM = RuleSet.of([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0)])
TWO = RuleSet.of([(1, 0), (0, 1), (2, -1)])


def test_levels():
    assert not is_squarefree(ERRATUM) and is_weakly_squarefree(ERRATUM)
    assert classify(ERRATUM).level is Level.WEAKLY_SQUAREFREE_ONLY
    assert is_squarefree(nim_rules(3))
    assert classify(nim_rules(3)).level is Level.SQUAREFREE
    assert not is_squarefree(TWO) and not is_weakly_squarefree(TWO)
    assert classify(TWO).level is Level.NOT_WEAKLY_SQUAREFREE


def test_witness_two_positive_entries():
    w = squarefree_violation_witness((1, 1, 0))
    assert (w.p, w.q) == ((1, 0, 0), (0, 1, 0))
    assert w.verify()


def test_witness_doubling():
    w = squarefree_violation_witness((2, -1))
    assert (w.p, w.q, w.tag) == ((1, 1), (1, 1), "doubling")
    assert w.verify()


def test_witness_none():
    assert squarefree_violation_witness((1, -3, 0)) is None


def test_doubling_has_priority():
    w = squarefree_violation_witness((3, 1, -2))
    assert w.tag == "doubling" and w.p == (2, 2, 2) and w.verify()


def test_condition1_region_examples():
    assert check_condition1_on_region(nim_rules(3), 2) == []
    found = check_condition1_on_region(ERRATUM, 1)
    assert Witness((1, 1, 0), (1, 0, 0), (0, 1, 0), "region") in found
    assert all(w.verify() for w in found)
    assert check_condition1_on_region(RuleSet(3, ()), 3) == []


def test_condition1_limit_truncates_only_output():
    full = check_condition1_on_region(TWO, 3)
    assert check_condition1_on_region(TWO, 3, limit=2) == full[:2]


moves = st.integers(1, 4).flatmap(lambda d: st.lists(st.integers(-3, 3), min_size=d, max_size=d).filter(any))


@given(moves)
def test_condition3_equals_condition4(m):
    rs = RuleSet(len(m), (tuple(m),))
    assert is_squarefree(rs) == is_squarefree_via_positive_part(rs)


@settings(max_examples=200, deadline=None)
@given(moves)
def test_condition1_equals_condition3_per_move(m):
    rs = RuleSet(len(m), (tuple(m),))
    bound = max(max(m), 1) + 1
    found = check_condition1_on_region(rs, bound, limit=500)
    assert (not found) == is_squarefree(rs)
    assert all(w.verify() for w in found)
    w = squarefree_violation_witness(m)
    assert (w is None) == is_squarefree(rs)
    if w is not None:
        assert w.verify()
        assert max(w.p + w.q) <= bound


@settings(max_examples=200, deadline=None)
@given(moves)
def test_doubling_region_matches_weak_reading(m):
    rs = RuleSet(len(m), (tuple(m),))
    bound = max(max(m), 1) + 1
    assert (not check_doubling_on_region(rs, bound)) == is_weakly_squarefree(rs)


@pytest.mark.parametrize("gen", [random_rules, random_weak_rules])
def test_squarefree_implies_weak(gen):
    for rs, _ in validated(gen, random.Random(3), 100, [1, 2, 3, 4]):
        if is_squarefree(rs):
            assert is_weakly_squarefree(rs)


def test_validated_squarefree_moves_have_exactly_one_positive_one():
    for rs, _ in validated(random_rules, random.Random(4), 200, [1, 2, 3, 4]):
        if is_squarefree(rs):
            assert all(sorted(x for x in g if x > 0) == [1] for g in rs.moves)
