import itertools

import pytest

from ltlteach.errors import FragmentError
from ltlteach.formula import TAGS, TEMPORAL, parse_formula
from ltlteach.fragments import (
    MAXIMAL_SETS, NEGATIVE_SETS, admits_by_subset, characterize_finite_fragment,
    classify_operator_set, definable_closure,
)
from ltlteach.verification import EnumerationOrder, fits, verify_unique
from ltlteach.words import W

PQ = ("p", "q")


def all_operator_sets():
    for n in range(1, len(TAGS) + 1):
        for ops in itertools.combinations(TAGS, n):
            if set(ops) & TEMPORAL:
                yield frozenset(ops)


def test_anchors():
    assert classify_operator_set({"sF", "X", "&", "true"}).admits
    assert classify_operator_set({"F", "&"}).witness == {"F", "&"}
    assert not classify_operator_set({"U"}).admits
    assert str(classify_operator_set({"F", "&"})) == "does not admit; violated fragment {F,∧}"


def test_total_and_agrees_with_subset_rule():
    seen = 0
    for ops in all_operator_sets():
        result = classify_operator_set(ops)
        seen += 1
        assert result.admits == admits_by_subset(ops)
        if result.admits:
            assert ops <= result.witness
        else:
            assert result.witness <= definable_closure(ops)
    assert seen == 2 ** 9 - 2 ** 5


def test_negative_sets_are_not_positive():
    for n in NEGATIVE_SETS:
        assert not admits_by_subset(n)
        for m in MAXIMAL_SETS:
            assert not definable_closure(m) >= n


def test_needs_a_temporal_operator():
    with pytest.raises(FragmentError):
        classify_operator_set({"&", "!"})


def test_depth_word_is_positive():
    phi = parse_formula("X(p & X p)")
    sample = characterize_finite_fragment(phi, MAXIMAL_SETS[0], PQ).sample
    assert (W("p,q", "p,q", "p,q"), True) in [(ex.payload, ex.positive) for ex in sample]


def test_next_ladder():
    sample = characterize_finite_fragment(parse_formula("X X p"), {"X", "!"}, PQ).sample
    got = [(ex.payload, ex.positive) for ex in sample][:4]
    assert got == [(W(""), False), (W("", ""), False), (W("", "", "p"), True), (W("", "", ""), False)]


def test_eventually_or_fragment():
    phi = parse_formula("F p")
    sample = characterize_finite_fragment(phi, {"F", "|", "true", "false"}, ("p",)).sample
    assert verify_unique(phi, sample, {"F", "|", "true", "false"}, 5).status == "confirmed"


@pytest.mark.parametrize("index", range(6))
def test_each_construction_is_unique(index):
    ops = MAXIMAL_SETS[index]
    bound = 5 if index in (0, 1, 3) else 6
    for phi in EnumerationOrder(PQ, ops, 4 if index else 3):
        sample = characterize_finite_fragment(phi, ops, PQ).sample
        assert fits(phi, sample)
        assert verify_unique(phi, sample, ops, bound).status == "confirmed", phi


def test_rejects_negative_sets():
    with pytest.raises(FragmentError):
        characterize_finite_fragment(parse_formula("F(p & q)"), {"F", "&"}, PQ)
    with pytest.raises(FragmentError):
        characterize_finite_fragment(parse_formula("F p"), {"X", "!"}, PQ)
