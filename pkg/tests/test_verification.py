import pytest

from ltlteach.errors import NotFitting, Unevaluable, FragmentError
from ltlteach.formula import MONOTONE, And, Atom, Next, Or, parse_formula, to_text
from ltlteach.sample import Sample
from ltlteach.schema import parse_schema
from ltlteach.semantics import eval_finite
from ltlteach.verification import (
    EnumerationOrder, enumerate_formulas, evaluate, fits, oracle_upward_closure, verify_unique,
)
from ltlteach.wordexpr import parse_expr
from ltlteach.words import W

from reference import count_formulas

p, q = Atom("p"), Atom("q")
PXP = And(p, Next(p))
INTRO = Sample(("p", "q"), [(W("p", "p"), True), (W("", "p"), False), (W("p", ""), False)])


def test_intro_example_fits():
    assert fits(PXP, INTRO)
    assert fits(Or(PXP, q), INTRO)


def test_first_failure_is_reported():
    result = fits(parse_formula("false"), INTRO)
    assert not result and result.failure == INTRO.examples[0]


def test_unique_without_disjunction():
    assert verify_unique(PXP, INTRO, {"X", "&"}, 5).status == "confirmed"


def test_refuted_with_disjunction():
    verdict = verify_unique(PXP, INTRO, {"X", "&", "|"}, 6)
    assert verdict.status == "refuted"
    assert fits(verdict.competitor, INTRO)
    assert eval_finite(PXP, verdict.witness) != eval_finite(verdict.competitor, verdict.witness)


def test_requires_fit():
    with pytest.raises(NotFitting):
        verify_unique(q, INTRO, {"X", "&"}, 3)


def test_enumeration_examples():
    assert [to_text(f) for f in EnumerationOrder("p", {"X"}, 2)] == ["p", "X p"]
    assert [to_text(f) for f in EnumerationOrder("p", {"X", "true"}, 2)] == ["true", "p", "X true", "X p"]
    assert len(EnumerationOrder("p", {"&", "sF"}, 3).formulas()) == 4


@pytest.mark.parametrize("ap,ops,unary,binary,extra", [
    ("p", {"&", "sF"}, 1, 1, 0),
    ("pq", {"X", "|", "U", "true"}, 1, 2, 1),
    ("pq", MONOTONE, 2, 2, 2),
])
def test_enumeration_counts(ap, ops, unary, binary, extra):
    got = EnumerationOrder(ap, ops, 5).formulas()
    assert len(got) == sum(count_formulas(len(ap), unary, binary, extra, s) for s in range(1, 6))
    assert len(set(got)) == len(got)


def test_enumeration_is_prefix_stable():
    small = EnumerationOrder("pq", MONOTONE, 3).formulas()
    large = EnumerationOrder("pq", MONOTONE, 4).formulas()
    assert large[: len(small)] == small


def test_semantic_dedup():
    reps = list(enumerate_formulas(EnumerationOrder("p", {"F", "|"}, 4), dedup=True))
    assert [to_text(f) for f in reps] == ["p", "F p"]


def test_evaluate_dispatch():
    ap = ("p", "q")
    assert evaluate(parse_formula("F p"), parse_expr("{}^w.{p}", ap), ap)
    assert not evaluate(parse_formula("sG p"), parse_expr("{p}.{}^w", ap), ap)
    assert evaluate(parse_formula("X q & p"), parse_expr("{p}.{q}^w", ap), ap)
    assert evaluate(parse_formula("!q"), parse_expr("{p}^w", ap), ap)
    with pytest.raises(Unevaluable):
        evaluate(parse_formula("p U q"), parse_expr("{p}^w.{q}", ap), ap)


def test_schema_payloads():
    s = Sample(("p", "q"), [(parse_schema("[true]*.[p&q].[true]*"), True), (parse_schema("[!p|!q]*"), False)])
    assert fits(parse_formula("F(p & q)"), s)
    assert not fits(parse_formula("F p"), s)
    with pytest.raises(Unevaluable):
        fits(parse_formula("G(p | !p)"), Sample(("p", "q"), [(parse_schema("[p]*.[q]"), True)]))


def test_oracle():
    assert oracle_upward_closure(parse_formula("sF p"), 3, "p").confirmed
    assert oracle_upward_closure(parse_formula("sF p & sF q"), 4, "pq").confirmed
    assert oracle_upward_closure(parse_formula("false"), 3, "p").confirmed
    with pytest.raises(FragmentError):
        oracle_upward_closure(parse_formula("X p"), 3, "p")


def test_characterizations_are_unique_on_a_slice():
    from ltlteach.characterization import characterize_monotone
    for phi in EnumerationOrder("pq", MONOTONE, 4).formulas()[::9]:
        report = characterize_monotone(phi, "pq")
        assert verify_unique(phi, report.sample, MONOTONE, 4).status == "confirmed"
