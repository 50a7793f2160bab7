from hypothesis import given, settings, strategies as st

from ltlteach.characterization import characterize_monotone, eval_monotone
from ltlteach.formula import MONOTONE, parse_formula
from ltlteach.schema import (
    BAnd, BAtom, BNot, BOr, BTrue, Seq, Star, Sym, instances, parse_schema, star_height,
    translate_schematic,
)
from ltlteach.schematic import bounded_fit, characterize_schematic, schematic_fit
from ltlteach.semantics import eval_finite
from ltlteach.verification import EnumerationOrder, fits
from ltlteach.wordexpr import concat, from_word, omega, parse_expr
from ltlteach.words import W

from strategies import formulas, words

PQ = ("p", "q")
MONO = ("sF", "F", "&", "|", "true", "false")


def test_worked_characterization():
    phi = parse_formula("F(p & q)")
    assert schematic_fit(phi, parse_schema("[!p|!q]*"), False, PQ).status == "fits"
    assert schematic_fit(phi, parse_schema("[true]*.[p&q].[true]*"), True, PQ).status == "fits"


def test_leading_star_breaks_first_position():
    verdict = schematic_fit(parse_formula("p"), parse_schema("[!p]*.[p]"), True, PQ)
    assert (verdict.status, verdict.witness) == ("fails", W("", "p"))


def test_negative_fit_failure_has_member_witness():
    phi = parse_formula("sF p")
    r = parse_schema("[q].[p|q]*")
    verdict = schematic_fit(phi, r, False, PQ)
    assert verdict.status == "fails"
    assert eval_finite(phi, verdict.witness)
    assert verdict.witness in instances(r, PQ, len(verdict.witness))


def test_unknown_outside_exact_cases():
    assert schematic_fit(parse_formula("G p"), parse_schema("[p]*.[p]"), True, PQ).status == "unknown"
    assert schematic_fit(parse_formula("G p"), parse_schema("[p]*.[!p]"), True, PQ).status == "fails"


def test_worked_schemas_are_negative():
    phi = parse_formula("F(p & q & F(r & F(p & q)))")
    for text in (
        "[p&q&!r]*.([p&!q&r].[!p&q&r])*",
        "([p&!q&r].[!p&q&r])*.[p&q&!r]*.([p&!q&r].[!p&q&r])*",
        "([!p&q&r].[p&!q&r])*.[p&q&!r]*.([p&!q&r].[!p&q&r])*",
    ):
        assert schematic_fit(phi, parse_schema(text), False, "pqr").status == "fits"


def test_characterize_schematic_small():
    report = characterize_schematic(parse_formula("sF p"), "p")
    assert [str(r) for r in report.sample.positives] == ["[!p].[p]"]
    assert all(star_height(r) <= 1 for r in report.sample.negatives)
    top = characterize_schematic(parse_formula("true"), PQ)
    assert [str(r) for r in top.sample.positives] == ["[!p&!q]"]


def letter_led_exprs():
    part = st.one_of(
        words(PQ, max_size=2).map(from_word),
        words(PQ, max_size=2).map(lambda w: omega(from_word(w))),
    )
    head = words(PQ, max_size=1).map(from_word)
    return st.tuples(head, st.lists(part, min_size=0, max_size=2)).map(lambda hp: concat(hp[0], *hp[1]))


@settings(max_examples=150, deadline=None)
@given(formulas(ops=("sF", "&", "|", "true", "false"), max_leaves=3), letter_led_exprs())
def test_translation_is_faithful(phi, e):
    r = translate_schematic(e, PQ)
    assert eval_monotone(phi, e) == any(eval_finite(phi, u) for u in instances(r, PQ, 6))


def test_leading_omega_power_can_be_skipped():
    # zero iterations of a leading star move a later letter to position 0
    e = parse_expr("{}^w.{p}", "p")
    r = translate_schematic(e, "p")
    assert not eval_monotone(parse_formula("p"), e)
    assert eval_finite(parse_formula("p"), W("p")) and W("p") in instances(r, "p", 1)


def bool_exprs():
    leaf = st.sampled_from([BAtom("p"), BAtom("q"), BTrue(), BNot(BAtom("p")), BNot(BAtom("q"))])
    return st.recursive(leaf, lambda c: st.one_of(st.builds(BAnd, c, c), st.builds(BOr, c, c)), max_leaves=3)


def schemas():
    sym = bool_exprs().map(Sym)
    star = st.lists(sym, min_size=1, max_size=2).map(lambda xs: Star(xs[0] if len(xs) == 1 else Seq(tuple(xs))))
    return st.lists(st.one_of(sym, star), min_size=1, max_size=3).map(
        lambda xs: xs[0] if len(xs) == 1 else Seq(tuple(xs))
    )


@settings(max_examples=60, deadline=None)
@given(formulas(ops=("sF", "F", "&", "|", "X", "!"), max_leaves=3), schemas(), st.booleans())
def test_verdicts_never_contradict_enumeration(phi, r, positive):
    verdict = schematic_fit(phi, r, positive, PQ)
    members = instances(r, PQ, 5)
    wrong = [w for w in members if eval_finite(phi, w) != positive]
    if verdict.status == "fits":
        assert not wrong
    elif verdict.status == "fails":
        assert eval_finite(phi, verdict.witness) != positive
    else:
        assert not wrong


def test_fit_transports_to_schemas():
    sweep = EnumerationOrder(PQ, MONOTONE, 4).formulas()
    for phi in sweep[::7]:
        words_sample = characterize_monotone(phi, PQ).sample
        schema_sample = characterize_schematic(phi, PQ).sample
        for psi in sweep[::11]:
            assert bool(fits(psi, words_sample)) == bool(fits(psi, schema_sample))


def test_bounded_fit_on_instances():
    sample = characterize_schematic(parse_formula("F(p & q)"), "pq").sample
    assert bounded_fit(parse_formula("F(p & q)"), sample, 5)
    assert not bounded_fit(parse_formula("F p"), sample, 5)
    assert not bounded_fit(parse_formula("sF(p & q)"), sample, 5)
