import pytest
from hypothesis import given

from ltlteach.errors import NonFlat, UndeclaredAtom
from ltlteach.schema import (
    BAnd, BAtom, BNot, Sym, exact, format_schema, instances, is_exact_letter, is_simple,
    letters_of, min_instance, parse_schema, star_height, translate_schematic,
)
from ltlteach.wordexpr import parse_expr, unfold
from ltlteach.words import W

from strategies import letters


def test_translation_of_worked_expression():
    r = translate_schematic(parse_expr("{p,q}^w.({p,r}.{q,r})^w"), "pqr")
    assert format_schema(r) == "[p&q&!r]*.([p&!q&r].[!p&q&r])*"
    assert is_simple(r) and is_exact_letter(r, "pqr")


def test_translation_small():
    assert translate_schematic(parse_expr("{p}"), "pq") == Sym(BAnd(BAtom("p"), BNot(BAtom("q"))))
    r = translate_schematic(parse_expr("{}^w.{p}"), "p")
    assert format_schema(r) == "[!p]*.[p]"
    e = parse_expr("{}^w.{p}")
    assert unfold(e, 3) in instances(r, "p", 4)


def test_translation_rejects_nested_omega():
    with pytest.raises(NonFlat):
        translate_schematic(parse_expr("({p}^w)^w"), "p")


@given(letters(("p", "q", "r")))
def test_exact_predicate_has_one_letter(sigma):
    assert letters_of(exact(sigma, "pqr"), "pqr") == [sigma]


def test_min_instance_and_instances():
    assert min_instance(parse_schema("[p&!q]*.[q&!p]"), "pq") == W("q")
    assert instances(parse_schema("[p].[q]*"), "p,q".split(","), 2) == [
        W("p"), W("p,q"), W("p", "q"), W("p", "p,q"), W("p,q", "q"), W("p,q", "p,q"),
    ]
    with pytest.raises(ValueError):
        min_instance(parse_schema("[p]"), "pq")


def test_syntax():
    r = parse_schema("[true]*.[p&q].[true]*")
    assert format_schema(r) == "[true]*.[p&q].[true]*"
    assert star_height(parse_schema("(([p])*.[q])*")) == 2
    assert parse_schema(format_schema(r)) == r
    assert format_schema(parse_schema("[!p|!q]*")) == "[!p|!q]*"
    with pytest.raises(UndeclaredAtom):
        parse_schema("[s]", "pq")
