import pytest
from hypothesis import given

from ltlteach.errors import ParseError, UndeclaredAtom
from ltlteach.words import (
    EMPTY, W, all_letters, format_letter, format_word, make_ap, parse_letter, parse_word,
    sort_words, words_of_length, words_up_to,
)

from strategies import words


def test_letter_order_is_bit_pattern_with_first_atom_high():
    assert all_letters("pq") == [EMPTY, frozenset("q"), frozenset("p"), frozenset("pq")]


def test_letter_order_three_atoms():
    names = [format_letter(s) for s in all_letters("pqr")]
    assert names == ["{}", "{r}", "{q}", "{q,r}", "{p}", "{p,r}", "{p,q}", "{p,q,r}"]


def test_shortlex():
    ws = [W("p"), W("", ""), W(""), W("q", "p")]
    assert sort_words(ws) == [W(""), W("p"), W("", ""), W("q", "p")]


def test_word_counts():
    assert sum(1 for _ in words_of_length("pq", 3)) == 64
    assert sum(1 for _ in words_up_to("pq", 4)) == 4 + 16 + 64 + 256


@given(words(("p", "q", "r")))
def test_format_parse_round_trip(w):
    assert parse_word(format_word(w), "pqr") == w


def test_parse_spacing_and_empty_letter():
    assert parse_word(" {p, q} . {} ") == (frozenset("pq"), EMPTY)


def test_undeclared_atom():
    with pytest.raises(UndeclaredAtom):
        parse_letter("{r}", "pq")


def test_malformed_word():
    with pytest.raises(ParseError):
        parse_word("{p}.", "p")


def test_make_ap_rejects_keywords():
    with pytest.raises(ValueError):
        make_ap(["true"])
    assert make_ap("qp") == ("p", "q")
