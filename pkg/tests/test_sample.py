import pytest

from ltlteach.errors import LtlError
from ltlteach.sample import LabeledExample, Sample, read_sample
from ltlteach.schema import parse_schema
from ltlteach.wordexpr import parse_expr
from ltlteach.words import W

TEXT = """\
# a comment
ap: p q r
+ word {p,q}.{r}.{p,q}
- expr ({p,r}.{q,r})^w . {p,q}^w
- schema [p&q]*.[!r]
"""


def test_read_and_write():
    s = read_sample(TEXT)
    assert s.ap == ("p", "q", "r")
    assert [ex.kind for ex in s] == ["word", "expr", "schema"]
    assert s.positives == [W("p,q", "r", "p,q")]
    assert read_sample(s.to_text()) == s
    assert s.to_text().splitlines()[2] == "- expr ({p,r}.{q,r})^w.{p,q}^w"


def test_duplicates_are_dropped():
    s = Sample("p", [(W("p"), True), (W("p"), True), (W("p"), False)])
    assert len(s) == 2


def test_errors():
    with pytest.raises(LtlError):
        read_sample("+ word {p}\n")
    with pytest.raises(LtlError):
        read_sample("ap: p\n+ bytes {p}\n")
    with pytest.raises(LtlError):
        read_sample("ap: p\n+ word {q}\n")


def test_example_str():
    assert str(LabeledExample(parse_schema("[p]"), False)) == "- schema [p]"
    assert str(LabeledExample(parse_expr("{p}^w"), True)) == "+ expr {p}^w"
