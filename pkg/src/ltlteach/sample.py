"""Labeled examples, samples and the line-based sample file format.

::

    ap: p q r
    + word {p,q}.{r}.{p,q}
    - expr ({p,r}.{q,r})^w . {p,q}^w
    - schema [p&q]*.[!r]
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import LtlError
from .schema import Schema, format_schema, parse_schema
from .wordexpr import WordExpr, format_expr, parse_expr
from .words import format_word, make_ap, parse_word


def payload_kind(payload) -> str:
    if isinstance(payload, tuple):
        return "word"
    if isinstance(payload, WordExpr):
        return "expr"
    if isinstance(payload, Schema):
        return "schema"
    raise TypeError(f"unsupported payload {payload!r}")


def format_payload(payload) -> str:
    kind = payload_kind(payload)
    if kind == "word":
        return format_word(payload)
    if kind == "expr":
        return format_expr(payload)
    return format_schema(payload)


@dataclass(frozen=True)
class LabeledExample:
    payload: object
    positive: bool

    @property
    def kind(self) -> str:
        return payload_kind(self.payload)

    @property
    def sign(self) -> str:
        return "+" if self.positive else "-"

    def __str__(self) -> str:
        return f"{self.sign} {self.kind} {format_payload(self.payload)}"


class Sample:
    """A declared atom set and a duplicate-free list of labeled examples."""

    def __init__(self, ap, examples=()):
        self.ap = make_ap(ap)
        seen = {}
        for ex in examples:
            if not isinstance(ex, LabeledExample):
                ex = LabeledExample(*ex)
            seen.setdefault(ex, None)
        self.examples = tuple(seen)

    def __iter__(self):
        return iter(self.examples)

    def __len__(self) -> int:
        return len(self.examples)

    def __eq__(self, other) -> bool:
        return isinstance(other, Sample) and (self.ap, self.examples) == (other.ap, other.examples)

    def __repr__(self) -> str:
        return f"Sample(ap={self.ap}, {len(self.examples)} examples)"

    @property
    def positives(self) -> list:
        return [ex.payload for ex in self.examples if ex.positive]

    @property
    def negatives(self) -> list:
        return [ex.payload for ex in self.examples if not ex.positive]

    def extend(self, examples) -> Sample:
        return Sample(self.ap, list(self.examples) + list(examples))

    def to_text(self) -> str:
        lines = ["ap: " + " ".join(self.ap)]
        lines += [str(ex) for ex in self.examples]
        return "\n".join(lines) + "\n"


def read_sample(text: str) -> Sample:
    ap = None
    examples = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("ap:"):
            if ap is not None:
                raise LtlError(f"line {lineno}: duplicate ap header")
            ap = make_ap(line[3:].replace(",", " ").split())
            continue
        if ap is None:
            raise LtlError(f"line {lineno}: examples before the 'ap:' header")
        parts = line.split(None, 2)
        if len(parts) != 3 or parts[0] not in "+-" or len(parts[0]) != 1:
            raise LtlError(f"line {lineno}: expected '+|- word|expr|schema payload'")
        sign, kind, body = parts
        try:
            if kind == "word":
                payload = parse_word(body, ap)
            elif kind == "expr":
                payload = parse_expr(body, ap)
            elif kind == "schema":
                payload = parse_schema(body, ap)
            else:
                raise LtlError(f"unknown payload kind {kind!r}")
        except LtlError as exc:
            raise LtlError(f"line {lineno}: {exc}") from exc
        examples.append(LabeledExample(payload, sign == "+"))
    if ap is None:
        raise LtlError("missing 'ap:' header")
    return Sample(ap, examples)
