"""LTL abstract syntax, parser, printer and syntactic rewrites.

Derived operators are expanded while parsing: ``G a`` becomes ``!F !a``,
``sG a`` becomes ``!sF !a`` and ``a -> b`` becomes ``!a | b``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import FragmentError, ParseError, UndeclaredAtom


@dataclass(frozen=True)
class Formula:
    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    child: Formula


@dataclass(frozen=True)
class Next(Formula):
    child: Formula


@dataclass(frozen=True)
class Eventually(Formula):
    child: Formula


@dataclass(frozen=True)
class StrictEventually(Formula):
    child: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Until(Formula):
    left: Formula
    right: Formula


def _cache_hash(cls):
    # the generated hash walks the whole tree; nodes are immutable, so keep it
    raw = cls.__hash__

    def __hash__(self):
        try:
            return self.__dict__["_hash"]
        except KeyError:
            h = self.__dict__["_hash"] = raw(self)
            return h

    cls.__hash__ = __hash__


for _cls in (Atom, Top, Bottom, Not, Next, Eventually, StrictEventually, And, Or, Until):
    _cache_hash(_cls)

TRUE = Top()
FALSE = Bottom()

UNARY = (Not, Next, Eventually, StrictEventually)
BINARY = (And, Or, Until)

# operator tags; the order is the tie-break order used for enumeration
TAG_OF = {
    Top: "true",
    Bottom: "false",
    Not: "!",
    Next: "X",
    StrictEventually: "sF",
    Eventually: "F",
    And: "&",
    Or: "|",
    Until: "U",
}
TAGS = ("true", "false", "!", "X", "sF", "F", "&", "|", "U")
TEMPORAL = frozenset({"U", "F", "sF", "X"})
MONOTONE = frozenset({"F", "sF", "&", "|", "true", "false"})
X_POSITIVE = frozenset({"X", "&", "|", "true", "false"})

TAG_NAMES = {
    "U": "U", "F": "F", "sF": "F̂", "X": "X", "&": "∧", "|": "∨",
    "!": "¬", "true": "⊤", "false": "⊥",
}
_TAG_ALIASES = {
    "U": "U", "F": "F", "sF": "sF", "F̂": "sF", "Fs": "sF", "X": "X",
    "&": "&", "∧": "&", "and": "&", "|": "|", "∨": "|", "or": "|",
    "!": "!", "¬": "!", "not": "!", "true": "true", "⊤": "true",
    "false": "false", "⊥": "false",
}


def parse_ops(text: str) -> frozenset[str]:
    """Parse an operator set such as ``"F,&"`` or ``"sF,X,&,true"``."""
    ops = set()
    for part in re.split(r"[,\s]+", text.strip().strip("{}")):
        if not part:
            continue
        if part not in _TAG_ALIASES:
            raise ValueError(f"unknown operator {part!r}")
        ops.add(_TAG_ALIASES[part])
    return frozenset(ops)


def format_ops(ops) -> str:
    return "{" + ",".join(TAG_NAMES[t] for t in TAGS if t in ops) + "}"


def size(phi: Formula) -> int:
    if isinstance(phi, UNARY):
        return 1 + size(phi.child)
    if isinstance(phi, BINARY):
        return 1 + size(phi.left) + size(phi.right)
    return 1


def signature(phi: Formula) -> frozenset[str]:
    tags = set()
    stack = [phi]
    while stack:
        node = stack.pop()
        if not isinstance(node, Atom):
            tags.add(TAG_OF[type(node)])
        if isinstance(node, UNARY):
            stack.append(node.child)
        elif isinstance(node, BINARY):
            stack += [node.left, node.right]
    return frozenset(tags)


def atoms(phi: Formula) -> frozenset[str]:
    if isinstance(phi, Atom):
        return frozenset({phi.name})
    if isinstance(phi, UNARY):
        return atoms(phi.child)
    if isinstance(phi, BINARY):
        return atoms(phi.left) | atoms(phi.right)
    return frozenset()


def x_depth(phi: Formula) -> int:
    """Nesting depth of X."""
    if isinstance(phi, UNARY):
        return x_depth(phi.child) + isinstance(phi, Next)
    if isinstance(phi, BINARY):
        return max(x_depth(phi.left), x_depth(phi.right))
    return 0


def temporal_depth(phi: Formula) -> int:
    if isinstance(phi, UNARY):
        return temporal_depth(phi.child) + (not isinstance(phi, Not))
    if isinstance(phi, BINARY):
        return max(temporal_depth(phi.left), temporal_depth(phi.right)) + isinstance(phi, Until)
    return 0


def subformulas(phi: Formula) -> list[Formula]:
    """Distinct subformulas, children before parents."""
    seen: dict[Formula, None] = {}

    def walk(node):
        if node in seen:
            return
        if isinstance(node, UNARY):
            walk(node.child)
        elif isinstance(node, BINARY):
            walk(node.left)
            walk(node.right)
        seen[node] = None

    walk(phi)
    return list(seen)


def G(phi: Formula) -> Formula:
    return Not(Eventually(Not(phi)))


def sG(phi: Formula) -> Formula:
    return Not(StrictEventually(Not(phi)))


def strict_globally_body(phi: Formula):
    """Return ``a`` if ``phi`` is the expansion of ``sG a``, else None."""
    if isinstance(phi, Not) and isinstance(phi.child, StrictEventually) and isinstance(phi.child.child, Not):
        return phi.child.child.child
    return None


def globally_body(phi: Formula):
    if isinstance(phi, Not) and isinstance(phi.child, Eventually) and isinstance(phi.child.child, Not):
        return phi.child.child.child
    return None


def conj(parts) -> Formula:
    parts = list(parts)
    if not parts:
        return TRUE
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disj(parts) -> Formula:
    parts = list(parts)
    if not parts:
        return FALSE
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


def nest(op, phi: Formula, n: int) -> Formula:
    for _ in range(n):
        phi = op(phi)
    return phi


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(->)|(sF|sG)|([a-z][a-z0-9_]*)|([XFGU])|([()!&|]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(text, pos, "operator, atom or parenthesis")
        start = m.start(m.lastindex)
        kind = ("op", "op", "id", "op", "op")[m.lastindex - 1]
        tokens.append((kind, m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ap):
        self.text = text
        self.ap = ap
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def is_op(self, value: str) -> bool:
        kind, v, _ = self.peek()
        return kind == "op" and v == value

    def fail(self, expected: str):
        raise ParseError(self.text, self.peek()[2], expected)

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.is_op("->"):
            self.take()
            return Or(Not(left), self.formula())
        return left

    def disjunction(self) -> Formula:
        out = self.conjunction()
        while self.is_op("|"):
            self.take()
            out = Or(out, self.conjunction())
        return out

    def conjunction(self) -> Formula:
        out = self.until()
        while self.is_op("&"):
            self.take()
            out = And(out, self.until())
        return out

    def until(self) -> Formula:
        left = self.unary()
        if self.is_op("U"):
            self.take()
            right = self.unary()
            if self.is_op("U"):
                self.fail("parentheses around chained U")
            return Until(left, right)
        return left

    def unary(self) -> Formula:
        kind, v, _ = self.peek()
        if kind == "op" and v in ("!", "X", "F", "G", "sF", "sG"):
            self.take()
            child = self.unary()
            return {
                "!": Not, "X": Next, "F": Eventually, "G": G,
                "sF": StrictEventually, "sG": sG,
            }[v](child)
        return self.primary()

    def primary(self) -> Formula:
        kind, v, pos = self.peek()
        if kind == "id":
            self.take()
            if v == "true":
                return TRUE
            if v == "false":
                return FALSE
            if self.ap is not None and v not in self.ap:
                raise UndeclaredAtom(v, self.ap)
            return Atom(v)
        if self.is_op("("):
            self.take()
            inner = self.formula()
            if not self.is_op(")"):
                self.fail("')'")
            self.take()
            return inner
        self.fail("atom, constant, unary operator or '('")


def parse_formula(text: str, ap=None) -> Formula:
    """Parse ``text``; when ``ap`` is given every atom must belong to it."""
    p = _Parser(text, None if ap is None else frozenset(ap))
    phi = p.formula()
    if p.peek()[0] != "end":
        p.fail("binary operator or end of input")
    return phi


# ---------------------------------------------------------------- printing

_PREC = {Or: 1, And: 2, Until: 3}
_UNARY_TEXT = {Not: "!", Next: "X ", Eventually: "F ", StrictEventually: "sF "}


def _prec(phi: Formula) -> int:
    return _PREC.get(type(phi), 4)


def to_text(phi: Formula) -> str:
    """ASCII rendering that parses back to the identical tree."""
    if isinstance(phi, Atom):
        return phi.name
    if isinstance(phi, Top):
        return "true"
    if isinstance(phi, Bottom):
        return "false"
    if isinstance(phi, UNARY):
        return _UNARY_TEXT[type(phi)] + _wrap(phi.child, _prec(phi.child) < 4)
    p = _PREC[type(phi)]
    sym = {Or: " | ", And: " & ", Until: " U "}[type(phi)]
    if isinstance(phi, Until):
        left = _wrap(phi.left, _prec(phi.left) <= p)
    else:
        left = _wrap(phi.left, _prec(phi.left) < p)
    return left + sym + _wrap(phi.right, _prec(phi.right) <= p)


def _wrap(phi: Formula, paren: bool) -> str:
    s = to_text(phi)
    return f"({s})" if paren else s


def pretty(phi: Formula) -> str:
    """Unicode rendering with sG/G folded back, for reports."""
    body = strict_globally_body(phi)
    if body is not None:
        return "Ĝ" + _pwrap(body)
    body = globally_body(phi)
    if body is not None:
        return "G" + _pwrap(body)
    if isinstance(phi, Atom):
        return phi.name
    if isinstance(phi, Top):
        return "⊤"
    if isinstance(phi, Bottom):
        return "⊥"
    if isinstance(phi, UNARY):
        return {Not: "¬", Next: "X", Eventually: "F", StrictEventually: "F̂"}[type(phi)] + _pwrap(phi.child)
    sym = {Or: " ∨ ", And: " ∧ ", Until: " U "}[type(phi)]
    return _pwrap(phi.left) + sym + _pwrap(phi.right)


def _pwrap(phi: Formula) -> str:
    s = pretty(phi)
    return f"({s})" if isinstance(phi, BINARY) else s


# ---------------------------------------------------------------- rewrites

def rewrite_for_fragment(phi: Formula, target: str) -> Formula:
    """Rewrite F into the strict fragments.

    ``strict-eventually``: ``F a`` becomes ``a | sF a``; the result uses only
    sF, &, |, true, false. ``strict-globally``: ``G a`` becomes ``a & sG a``;
    the result uses only sG, &, |, true, false.
    """
    if target == "strict-eventually":
        return _rewrite_sf(phi)
    if target == "strict-globally":
        return _rewrite_sg(phi)
    raise ValueError(f"unknown target fragment {target!r}")


def _rewrite_sf(phi: Formula) -> Formula:
    if isinstance(phi, (Atom, Top, Bottom)):
        return phi
    if isinstance(phi, And):
        return And(_rewrite_sf(phi.left), _rewrite_sf(phi.right))
    if isinstance(phi, Or):
        return Or(_rewrite_sf(phi.left), _rewrite_sf(phi.right))
    if isinstance(phi, StrictEventually):
        return StrictEventually(_rewrite_sf(phi.child))
    if isinstance(phi, Eventually):
        c = _rewrite_sf(phi.child)
        return Or(c, StrictEventually(c))
    raise FragmentError(f"{to_text(phi)!r} is outside the sF,&,|,true,false fragment", phi)


def _rewrite_sg(phi: Formula) -> Formula:
    if isinstance(phi, (Atom, Top, Bottom)):
        return phi
    if isinstance(phi, And):
        return And(_rewrite_sg(phi.left), _rewrite_sg(phi.right))
    if isinstance(phi, Or):
        return Or(_rewrite_sg(phi.left), _rewrite_sg(phi.right))
    body = strict_globally_body(phi)
    if body is not None:
        return sG(_rewrite_sg(body))
    body = globally_body(phi)
    if body is not None:
        c = _rewrite_sg(body)
        return And(c, sG(c))
    raise FragmentError(f"{to_text(phi)!r} is outside the sG,&,|,true,false fragment", phi)


def is_monotone(phi: Formula) -> bool:
    return signature(phi) <= MONOTONE


def is_strict_globally(phi: Formula) -> bool:
    try:
        _check_sg(phi)
    except FragmentError:
        return False
    return True


def _check_sg(phi: Formula) -> None:
    if isinstance(phi, (Atom, Top, Bottom)):
        return
    if isinstance(phi, (And, Or)):
        _check_sg(phi.left)
        _check_sg(phi.right)
        return
    body = strict_globally_body(phi)
    if body is None:
        raise FragmentError(f"{to_text(phi)!r} is outside the sG,&,|,true,false fragment", phi)
    _check_sg(body)


def dualize(phi: Formula) -> Formula:
    """Swap & and |, true and false, sG and sF; atoms stay.

    On the sG fragment the result is equivalent to the negation of ``phi``
    with every atom negated, and lies in the sF fragment. The map is an
    involution.
    """
    if isinstance(phi, Atom):
        return phi
    if isinstance(phi, Top):
        return FALSE
    if isinstance(phi, Bottom):
        return TRUE
    if isinstance(phi, And):
        return Or(dualize(phi.left), dualize(phi.right))
    if isinstance(phi, Or):
        return And(dualize(phi.left), dualize(phi.right))
    if isinstance(phi, StrictEventually):
        return sG(dualize(phi.child))
    body = strict_globally_body(phi)
    if body is not None:
        return StrictEventually(dualize(body))
    raise FragmentError(f"{to_text(phi)!r} cannot be dualized", phi)
