"""Schematic expressions: union-free regular expressions over letter predicates."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NonFlat
from .words import _Scanner, all_letters, check_letter, sort_words
from .wordexpr import Concat, Eps, Lit, Omega, WordExpr, is_flat


@dataclass(frozen=True)
class BoolExpr:
    def __str__(self) -> str:
        return format_bool(self)


@dataclass(frozen=True)
class BAtom(BoolExpr):
    name: str


@dataclass(frozen=True)
class BTrue(BoolExpr):
    pass


@dataclass(frozen=True)
class BFalse(BoolExpr):
    pass


@dataclass(frozen=True)
class BNot(BoolExpr):
    child: BoolExpr


@dataclass(frozen=True)
class BAnd(BoolExpr):
    left: BoolExpr
    right: BoolExpr


@dataclass(frozen=True)
class BOr(BoolExpr):
    left: BoolExpr
    right: BoolExpr


def holds(b: BoolExpr, sigma: frozenset) -> bool:
    if isinstance(b, BAtom):
        return b.name in sigma
    if isinstance(b, BTrue):
        return True
    if isinstance(b, BFalse):
        return False
    if isinstance(b, BNot):
        return not holds(b.child, sigma)
    if isinstance(b, BAnd):
        return holds(b.left, sigma) and holds(b.right, sigma)
    return holds(b.left, sigma) or holds(b.right, sigma)


def bool_atoms(b: BoolExpr) -> set[str]:
    if isinstance(b, BAtom):
        return {b.name}
    if isinstance(b, BNot):
        return bool_atoms(b.child)
    if isinstance(b, (BAnd, BOr)):
        return bool_atoms(b.left) | bool_atoms(b.right)
    return set()


def letters_of(b: BoolExpr, ap) -> list[frozenset]:
    """Letters over ``ap`` satisfying ``b``, in canonical order."""
    return [s for s in all_letters(ap) if holds(b, s)]


def exact(sigma: frozenset, ap) -> BoolExpr:
    """The predicate satisfied by ``sigma`` alone."""
    lits = [BAtom(a) if a in sigma else BNot(BAtom(a)) for a in sorted(ap)]
    if not lits:
        return BTrue()
    out = lits[0]
    for x in lits[1:]:
        out = BAnd(out, x)
    return out


@dataclass(frozen=True)
class Schema:
    def __str__(self) -> str:
        return format_schema(self)


@dataclass(frozen=True)
class Sym(Schema):
    pred: BoolExpr


@dataclass(frozen=True)
class Seq(Schema):
    items: tuple


@dataclass(frozen=True)
class Star(Schema):
    child: Schema


def seq(*items: Schema) -> Schema:
    flat = []
    for it in items:
        if isinstance(it, Seq):
            flat.extend(it.items)
        else:
            flat.append(it)
    return flat[0] if len(flat) == 1 else Seq(tuple(flat))


def star_height(r: Schema) -> int:
    if isinstance(r, Star):
        return 1 + star_height(r.child)
    if isinstance(r, Seq):
        return max((star_height(x) for x in r.items), default=0)
    return 0


def is_simple(r: Schema) -> bool:
    return star_height(r) <= 1


def syms(r: Schema):
    if isinstance(r, Sym):
        yield r
    elif isinstance(r, Seq):
        for x in r.items:
            yield from syms(x)
    elif isinstance(r, Star):
        yield from syms(r.child)


def is_exact_letter(r: Schema, ap) -> bool:
    return all(len(letters_of(s.pred, ap)) == 1 for s in syms(r))


def translate_schematic(e: WordExpr, ap) -> Schema:
    """Letters become exact predicates, omega-powers become Kleene stars."""
    if not is_flat(e):
        raise NonFlat(f"{e} has nested omega-powers")
    return _translate(e, sorted(ap))


def _translate(e: WordExpr, ap) -> Schema:
    if isinstance(e, Lit):
        return Sym(exact(e.letter, ap))
    if isinstance(e, Concat):
        return seq(_translate(e.left, ap), _translate(e.right, ap))
    if isinstance(e, Omega):
        return Star(_translate(e.child, ap))
    if isinstance(e, Eps):
        return Seq(())
    raise TypeError(e)


def from_word_schema(w: tuple, ap) -> Schema:
    return seq(*(Sym(exact(x, ap)) for x in w)) if w else Seq(())


def min_instance(r: Schema, ap) -> tuple:
    """Every star taken zero times; requires an exact-letter schema."""
    if not is_exact_letter(r, ap):
        raise ValueError(f"{r} is not an exact-letter schema")
    if isinstance(r, Sym):
        return (letters_of(r.pred, ap)[0],)
    if isinstance(r, Seq):
        return tuple(x for it in r.items for x in min_instance(it, ap))
    return ()


def _lang(r: Schema, ap, budget: int) -> set[tuple]:
    if isinstance(r, Sym):
        return {(s,) for s in letters_of(r.pred, ap)} if budget >= 1 else set()
    if isinstance(r, Seq):
        cur = {()}
        for it in r.items:
            part = _lang(it, ap, budget)
            cur = {a + b for a in cur for b in part if len(a) + len(b) <= budget}
        return cur
    body = _lang(r.child, ap, budget) - {()}
    out = {()}
    frontier = {()}
    while frontier:
        frontier = {a + b for a in frontier for b in body if len(a) + len(b) <= budget} - out
        out |= frontier
    return out


def instances(r: Schema, ap, max_len: int) -> list[tuple]:
    """Nonempty members of L(r) of length <= max_len, shortlex order."""
    return sort_words(w for w in _lang(r, sorted(ap), max_len) if w)


# ---------------------------------------------------------------- syntax

def format_bool(b: BoolExpr) -> str:
    return _fmt_bool(b, 0)


def _fmt_bool(b: BoolExpr, ctx: int) -> str:
    if isinstance(b, BAtom):
        return b.name
    if isinstance(b, BTrue):
        return "true"
    if isinstance(b, BFalse):
        return "false"
    if isinstance(b, BNot):
        return "!" + _fmt_bool(b.child, 3)
    prec, sym = (2, "&") if isinstance(b, BAnd) else (1, "|")
    s = _fmt_bool(b.left, prec) + sym + _fmt_bool(b.right, prec + 1)
    return f"({s})" if ctx > prec else s


def format_schema(r: Schema) -> str:
    if isinstance(r, Sym):
        return f"[{format_bool(r.pred)}]"
    if isinstance(r, Seq):
        if not r.items:
            return "eps"
        return ".".join(
            f"({format_schema(x)})" if isinstance(x, Seq) else format_schema(x) for x in r.items
        )
    inner = format_schema(r.child)
    if not isinstance(r.child, Sym):
        inner = f"({inner})"
    return inner + "*"


def _read_bool_or(sc: _Scanner, ap) -> BoolExpr:
    out = _read_bool_and(sc, ap)
    while sc.eat("|"):
        out = BOr(out, _read_bool_and(sc, ap))
    return out


def _read_bool_and(sc: _Scanner, ap) -> BoolExpr:
    out = _read_bool_unary(sc, ap)
    while sc.eat("&"):
        out = BAnd(out, _read_bool_unary(sc, ap))
    return out


def _read_bool_unary(sc: _Scanner, ap) -> BoolExpr:
    if sc.eat("!"):
        return BNot(_read_bool_unary(sc, ap))
    if sc.eat("("):
        b = _read_bool_or(sc, ap)
        sc.expect(")")
        return b
    name = sc.ident()
    if name is None:
        sc.fail("atom, 'true', 'false', '!' or '('")
    if name == "true":
        return BTrue()
    if name == "false":
        return BFalse()
    if ap is not None:
        check_letter(frozenset({name}), ap)
    return BAtom(name)


def _read_schema_seq(sc: _Scanner, ap) -> Schema:
    items = [_read_schema_factor(sc, ap)]
    while sc.eat("."):
        items.append(_read_schema_factor(sc, ap))
    return seq(*items)


def _read_schema_factor(sc: _Scanner, ap) -> Schema:
    if sc.eat("["):
        r = Sym(_read_bool_or(sc, ap))
        sc.expect("]")
    elif sc.eat("("):
        r = _read_schema_seq(sc, ap)
        sc.expect(")")
    elif sc.eat("eps"):
        r = Seq(())
    else:
        sc.fail("'[', '(' or 'eps'")
    while sc.eat("*"):
        r = Star(r)
    return r


def parse_schema(text: str, ap=None) -> Schema:
    """Parse e.g. ``[p&!q]*.([p&!q&r].[!p&q&r])*``."""
    sc = _Scanner(text)
    r = _read_schema_seq(sc, ap)
    if not sc.at_end():
        sc.fail("'.', '*' or end of input")
    return r
