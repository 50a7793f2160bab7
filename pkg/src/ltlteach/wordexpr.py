"""Word expressions: finitely presented transfinite words.

An expression is a letter, a concatenation or an omega-power. Concatenations
are kept right-nested; build them with :func:`concat`. ``EPS`` stands for the
empty word and vanishes inside concatenations.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import EmptyWord, NonFlat
from .ordinal import Ordinal
from .words import _Scanner, format_letter, read_letter


@dataclass(frozen=True)
class WordExpr:
    def __str__(self) -> str:
        return format_expr(self)


@dataclass(frozen=True)
class Lit(WordExpr):
    letter: frozenset


@dataclass(frozen=True)
class Concat(WordExpr):
    left: WordExpr
    right: WordExpr


@dataclass(frozen=True)
class Omega(WordExpr):
    child: WordExpr


@dataclass(frozen=True)
class Eps(WordExpr):
    pass


EPS = Eps()


def _parts(e: WordExpr):
    if isinstance(e, Concat):
        yield from _parts(e.left)
        yield from _parts(e.right)
    elif not isinstance(e, Eps):
        yield e


def concat(*exprs: WordExpr) -> WordExpr:
    """Right-nested concatenation; ``EPS`` parts are dropped."""
    parts = [p for e in exprs for p in _parts(e)]
    if not parts:
        return EPS
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = Concat(p, out)
    return out


def from_word(w: tuple) -> WordExpr:
    return concat(*(Lit(x) for x in w))


def omega(e) -> WordExpr:
    if isinstance(e, tuple):
        e = from_word(e)
    if isinstance(e, Eps):
        raise EmptyWord("omega-power of the empty word")
    return Omega(e)


def expr_length(e: WordExpr) -> Ordinal:
    if isinstance(e, Lit):
        return Ordinal.finite(1)
    if isinstance(e, Concat):
        return expr_length(e.left) + expr_length(e.right)
    if isinstance(e, Omega):
        return expr_length(e.child).times_omega()
    return Ordinal()


def expr_size(e: WordExpr) -> int:
    if isinstance(e, Concat):
        return 1 + expr_size(e.left) + expr_size(e.right)
    if isinstance(e, Omega):
        return 1 + expr_size(e.child)
    return 1


def is_star_free(e: WordExpr) -> bool:
    if isinstance(e, Omega):
        return False
    if isinstance(e, Concat):
        return is_star_free(e.left) and is_star_free(e.right)
    return True


def is_flat(e: WordExpr) -> bool:
    if isinstance(e, Omega):
        return is_star_free(e.child)
    if isinstance(e, Concat):
        return is_flat(e.left) and is_flat(e.right)
    return True


def to_word(e: WordExpr) -> tuple:
    """The finite word denoted by a star-free expression."""
    if not is_star_free(e):
        raise ValueError(f"{format_expr(e)} is not a finite word")
    return tuple(p.letter for p in _parts(e))


def segments(e: WordExpr) -> list[tuple[str, tuple]]:
    """Flat expression as a list of ``("lit", (letter,))`` / ``("omega", period)``."""
    if not is_flat(e):
        raise NonFlat(f"{format_expr(e)} has nested omega-powers")
    out = []
    for p in _parts(e):
        if isinstance(p, Lit):
            out.append(("lit", (p.letter,)))
        else:
            out.append(("omega", to_word(p.child)))
    return out


def from_segments(segs) -> WordExpr:
    parts = []
    for kind, w in segs:
        parts.append(omega(w) if kind == "omega" else from_word(w))
    return concat(*parts)


@lru_cache(maxsize=1 << 14)
def _unfold_coords(e: WordExpr, k: int):
    word, coords = [], []
    for i, (kind, w) in enumerate(segments(e)):
        reps = k if kind == "omega" else 1
        for period in range(reps):
            for off, x in enumerate(w):
                word.append(x)
                coords.append((i, period, off))
    return tuple(word), tuple(coords)


def unfold(e: WordExpr, k: int) -> tuple:
    """Replace every omega-power by ``k`` copies of its period."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return _unfold_coords(e, k)[0]


def complement_word(e: WordExpr, ap) -> WordExpr:
    ap = frozenset(ap)
    if isinstance(e, Lit):
        return Lit(ap - e.letter)
    if isinstance(e, Concat):
        return Concat(complement_word(e.left, ap), complement_word(e.right, ap))
    if isinstance(e, Omega):
        return Omega(complement_word(e.child, ap))
    return e


@dataclass(frozen=True)
class Embedding:
    """Greedy-leftmost homomorphism: ``positions[i]`` is the image of ``u[i]``.

    For expression targets ``positions`` index ``unfold(target, |u|)`` and
    ``coords[i]`` is the (segment, period, offset) of that position.
    """

    positions: tuple[int, ...]
    coords: tuple[tuple[int, int, int], ...] | None = None


def greedy_match(u: tuple, target: tuple, anchored: bool):
    """Leftmost strictly increasing map with ``u[i] <= target[h(i)]``."""
    pos = []
    j = 0
    for i, x in enumerate(u):
        if anchored and i == 0:
            if not target or not x <= target[0]:
                return None
            pos.append(0)
            j = 1
            continue
        while j < len(target) and not x <= target[j]:
            j += 1
        if j == len(target):
            return None
        pos.append(j)
        j += 1
    return tuple(pos)


def embeds(u: tuple, target, anchored: bool = True):
    """Decide ``u`` embeds into ``target`` (a finite word or flat expression).

    Returns an :class:`Embedding` or None. Only the first ``|u|`` periods of
    any omega-block can be needed, so the expression is unfolded that far.
    """
    u = tuple(u)
    if not u:
        if anchored:
            raise EmptyWord("anchored embedding of the empty word")
        return Embedding(())
    if isinstance(target, WordExpr):
        word, coords = _unfold_coords(target, len(u))
        pos = greedy_match(u, word, anchored)
        if pos is None:
            return None
        return Embedding(pos, tuple(coords[p] for p in pos))
    pos = greedy_match(u, tuple(target), anchored)
    return None if pos is None else Embedding(pos)


# ---------------------------------------------------------------- syntax

def format_expr(e: WordExpr) -> str:
    if isinstance(e, Eps):
        return "eps"
    if isinstance(e, Lit):
        return format_letter(e.letter)
    if isinstance(e, Omega):
        inner = format_expr(e.child)
        if not isinstance(e.child, Lit):
            inner = f"({inner})"
        return inner + "^w"
    left = format_expr(e.left)
    if isinstance(e.left, Concat):
        left = f"({left})"
    return left + "." + format_expr(e.right)


def _read_seq(sc: _Scanner, ap) -> WordExpr:
    parts = [_read_factor(sc, ap)]
    while sc.eat("."):
        parts.append(_read_factor(sc, ap))
    return concat(*parts)


def _read_factor(sc: _Scanner, ap) -> WordExpr:
    if sc.eat("("):
        e = _read_seq(sc, ap)
        sc.expect(")")
    elif sc.eat("eps"):
        e = EPS
    elif sc.peek("{"):
        e = Lit(read_letter(sc, ap))
    else:
        sc.fail("letter, 'eps' or '('")
    while sc.eat("^w"):
        e = omega(e)
    return e


def parse_expr(text: str, ap=None) -> WordExpr:
    """Parse e.g. ``({p,r}.{q,r})^w . {p,q}^w``."""
    sc = _Scanner(text)
    e = _read_seq(sc, ap)
    if not sc.at_end():
        sc.fail("'.', '^w' or end of input")
    return e
