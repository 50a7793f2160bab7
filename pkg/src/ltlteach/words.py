"""Letters, finite words and their canonical ordering.

A letter is a ``frozenset`` of atom names and a finite word is a tuple of
letters. Letters are ordered as bit patterns over the alphabetically sorted
atoms, the first atom being the most significant bit; words are ordered
shortlex on top of that.
"""
from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator

from .errors import ParseError, UndeclaredAtom

Letter = frozenset
Word = tuple

EMPTY = frozenset()

_ATOM = re.compile(r"[a-z][a-z0-9_]*")


def make_ap(names: Iterable[str]) -> tuple[str, ...]:
    ap = tuple(sorted(set(names)))
    for name in ap:
        if not _ATOM.fullmatch(name) or name in ("true", "false", "eps"):
            raise ValueError(f"invalid atom name {name!r}")
    return ap


def _neg(name: str) -> tuple[int, ...]:
    # reverses string order, with a prefix ranking above its extensions
    return tuple(-ord(c) for c in name) + (1,)


def letter_key(sigma: frozenset) -> tuple:
    return tuple(_neg(a) for a in sorted(sigma))


def word_key(w: tuple) -> tuple:
    return (len(w), tuple(letter_key(x) for x in w))


def sort_words(words: Iterable[tuple]) -> list[tuple]:
    return sorted(set(words), key=word_key)


def all_letters(ap: Iterable[str]) -> list[frozenset]:
    ap = list(ap)
    subsets = (frozenset(c) for n in range(len(ap) + 1) for c in itertools.combinations(ap, n))
    return sorted(subsets, key=letter_key)


def words_of_length(ap: Iterable[str], n: int) -> Iterator[tuple]:
    """All words of length ``n`` in lexicographic order."""
    return itertools.product(all_letters(ap), repeat=n)


def words_up_to(ap: Iterable[str], max_len: int, min_len: int = 1) -> Iterator[tuple]:
    """All words with ``min_len <= |w| <= max_len`` in shortlex order."""
    letters = all_letters(ap)
    for n in range(min_len, max_len + 1):
        yield from itertools.product(letters, repeat=n)


def complement_letter(sigma: frozenset, ap: Iterable[str]) -> frozenset:
    return frozenset(ap) - sigma


def format_letter(sigma: frozenset) -> str:
    return "{" + ",".join(sorted(sigma)) + "}"


def format_word(w: tuple) -> str:
    if not w:
        return "eps"
    return ".".join(format_letter(x) for x in w)


def check_letter(sigma: frozenset, ap) -> None:
    for a in sigma:
        if a not in ap:
            raise UndeclaredAtom(a, ap)


class _Scanner:
    """Tiny cursor shared by the word, expression and schema parsers."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def eat(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str) -> None:
        if not self.eat(s):
            self.fail(repr(s))

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def ident(self) -> str | None:
        self.skip()
        m = _ATOM.match(self.text, self.pos)
        if not m:
            return None
        self.pos = m.end()
        return m.group()

    def fail(self, expected: str):
        raise ParseError(self.text, self.pos, expected)


def read_letter(sc: _Scanner, ap=None) -> frozenset:
    sc.expect("{")
    names = []
    if not sc.eat("}"):
        while True:
            name = sc.ident()
            if name is None:
                sc.fail("atom")
            names.append(name)
            if sc.eat("}"):
                break
            sc.expect(",")
    sigma = frozenset(names)
    if ap is not None:
        check_letter(sigma, ap)
    return sigma


def parse_letter(text: str, ap=None) -> frozenset:
    sc = _Scanner(text)
    sigma = read_letter(sc, ap)
    if not sc.at_end():
        sc.fail("end of input")
    return sigma


def parse_word(text: str, ap=None) -> tuple:
    """Parse ``{p}.{q}.{}``; ``eps`` denotes the empty word."""
    sc = _Scanner(text)
    if sc.eat("eps"):
        if not sc.at_end():
            sc.fail("end of input")
        return ()
    letters = [read_letter(sc, ap)]
    while sc.eat("."):
        letters.append(read_letter(sc, ap))
    if not sc.at_end():
        sc.fail("'.' or end of input")
    return tuple(letters)


def W(*letters: str) -> tuple:
    """Shorthand used in tests and examples: ``W("p,q", "", "r")``."""
    return tuple(frozenset(x for x in s.replace(" ", "").split(",") if x) for s in letters)
