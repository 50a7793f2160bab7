"""Finite-word semantics and equivalence over finite words.

``eval_finite`` follows the position-wise definition directly. Equivalence
uses a second, independent evaluator: reading a word from right to left,
the truth values of all subformulas at position i depend only on the letter
at i and the values at i+1, so the reachable value vectors form a finite
deterministic automaton on reversed words.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceeded, EmptyWord
from .formula import (
    And, Atom, Bottom, Eventually, Formula, Next, Not, Or, StrictEventually, Top,
    Until, atoms, subformulas,
)
from .words import all_letters, words_up_to


@lru_cache(maxsize=1 << 18)
def truth_vector(phi: Formula, w: tuple) -> tuple[bool, ...]:
    """Truth value of ``phi`` at every position of ``w``."""
    n = len(w)
    if isinstance(phi, Atom):
        return tuple(phi.name in x for x in w)
    if isinstance(phi, Top):
        return (True,) * n
    if isinstance(phi, Bottom):
        return (False,) * n
    if isinstance(phi, Not):
        return tuple(not b for b in truth_vector(phi.child, w))
    if isinstance(phi, And):
        a, b = truth_vector(phi.left, w), truth_vector(phi.right, w)
        return tuple(x and y for x, y in zip(a, b))
    if isinstance(phi, Or):
        a, b = truth_vector(phi.left, w), truth_vector(phi.right, w)
        return tuple(x or y for x, y in zip(a, b))
    if isinstance(phi, Next):
        return truth_vector(phi.child, w)[1:] + (False,)
    if isinstance(phi, (Eventually, StrictEventually)):
        c = truth_vector(phi.child, w)
        out = [False] * n
        seen = False
        for i in range(n - 1, -1, -1):
            if isinstance(phi, StrictEventually):
                out[i] = seen
                seen = seen or c[i]
            else:
                seen = seen or c[i]
                out[i] = seen
        return tuple(out)
    if isinstance(phi, Until):
        a, b = truth_vector(phi.left, w), truth_vector(phi.right, w)
        out = [False] * n
        nxt = False
        for i in range(n - 1, -1, -1):
            nxt = b[i] or (a[i] and nxt)
            out[i] = nxt
        return tuple(out)
    raise TypeError(f"not a formula: {phi!r}")


def eval_finite(phi: Formula, w: tuple) -> bool:
    """Does the nonempty finite word ``w`` satisfy ``phi``?"""
    if not w:
        raise EmptyWord("the empty word is not a model")
    return truth_vector(phi, tuple(w))[0]


# ------------------------------------------------------ reverse automaton

class _Closure:
    def __init__(self, formulas):
        subs: dict[Formula, None] = {}
        for phi in formulas:
            for s in subformulas(phi):
                subs.setdefault(s, None)
        self.nodes = list(subs)
        self.index = {s: i for i, s in enumerate(self.nodes)}
        self.cache: dict = {}

    def step(self, sigma: frozenset, nxt):
        key = (sigma, nxt)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        idx = self.index
        cur = []
        for node in self.nodes:
            if isinstance(node, Atom):
                v = node.name in sigma
            elif isinstance(node, Top):
                v = True
            elif isinstance(node, Bottom):
                v = False
            elif isinstance(node, Not):
                v = not cur[idx[node.child]]
            elif isinstance(node, And):
                v = cur[idx[node.left]] and cur[idx[node.right]]
            elif isinstance(node, Or):
                v = cur[idx[node.left]] or cur[idx[node.right]]
            elif isinstance(node, Next):
                v = nxt is not None and nxt[idx[node.child]]
            elif isinstance(node, Eventually):
                v = cur[idx[node.child]] or (nxt is not None and nxt[idx[node]])
            elif isinstance(node, StrictEventually):
                v = nxt is not None and (nxt[idx[node.child]] or nxt[idx[node]])
            elif isinstance(node, Until):
                v = cur[idx[node.right]] or (
                    cur[idx[node.left]] and nxt is not None and nxt[idx[node]]
                )
            else:
                raise TypeError(f"not a formula: {node!r}")
            cur.append(v)
        state = tuple(cur)
        self.cache[key] = state
        return state


def _ap_for(ap, *formulas):
    if ap is None:
        names = set()
        for phi in formulas:
            names |= atoms(phi)
        return sorted(names)
    return sorted(ap)


def _layers(clo: _Closure, letters, until_len: int):
    layers = [{None}]
    for _ in range(until_len):
        layers.append({clo.step(s, nxt) for nxt in layers[-1] for s in letters})
    return layers


def distinguish_finite(phi: Formula, psi: Formula, ap=None, max_states: int = 200_000):
    """Shortlex-least finite word on which ``phi`` and ``psi`` differ.

    Returns None when they agree on every nonempty finite word. Exact.
    """
    letters = all_letters(_ap_for(ap, phi, psi))
    clo = _Closure([phi, psi])
    i, j = clo.index[phi], clo.index[psi]
    # breadth-first search for the shortest disagreement
    seen = set()
    frontier = [None]
    depth = 0
    found = None
    while frontier and found is None:
        depth += 1
        nxt_frontier = []
        for nxt in frontier:
            for s in letters:
                st = clo.step(s, nxt)
                if st in seen:
                    continue
                seen.add(st)
                if st[i] != st[j]:
                    found = depth
                nxt_frontier.append(st)
        if len(seen) > max_states:
            raise BudgetExceeded(f"more than {max_states} automaton states")
        frontier = nxt_frontier
    if found is None:
        return None
    layers = _layers(clo, letters, found)
    targets = {st for st in layers[found] if st[i] != st[j]}
    word = []
    for k in range(found - 1, -1, -1):
        for s in letters:
            hits = {st for st in layers[k] if clo.step(s, st) in targets}
            if hits:
                word.append(s)
                targets = hits
                break
    return tuple(word)


def saturation_length(formulas, ap) -> int:
    """Least L such that words of length <= L reach every automaton state."""
    letters = all_letters(sorted(ap))
    clo = _Closure(formulas)
    seen = set()
    frontier = [None]
    depth = 0
    while True:
        new = []
        for nxt in frontier:
            for s in letters:
                st = clo.step(s, nxt)
                if st not in seen:
                    seen.add(st)
                    new.append(st)
        if not new:
            return depth
        depth += 1
        frontier = new


def fin_equivalent(phi: Formula, psi: Formula, ap=None) -> bool:
    return distinguish_finite(phi, psi, ap) is None


@dataclass(frozen=True)
class Equivalence:
    status: str  # "equivalent", "distinguished" or "unknown"
    witness: tuple | None = None


def equivalent_bounded(phi: Formula, psi: Formula, max_len: int, ap=None) -> Equivalence:
    """Compare on every word of length 1..max_len in shortlex order.

    A disagreement yields its shortlex-least witness. Agreement is reported
    as ``equivalent`` only when words of length <= max_len already reach
    every state of the joint right-to-left evaluation automaton, so that
    no longer word can behave differently; otherwise ``unknown``.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    ap = _ap_for(ap, phi, psi)
    for w in words_up_to(ap, max_len):
        if eval_finite(phi, w) != eval_finite(psi, w):
            return Equivalence("distinguished", w)
    if saturation_length([phi, psi], ap) <= max_len:
        return Equivalence("equivalent")
    return Equivalence("unknown")
