"""Positive and negative example constructions for the monotone fragments.

The positives of a formula in the sF,&,|,true,false fragment are its
canonical words: every model contains one of them under anchored
homomorphic embedding. The negatives are maximal words avoiding all of them,
built by :func:`dual`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import BudgetExceeded, EmptyWord, FragmentError
from .formula import (
    And, Atom, Bottom, Eventually, Formula, Or, StrictEventually, Top, X_POSITIVE,
    atoms, dualize, is_strict_globally, pretty, rewrite_for_fragment, signature,
    size, to_text, x_depth,
)
from .sample import LabeledExample, Sample
from .semantics import eval_finite
from .wordexpr import (
    EPS, Lit, WordExpr, complement_word, concat, embeds, expr_length, expr_size,
    from_word, is_star_free, omega, to_word, unfold,
)
from .words import EMPTY, all_letters, letter_key, make_ap, sort_words, words_of_length

CORRECTED = "corrected"
PAPER = "paper"


def merged_interleavings(u: tuple, v: tuple) -> list[tuple]:
    """All merges of ``u`` and ``v``: first letters united, tails shuffled,
    any pair of tail letters optionally placed together as their union."""
    if not u or not v:
        raise EmptyWord("merged interleaving of an empty word")
    a, b = u[1:], v[1:]

    @lru_cache(maxsize=None)
    def tails(i: int, j: int) -> frozenset:
        if i == len(a):
            return frozenset({b[j:]})
        if j == len(b):
            return frozenset({a[i:]})
        out = {(a[i],) + t for t in tails(i + 1, j)}
        out |= {(b[j],) + t for t in tails(i, j + 1)}
        out |= {(a[i] | b[j],) + t for t in tails(i + 1, j + 1)}
        return frozenset(out)

    head = (u[0] | v[0],)
    return sort_words(head + t for t in tails(0, 0))


@lru_cache(maxsize=1 << 14)
def canonical_set(phi: Formula) -> tuple[tuple, ...]:
    """Canonical words of a formula over F, sF, &, |, true, false."""
    if isinstance(phi, Bottom):
        return ()
    if isinstance(phi, Top):
        return ((EMPTY,),)
    if isinstance(phi, Atom):
        return ((frozenset({phi.name}),),)
    if isinstance(phi, StrictEventually):
        return tuple(sort_words((EMPTY,) + e for e in canonical_set(phi.child)))
    if isinstance(phi, Eventually):
        inner = canonical_set(phi.child)
        return tuple(sort_words(list(inner) + [(EMPTY,) + e for e in inner]))
    if isinstance(phi, Or):
        return tuple(sort_words(canonical_set(phi.left) + canonical_set(phi.right)))
    if isinstance(phi, And):
        left, right = canonical_set(phi.left), canonical_set(phi.right)
        return tuple(sort_words(m for u in left for v in right for m in merged_interleavings(u, v)))
    raise FragmentError(f"{to_text(phi)!r} is outside the monotone fragment", phi)


def minimal_words(words) -> list[tuple]:
    """Drop every word into which another word of the set embeds."""
    words = sort_words(words)
    keep = []
    for w in words:
        if not any(embeds(v, w, anchored=True) for v in keep):
            keep.append(w)
    return keep


def prefix_free_words(words) -> list[tuple]:
    """Drop every word that extends another word of the set."""
    words = sort_words(words)
    present = set(words)
    return [w for w in words if not any(w[:k] in present for k in range(1, len(w)))]


PRUNE_MODES = ("none", "prefix", "embedding")


def prune_words(words, mode: str) -> list[tuple]:
    if mode == "none":
        return sort_words(words)
    if mode == "prefix":
        return prefix_free_words(words)
    if mode == "embedding":
        return minimal_words(words)
    raise ValueError(f"unknown pruning mode {mode!r}")


def eval_monotone(phi: Formula, target) -> bool:
    """Truth of a monotone formula on a finite word or flat expression."""
    if isinstance(target, WordExpr):
        if isinstance(target, type(EPS)):
            raise EmptyWord("the empty word is not a model")
    elif not target:
        raise EmptyWord("the empty word is not a model")
    return any(embeds(e, target, anchored=True) for e in canonical_set(phi))


def eval_monotone_G(phi: Formula, target, ap) -> bool:
    """Truth of a formula over sG, &, |, true, false, by complementation."""
    if not is_strict_globally(phi):
        phi = rewrite_for_fragment(phi, "strict-globally")
    if isinstance(target, WordExpr):
        flipped = complement_word(target, ap)
    else:
        flipped = tuple(frozenset(ap) - x for x in target)
    return not eval_monotone(dualize(phi), flipped)


def eval_x_prefix(phi: Formula, target) -> bool:
    """Truth of an X,&,|,true,false formula, reading only the prefix it sees."""
    if not signature(phi) <= X_POSITIVE:
        raise FragmentError(f"{to_text(phi)!r} is outside the X,&,|,true,false fragment", phi)
    if isinstance(target, WordExpr):
        if is_star_free(target):
            return eval_finite(phi, to_word(target))
        return eval_finite(phi, unfold(target, x_depth(phi) + 1))
    return eval_finite(phi, target)


# ------------------------------------------------------------------ duals

def excl_family(sigmas, ap) -> list[frozenset]:
    """Letters ``AP - {p_1..p_k}`` for every choice ``p_i in sigma_i``."""
    full = frozenset(ap)
    family = {full - frozenset(choice) for choice in itertools.product(*(sorted(s) for s in sigmas))}
    return sorted(family, key=letter_key)


def excl_word(sigmas, ap) -> WordExpr:
    """Periodic word none of whose letters contains any ``sigma_i``.

    Returns ``EPS`` when some ``sigma_i`` is empty, since no letter can
    avoid containing the empty letter.
    """
    family = excl_family(sigmas, ap)
    if not family:
        return EPS
    return omega(concat(*(Lit(b) for b in family)))


def _dedupe(items):
    return list(dict.fromkeys(items))


@lru_cache(maxsize=1 << 16)
def _dual_plus(words: frozenset, ap: tuple, literal: bool) -> tuple:
    if () in words:
        return ()
    if not words:
        return (omega(Lit(frozenset(ap))),)
    ws = sort_words(words)
    firsts = [w[0] for w in ws]
    family = excl_family(firsts, ap)
    prefix = excl_word(firsts, ap)
    if all(len(w) == 1 for w in ws):
        return (prefix,)
    out = []
    for sigma in all_letters(ap):
        if any(sigma <= b for b in family):
            continue
        pruned = frozenset(w[1:] if w[0] <= sigma else w for w in ws)
        if () in pruned:
            continue
        for v in _dual_plus(pruned, ap, literal):
            out.append(concat(prefix, Lit(sigma), v))
    if not out and not literal:
        # no letter can be added without completing some word; the
        # exclusion word alone still blocks every first letter
        out.append(prefix)
    return tuple(_dedupe(out))


def dual_plus(A, ap, variant: str = CORRECTED) -> list[WordExpr]:
    """Maximal words into which no word of ``A`` embeds freely."""
    return list(_dual_plus(frozenset(map(tuple, A)), make_ap(ap), variant == PAPER))


def dual(A, ap, variant: str = CORRECTED) -> list[WordExpr]:
    """Maximal words into which no word of ``A`` embeds anchored.

    In the corrected variant a word whose first letter does not fit into
    the chosen first letter is dropped rather than carried into the
    recursive call; ``variant="paper"`` carries it along unpruned.
    """
    words = frozenset(map(tuple, A))
    ap = make_ap(ap)
    if () in words:
        return []
    literal = variant == PAPER
    out = []
    for sigma in all_letters(ap):
        if literal:
            rest = frozenset(w[1:] if w[0] <= sigma else w for w in words)
        else:
            if any(len(w) == 1 and w[0] <= sigma for w in words):
                continue
            rest = frozenset(w[1:] for w in words if w[0] <= sigma)
        for v in _dual_plus(rest, ap, literal):
            out.append(concat(Lit(sigma), v))
    return _dedupe(out)


# ---------------------------------------------------------- characterizers

@dataclass
class CharacterizationReport:
    formula: Formula
    sample: Sample
    work: dict = field(default_factory=dict)

    @property
    def n_pos(self) -> int:
        return len(self.sample.positives)

    @property
    def n_neg(self) -> int:
        return len(self.sample.negatives)

    @property
    def l_max(self) -> int:
        """Length of the longest finite positive word."""
        return max((len(p) for p in self.sample.positives if isinstance(p, tuple)), default=0)

    @property
    def max_expr_size(self) -> int:
        return max((expr_size(p) for p in self.sample.negatives if isinstance(p, WordExpr)), default=0)

    def summary(self) -> str:
        return (
            f"formula {pretty(self.formula)}: {self.n_pos} positive, {self.n_neg} negative, "
            f"longest positive word {self.l_max}, largest expression {self.max_expr_size}"
        )


def _check_ap(phi: Formula, ap) -> tuple:
    ap = make_ap(ap)
    missing = atoms(phi) - set(ap)
    if missing:
        raise FragmentError(f"atoms {sorted(missing)} not declared in AP {list(ap)}")
    return ap


def characterize_monotone(phi: Formula, ap, variant: str = CORRECTED, prune: str = "prefix",
                          budget: int | None = None) -> CharacterizationReport:
    """Sample uniquely characterizing a formula over F, sF, &, |, true, false.

    Positives are the canonical words, minus redundant ones according to
    ``prune``: ``"prefix"`` drops words extending another canonical word,
    ``"embedding"`` keeps only embedding-minimal words, ``"none"`` keeps
    all. Negatives are ``dual`` of the positives. ``budget`` caps the
    number of positives fed to the exponential dual construction.
    """
    ap = _check_ap(phi, ap)
    rewritten = rewrite_for_fragment(phi, "strict-eventually")
    pos = list(canonical_set(rewritten))
    raw = len(pos)
    pos = prune_words(pos, prune)
    if budget is not None and len(pos) > budget:
        raise BudgetExceeded(f"{len(pos)} positive words exceed the budget of {budget}")
    neg = dual(pos, ap, variant)
    for w in pos:
        if not eval_finite(phi, w):
            raise AssertionError(f"canonical word {w} does not satisfy {to_text(phi)}")
    for e in neg:
        if eval_monotone(rewritten, e):
            raise AssertionError(f"dual word {e} satisfies {to_text(phi)}")
    sample = Sample(ap, [LabeledExample(w, True) for w in pos] + [LabeledExample(e, False) for e in neg])
    return CharacterizationReport(phi, sample, {"canonical_words": raw, "dual_words": len(neg)})


def characterize_monotone_G(phi: Formula, ap, variant: str = CORRECTED, prune: str = "prefix",
                            budget: int | None = None) -> CharacterizationReport:
    """Sample for a formula over G, sG, &, |, true, false via complementation."""
    ap = _check_ap(phi, ap)
    body = phi if is_strict_globally(phi) else rewrite_for_fragment(phi, "strict-globally")
    chi = dualize(body)
    inner = characterize_monotone(chi, ap, variant, prune, budget)
    flipped = []
    for ex in inner.sample:
        if isinstance(ex.payload, tuple):
            payload = tuple(frozenset(ap) - x for x in ex.payload)
        else:
            payload = complement_word(ex.payload, ap)
        flipped.append(LabeledExample(payload, not ex.positive))
    for ex in flipped:
        if eval_monotone_G(body, ex.payload, ap) != ex.positive:
            raise AssertionError(f"complemented example {ex} mislabeled")
    return CharacterizationReport(phi, Sample(ap, flipped), dict(inner.work))


def characterize_X_omega(phi: Formula, ap, budget: int = 100_000) -> CharacterizationReport:
    """Sample for an X,&,|,true,false formula over words of length <= omega.

    With n = X-depth + 1 the formula only reads the first n positions. The
    sample holds every word of length <= n and, for each word w of length
    n, the infinite words ``w.{}^w`` and ``w.AP^w``.
    """
    ap = _check_ap(phi, ap)
    if not signature(phi) <= X_POSITIVE:
        raise FragmentError(f"{to_text(phi)!r} is outside the X,&,|,true,false fragment", phi)
    n = x_depth(phi) + 1
    letters = 2 ** len(ap)
    cost = sum(letters ** k for k in range(1, n + 1)) + 2 * letters ** n
    if cost > budget:
        raise BudgetExceeded(f"{cost} examples exceed the budget of {budget}")
    examples = []
    for k in range(1, n + 1):
        for w in words_of_length(ap, k):
            examples.append(LabeledExample(w, eval_finite(phi, w)))
    for w in words_of_length(ap, n):
        for tail in (EMPTY, frozenset(ap)):
            e = concat(from_word(w), omega(Lit(tail)))
            examples.append(LabeledExample(e, eval_x_prefix(phi, e)))
    return CharacterizationReport(phi, Sample(ap, examples), {"prefix_length": n})


@dataclass(frozen=True)
class SizeReport:
    size: int
    l_max: int
    n_pos: int
    n_neg: int
    length_bound_ok: bool

    def __str__(self) -> str:
        flag = "ok" if self.length_bound_ok else "VIOLATED"
        return (
            f"size={self.size} longest_positive={self.l_max} ({flag}) "
            f"positives={self.n_pos} negatives={self.n_neg}"
        )


def size_report(report: CharacterizationReport, phi: Formula) -> SizeReport:
    m = size(phi)
    return SizeReport(m, report.l_max, report.n_pos, report.n_neg, report.l_max <= m)


def expr_lengths(report: CharacterizationReport) -> list:
    return [expr_length(p) for p in report.sample.negatives if isinstance(p, WordExpr)]
