"""Fit checking, formula enumeration, uniqueness verification and oracles."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .characterization import canonical_set, eval_monotone, eval_monotone_G, eval_x_prefix
from .errors import BudgetExceeded, FragmentError, NotFitting, Unevaluable
from .formula import (
    MONOTONE, TAGS, TEMPORAL, X_POSITIVE, And, Atom, Bottom, Eventually,
    Formula, Next, Not, Or, StrictEventually, Top, Until, is_strict_globally, pretty,
    rewrite_for_fragment, signature, to_text,
)
from .sample import LabeledExample, Sample
from .schema import Schema
from .semantics import distinguish_finite, eval_finite
from .wordexpr import WordExpr, embeds, is_star_free, to_word
from .words import format_word, make_ap, words_up_to


# ------------------------------------------------------------------ fits

def evaluate(phi: Formula, payload, ap) -> bool:
    """Truth of ``phi`` on a finite word or a flat word expression.

    Expressions are handled exactly for monotone formulas, for formulas
    over G, sG, &, |, true, false, and for X, &, |, true, false formulas;
    anything else raises :class:`Unevaluable`.
    """
    if isinstance(payload, tuple):
        return eval_finite(phi, payload)
    if not isinstance(payload, WordExpr):
        raise Unevaluable(f"cannot evaluate a {type(payload).__name__} payload")
    if is_star_free(payload):
        return eval_finite(phi, to_word(payload))
    sig = signature(phi)
    if not sig & TEMPORAL:
        return eval_finite(phi, to_word(_first_letter(payload)))
    if sig <= MONOTONE:
        return eval_monotone(phi, payload)
    if sig <= X_POSITIVE:
        return eval_x_prefix(phi, payload)
    try:
        body = phi if is_strict_globally(phi) else rewrite_for_fragment(phi, "strict-globally")
    except FragmentError:
        body = None
    if body is not None:
        return eval_monotone_G(body, payload, ap)
    raise Unevaluable(f"no exact procedure evaluates {to_text(phi)!r} on {payload}")


def _first_letter(e: WordExpr):
    from .wordexpr import Concat, Lit
    while not isinstance(e, Lit):
        e = e.left if isinstance(e, Concat) else e.child
    return e


def example_fits(phi: Formula, ex: LabeledExample, ap) -> bool:
    if isinstance(ex.payload, Schema):
        from .schematic import schematic_fit
        verdict = schematic_fit(phi, ex.payload, ex.positive, ap)
        if verdict.status == "unknown":
            raise Unevaluable(f"fit of {to_text(phi)!r} on schema {ex.payload} is undecided")
        return verdict.status == "fits"
    return evaluate(phi, ex.payload, ap) == ex.positive


@dataclass(frozen=True)
class FitResult:
    ok: bool
    failure: LabeledExample | None = None

    def __bool__(self) -> bool:
        return self.ok


def fits(phi: Formula, sample: Sample) -> FitResult:
    for ex in sample:
        if not example_fits(phi, ex, sample.ap):
            return FitResult(False, ex)
    return FitResult(True)


# ----------------------------------------------------------- enumeration

_RANK_BEFORE_ATOMS = {"true": 0, "false": 1}
_RANK_AFTER_ATOMS = {"!": 0, "X": 1, "sF": 2, "F": 3, "&": 4, "|": 5, "U": 6}
_UNARY_OF = {"!": Not, "X": Next, "sF": StrictEventually, "F": Eventually}
_BINARY_OF = {"&": And, "|": Or, "U": Until}


@dataclass(frozen=True)
class EnumerationOrder:
    """Formulas over ``ops`` and ``ap`` of size at most ``max_size``.

    Ordered by size, then by the prefix-notation token sequence with
    true < false < atoms (alphabetical) < ! < X < sF < F < & < | < U.
    """

    ap: tuple
    ops: frozenset
    max_size: int

    def __post_init__(self):
        object.__setattr__(self, "ap", make_ap(self.ap))
        object.__setattr__(self, "ops", frozenset(self.ops))
        unknown = self.ops - set(TAGS)
        if unknown:
            raise ValueError(f"unknown operators {sorted(unknown)}")

    def formulas(self) -> tuple[Formula, ...]:
        return _enumerate(self.ap, self.ops, self.max_size)

    def __iter__(self):
        return iter(self.formulas())


@lru_cache(maxsize=64)
def _levels(ap: tuple, ops: frozenset, max_size: int):
    n_atoms = len(ap)
    leaves = []
    if "true" in ops:
        leaves.append((Top(), (0,)))
    if "false" in ops:
        leaves.append((Bottom(), (1,)))
    leaves += [(Atom(a), (2 + i,)) for i, a in enumerate(ap)]
    rank = {t: 2 + n_atoms + r for t, r in _RANK_AFTER_ATOMS.items()}
    unary = [t for t in ("!", "X", "sF", "F") if t in ops]
    binary = [t for t in ("&", "|", "U") if t in ops]
    levels = [[], sorted(leaves, key=lambda x: x[1])]
    for s in range(2, max_size + 1):
        level = []
        for t in unary:
            level += [(_UNARY_OF[t](f), (rank[t],) + k) for f, k in levels[s - 1]]
        for t in binary:
            for a in range(1, s - 1):
                for f, kf in levels[a]:
                    for g, kg in levels[s - 1 - a]:
                        level.append((_BINARY_OF[t](f, g), (rank[t],) + kf + kg))
        level.sort(key=lambda x: x[1])
        levels.append(level)
    return levels


@lru_cache(maxsize=64)
def _enumerate(ap: tuple, ops: frozenset, max_size: int) -> tuple:
    levels = _levels(ap, ops, max_size)
    return tuple(f for level in levels for f, _ in level)


def enumerate_formulas(order: EnumerationOrder, dedup: bool = False):
    """Stream the formulas of ``order``; ``dedup`` keeps one per class of
    finite-word equivalence."""
    if not dedup:
        yield from order.formulas()
        return
    reps: list[Formula] = []
    for f in order.formulas():
        if all(distinguish_finite(f, g, order.ap) is not None for g in reps):
            reps.append(f)
            yield f


# ------------------------------------------------------------ uniqueness

def _canonical_counterexample(phi: Formula, psi: Formula):
    """A canonical word of one formula falsifying the other, or None."""
    for e in canonical_set(phi):
        if not eval_finite(psi, e):
            return e
    for e in canonical_set(psi):
        if not eval_finite(phi, e):
            return e
    return None


def disagreement(phi: Formula, psi: Formula, ap):
    """A finite word on which the formulas differ, or None if equivalent."""
    if signature(phi) <= MONOTONE and signature(psi) <= MONOTONE:
        return _canonical_counterexample(phi, psi)
    return distinguish_finite(phi, psi, ap)


@dataclass(frozen=True)
class UniquenessVerdict:
    status: str  # "confirmed", "refuted" or "bound-exhausted"
    examined: int
    competitor: Formula | None = None
    witness: tuple | None = None

    def __str__(self) -> str:
        if self.status == "refuted":
            return (
                f"refuted by {pretty(self.competitor)} on {format_word(self.witness)} "
                f"({self.examined} formulas examined)"
            )
        return f"{self.status} ({self.examined} formulas examined)"


def verify_unique(phi: Formula, sample: Sample, ops, bound: int) -> UniquenessVerdict:
    """Check that every formula over ``ops`` up to size ``bound`` fitting
    ``sample`` is equivalent to ``phi``."""
    first = fits(phi, sample)
    if not first:
        raise NotFitting(f"{to_text(phi)!r} does not fit {first.failure}")
    order = EnumerationOrder(sample.ap, frozenset(ops), bound)
    examined = 0
    exhausted = False
    for psi in order:
        examined += 1
        if psi == phi or not fits(psi, sample):
            continue
        try:
            w = disagreement(phi, psi, sample.ap)
        except BudgetExceeded:
            exhausted = True
            continue
        if w is not None:
            if eval_finite(phi, w) == eval_finite(psi, w):
                raise AssertionError(f"witness {format_word(w)} does not separate the formulas")
            return UniquenessVerdict("refuted", examined, psi, w)
    return UniquenessVerdict("bound-exhausted" if exhausted else "confirmed", examined)


# ---------------------------------------------------------------- oracle

@dataclass(frozen=True)
class OracleVerdict:
    confirmed: bool
    checked: int
    discrepancy: tuple | None = None

    def __str__(self) -> str:
        if self.confirmed:
            return f"confirmed on {self.checked} words"
        return f"discrepancy on {format_word(self.discrepancy)}"


def oracle_upward_closure(phi: Formula, max_len: int, ap=None) -> OracleVerdict:
    """Compare direct evaluation with membership in the upward closure of
    the canonical words, on every word up to ``max_len``."""
    if not signature(phi) <= MONOTONE:
        raise FragmentError(f"{to_text(phi)!r} is outside the monotone fragment", phi)
    from .formula import atoms
    ap = make_ap(atoms(phi) if ap is None else ap)
    canon = canonical_set(phi)
    checked = 0
    for w in words_up_to(ap, max_len):
        checked += 1
        direct = eval_finite(phi, w)
        closure = any(embeds(e, w, anchored=True) for e in canon)
        if direct != closure:
            return OracleVerdict(False, checked, w)
    return OracleVerdict(True, checked)
