"""Adversaries: for a finite sample fit by a fixed target, build an
inequivalent formula that fits it too."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import FragmentError, NotFitting
from .formula import (
    And, Atom, Eventually, Formula, Next, Not, Or, Until, conj, nest, parse_formula, to_text,
)
from .sample import Sample, format_payload
from .semantics import distinguish_finite
from .wordexpr import Lit, concat, from_word, omega, segments
from .words import EMPTY

P, Q, R = Atom("p"), Atom("q"), Atom("r")

TARGETS = {
    "F-and-omega": parse_formula("F(p & q & F(r & F(p & q)))"),
    "X-or": P,
    "U": parse_formula("(p U q) U r"),
    "X-and-not": P,
    "FX-and-or": parse_formula("F(p & q)"),
}
FAMILIES = tuple(TARGETS)


@dataclass(frozen=True)
class AdversaryResult:
    family: str
    formula: Formula
    witness: object
    parameter: int

    def __str__(self) -> str:
        return (
            f"{to_text(self.formula)}  (parameter {self.parameter}; "
            f"distinguished by {format_payload(self.witness)})"
        )


def _letter(*names: str) -> frozenset:
    return frozenset(names)


# ------------------------------------------------------------- families

def alternation_formula(k: int) -> Formula:
    """F(p & F(q & F(p & ... F(r & F(p & q))))) with k alternating p/q steps."""
    body = Eventually(And(R, Eventually(And(P, Q))))
    for i in reversed(range(k)):
        body = Eventually(And(P if i % 2 == 0 else Q, body))
    return body


def _omega_prefix(payload) -> int:
    """Length of the finite part of a word or of an expression u.v^w."""
    if isinstance(payload, tuple):
        return len(payload)
    segs = segments(payload)
    if not segs or segs[-1][0] != "omega" or any(kind == "omega" for kind, _ in segs[:-1]):
        raise FragmentError(f"{format_payload(payload)} is not of the form u.v^w")
    return sum(len(w) for _, w in segs[:-1])


def _f_and_omega(sample: Sample):
    ell = max((_omega_prefix(ex.payload) for ex in sample if not ex.positive), default=0)
    for ex in sample:
        if ex.positive:
            _omega_prefix(ex.payload)
    k = ell + 1
    steps = tuple(_letter("p") if i % 2 == 0 else _letter("q") for i in range(k))
    witness = concat(from_word(steps + (_letter("r"), _letter("p", "q"))), omega(Lit(EMPTY)))
    return alternation_formula(k), witness, k


def _max_word_length(sample: Sample, which=None) -> int:
    out = 0
    for ex in sample:
        if which is not None and ex.positive != which:
            continue
        if not isinstance(ex.payload, tuple):
            raise FragmentError(f"{format_payload(ex.payload)} is not a finite word")
        out = max(out, len(ex.payload))
    return out


def _x_or(sample: Sample):
    n = _max_word_length(sample) + 1
    psi = Or(P, nest(Next, P, n))
    return psi, distinguish_finite(P, psi, sample.ap), n


def until_ladder(n: int) -> Formula:
    """r, p U (q U r), p U (q U (p U (q U r))), ..."""
    psi = R
    for _ in range(n):
        psi = Until(P, Until(Q, psi))
    return psi


def _until_levels(w: tuple) -> int:
    """p/q rounds needed before the first r reached while p U q holds."""
    from .semantics import truth_vector
    puq = truth_vector(Until(P, Q), w)
    for j, x in enumerate(w):
        if "r" in x:
            break
        if not puq[j]:
            raise FragmentError("positive example without an r witness")
    else:
        raise FragmentError("positive example without an r witness")
    levels, phase = 1, "p"
    for x in w[:j]:
        if "p" in x and "q" not in x:
            if phase == "q":
                levels += 1
            phase = "p"
        elif "q" in x and "p" not in x:
            phase = "q"
    return levels


def _until(sample: Sample):
    _max_word_length(sample)
    m = max((_until_levels(ex.payload) for ex in sample if ex.positive), default=0)
    n = m + 1
    witness = (_letter("p"), _letter("q")) * (n + 1) + (_letter("r"),)
    return until_ladder(n), witness, n


def _x_and_not(sample: Sample):
    _max_word_length(sample)
    negatives = sample.negatives
    k = len(negatives)
    lits, witness = [], [EMPTY, EMPTY]
    full = frozenset(sample.ap)
    for i, w in enumerate(negatives, 1):
        seen = w[i + 1] if i + 1 < len(w) else EMPTY
        lits.append(nest(Next, Not(P) if "p" in seen else P, i + 1))
        witness.append(full - seen)
    psi = Or(P, conj(lits))
    return psi, tuple(witness[: k + 2]), k


def _fx_and_or(sample: Sample):
    n = _max_word_length(sample, which=False)
    chain = conj([nest(Next, P, i) for i in range(n + 1)] + [nest(Next, Q, n + 1)])
    psi = Or(TARGETS["FX-and-or"], chain)
    witness = (_letter("p"),) * (n + 1) + (_letter("q"),)
    return psi, witness, n


_BUILDERS = {
    "F-and-omega": _f_and_omega,
    "X-or": _x_or,
    "U": _until,
    "X-and-not": _x_and_not,
    "FX-and-or": _fx_and_or,
}


def adversary(family: str, sample: Sample, target: Formula | None = None) -> AdversaryResult:
    """Build the family's competitor for ``sample`` and check the contract:
    it fits the sample and the witness separates it from the target."""
    from .verification import evaluate, fits
    if family not in TARGETS:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    expected = TARGETS[family]
    if target is not None and target != expected:
        raise FragmentError(f"family {family} works against {to_text(expected)}, not {to_text(target)}")
    if not fits(expected, sample):
        raise NotFitting(f"{to_text(expected)} does not fit the sample")
    psi, witness, param = _BUILDERS[family](sample)
    bad = fits(psi, sample)
    if not bad:
        raise FragmentError(
            f"competitor {to_text(psi)} disagrees with the target on {bad.failure}; "
            f"the sample lies outside the family's construction"
        )
    if evaluate(psi, witness, sample.ap) == evaluate(expected, witness, sample.ap):
        raise AssertionError(f"witness {format_payload(witness)} does not separate the formulas")
    return AdversaryResult(family, psi, witness, param)
