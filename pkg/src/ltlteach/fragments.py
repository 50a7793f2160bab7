"""Operator-set classification and finite-word characterizations for the
six maximal operator sets that admit them."""
from __future__ import annotations

from dataclasses import dataclass

from .characterization import CharacterizationReport, _check_ap
from .errors import BudgetExceeded, FragmentError
from .formula import (
    TEMPORAL, TRUE, FALSE, Atom, Eventually, Formula, G, Next, Not, Or, StrictEventually,
    atoms, format_ops, nest, signature, size, temporal_depth, to_text,
)
from .sample import LabeledExample, Sample
from .semantics import distinguish_finite, eval_finite
from .words import EMPTY

MAXIMAL_SETS = (
    frozenset({"sF", "X", "&", "true"}),
    frozenset({"F", "|", "true", "false"}),
    frozenset({"F", "!", "true", "false"}),
    frozenset({"F", "sF", "X", "true"}),
    frozenset({"X", "!"}),
    frozenset({"sF", "!"}),
)

# Minimal operator sets known to lack finite characterizations.
NEGATIVE_SETS = (
    frozenset({"F", "&"}),
    frozenset({"X", "|"}),
    frozenset({"sF", "|"}),
    frozenset({"X", "false"}),
    frozenset({"sF", "false"}),
    frozenset({"X", "&", "!"}),
    frozenset({"F", "&", "!"}),
    frozenset({"sF", "&", "!"}),
    frozenset({"U"}),
    frozenset({"sF", "X", "!"}),
    frozenset({"F", "sF", "!"}),
)

# (needed, gained): operators definable from others, AP nonempty.
_DEFINABLE = (
    ({"!", "|"}, {"&", "true", "false"}),
    ({"!", "&"}, {"|", "true", "false"}),
    ({"!", "true"}, {"false"}),
    ({"!", "false"}, {"true"}),
    ({"sF", "|"}, {"F"}),
    ({"X", "F"}, {"sF"}),
    ({"U", "true"}, {"F"}),
)


def definable_closure(ops) -> frozenset:
    out = set(ops)
    changed = True
    while changed:
        changed = False
        for need, gain in _DEFINABLE:
            if need <= out and not gain <= out:
                out |= gain
                changed = True
    return frozenset(out)


@dataclass(frozen=True)
class Classification:
    ops: frozenset
    admits: bool
    witness: frozenset

    def __str__(self) -> str:
        if self.admits:
            return f"admits; contained in {format_ops(self.witness)}"
        return f"does not admit; violated fragment {format_ops(self.witness)}"


def admits_by_subset(ops) -> bool:
    return any(frozenset(ops) <= m for m in MAXIMAL_SETS)


def classify_operator_set(ops) -> Classification:
    ops = frozenset(ops)
    if not ops & TEMPORAL:
        raise FragmentError(f"{format_ops(ops)} contains no temporal operator")
    for m in MAXIMAL_SETS:
        if ops <= m:
            return Classification(ops, True, m)
    closed = definable_closure(ops)
    for n in NEGATIVE_SETS:
        if n <= closed:
            return Classification(ops, False, n)
    raise AssertionError(f"no negative fragment explains {format_ops(ops)}")


# ----------------------------------------------------- finite fragments

def _xw(phi: Formula) -> Formula:
    """Weak next: true at the last position."""
    return Not(Next(Not(phi)))


def _sgw(phi: Formula) -> Formula:
    return Not(StrictEventually(Not(phi)))


def _literals(ap):
    for a in ap:
        yield Atom(a)
        yield Not(Atom(a))


def _normal_forms(index: int, ap, depth: int):
    """Representatives of the formulas in maximal set ``index`` whose
    normal form has depth at most ``depth`` (all of them for sets 2 and 3)."""
    if index == 1:
        out = [TRUE, FALSE]
        choices = [(None, Atom(a), Eventually(Atom(a))) for a in ap]
        stack = [[]]
        for opts in choices:
            stack = [s + [o] for s in stack for o in opts]
        for parts in stack:
            parts = [p for p in parts if p is not None]
            if parts:
                f = parts[0]
                for p in parts[1:]:
                    f = Or(f, p)
                out.append(f)
        return out
    if index == 2:
        out = [TRUE, FALSE]
        for lit in _literals(ap):
            for ops in ((), (Eventually,), (G,), (Eventually, G), (G, Eventually)):
                f = lit
                for op in reversed(ops):
                    f = op(f)
                out.append(f)
        return out
    if index == 3:
        out = []
        for m in range(depth + 1):
            for base in [Eventually(Atom(a)) for a in ap] + [Eventually(TRUE)] + [Atom(a) for a in ap] + [TRUE]:
                out.append(nest(Next, base, m))
        return out
    if index == 4:
        out = []
        for m in range(depth + 1):
            bodies = list(_literals(ap))
            for _ in range(m):
                bodies = [op(b) for b in bodies for op in (Next, _xw)]
            out += bodies
        return out
    if index == 5:
        out = list(_literals(ap))
        for m in range(1, depth + 1):
            for a in list(_literals(ap)) + [TRUE]:
                out.append(nest(StrictEventually, a, m))
            for b in list(_literals(ap)) + [FALSE]:
                f = b
                for _ in range(m):
                    f = _sgw(f)
                out.append(f)
        return out
    raise ValueError(index)


def _unary_depth(phi: Formula, op) -> int:
    n = 0
    while hasattr(phi, "child"):
        n += isinstance(phi, op)
        phi = phi.child
    return n


def _ops_formulas(ops, ap, max_size: int, max_depth: int):
    from .verification import EnumerationOrder
    for f in EnumerationOrder(ap, ops, max_size):
        if temporal_depth(f) <= max_depth:
            yield f


def characterize_finite_fragment(phi: Formula, ops, ap, budget: int = 20_000,
                                 max_size: int | None = None) -> CharacterizationReport:
    """Sample of finite words for a formula of a positive finite-word fragment.

    Base examples follow the fragment's normal form; then every listed
    competitor still fitting the sample gets its shortlex-least
    distinguishing word. For the {sF,X,&,true} family the competitors are
    all formulas of temporal depth at most that of ``phi`` up to
    ``max_size`` (default size(phi)+2).
    """
    ap = _check_ap(phi, ap)
    ops = frozenset(ops)
    sig = signature(phi)
    if not sig <= ops:
        raise FragmentError(f"{to_text(phi)!r} uses operators outside {format_ops(ops)}", phi)
    try:
        index = next(i for i, m in enumerate(MAXIMAL_SETS) if ops <= m)
    except StopIteration:
        raise FragmentError(f"{format_ops(ops)} admits no finite characterization") from None
    full = frozenset(ap)
    base: list[tuple] = []
    if index in (0, 3):
        n = temporal_depth(phi)
        if index == 3:
            n = next(m for m in range(size(phi) + 1) if eval_finite(phi, (full,) * (m + 1)))
        base.append((full,) * (n + 1))
    elif index == 4:
        atom = sorted(atoms(phi) or ap)[0]
        n = _unary_depth(phi, Next)
        base += [(EMPTY,) * k for k in range(1, n + 1)]
        base += [(EMPTY,) * n + (frozenset({atom}),), (EMPTY,) * (n + 1)]
    elif index == 5:
        atom = sorted(atoms(phi) or ap)[0]
        n = _unary_depth(phi, StrictEventually)
        rung = max(n - 1, 1)
        base += [(EMPTY,) * rung, (full,) * rung]
        base += [(EMPTY,) * n + (frozenset({atom}),), (EMPTY,) * (n + 1)]
        if n:
            base += [(EMPTY,) * n, (EMPTY,) * (n - 1) + (frozenset({atom}),)]
    examples = [LabeledExample(w, eval_finite(phi, w)) for w in base]

    if index == 0:
        bound = size(phi) + 2 if max_size is None else max_size
        competitors = _ops_formulas(MAXIMAL_SETS[0], ap, bound, temporal_depth(phi))
    else:
        depth = temporal_depth(phi) + 1
        competitors = _normal_forms(index, ap, depth)
    sample = Sample(ap, examples)
    from .verification import fits
    checked = added = 0
    for psi in competitors:
        checked += 1
        if checked > budget:
            raise BudgetExceeded(f"more than {budget} competitors")
        if not fits(psi, sample):
            continue
        w = distinguish_finite(phi, psi, ap)
        if w is None:
            continue
        sample = sample.extend([LabeledExample(w, eval_finite(phi, w))])
        added += 1
    return CharacterizationReport(
        phi, sample, {"maximal_set": index + 1, "base_examples": len(base),
                      "distinguishers": added, "competitors": checked},
    )

