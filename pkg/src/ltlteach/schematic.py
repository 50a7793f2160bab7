"""Fit checking and characterizations with schematic examples."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .characterization import CORRECTED, CharacterizationReport, canonical_set, characterize_monotone, eval_monotone
from .formula import MONOTONE, Formula, rewrite_for_fragment, signature, to_text
from .sample import LabeledExample, Sample
from .schema import Schema, Seq, Star, Sym, from_word_schema, is_simple, letters_of, star_height, translate_schematic
from .semantics import eval_finite
from .wordexpr import Lit, concat, from_word, omega, unfold
from .words import make_ap, sort_words


@dataclass(frozen=True)
class SchematicVerdict:
    status: str  # "fits", "fails" or "unknown"
    witness: tuple | None = None


def _minimal(letters):
    return [s for s in letters if not any(t < s for t in letters)]


def _maximal(letters):
    return [s for s in letters if not any(s < t for t in letters)]


def _items(r: Schema):
    return r.items if isinstance(r, Seq) else (r,)


def _flat_syms(r: Schema) -> list[Sym]:
    out = []
    for it in _items(r):
        if isinstance(it, Sym):
            out.append(it)
        elif isinstance(it, Seq):
            out += _flat_syms(it)
        else:
            raise ValueError("nested star")
    return out


def _lower_instances(r: Schema, ap) -> set[tuple]:
    """Every star taken at most once, every letter a minimal one. Each member
    of L(r) lies above one of these in the anchored embedding order."""
    if isinstance(r, Sym):
        return {(s,) for s in _minimal(letters_of(r.pred, ap))}
    if isinstance(r, Star):
        return {()} | _lower_instances(r.child, ap)
    out = {()}
    for it in r.items:
        part = _lower_instances(it, ap)
        out = {a + b for a in out for b in part}
    return out


def _upper_branches(r: Schema, ap):
    """Word expressions above every member of L(r), for a simple schema."""
    options = []
    for it in _items(r):
        if isinstance(it, Star):
            body = [_maximal(letters_of(s.pred, ap)) for s in _flat_syms(it.child)]
            combos = [c for c in itertools.product(*body)] if body else []
            opts = [()]
            if combos and all(body):
                period = from_word(tuple(x for c in combos for x in c))
                opts += [(from_word(c), omega(period)) for c in combos]
            options.append(opts)
        elif isinstance(it, Sym):
            options.append([(Lit(s),) for s in _maximal(letters_of(it.pred, ap))])
        else:
            options.append([(from_word(x),) for x in _seq_words_max(it, ap)])
    for choice in itertools.product(*options):
        parts = [p for part in choice for p in part]
        if parts:
            yield concat(*parts)


def _seq_words_max(r: Schema, ap):
    syms = _flat_syms(r)
    return itertools.product(*[_maximal(letters_of(s.pred, ap)) for s in syms])


def schematic_fit(phi: Formula, r: Schema, positive: bool, ap, max_len: int = 6) -> SchematicVerdict:
    """Decide whether every nonempty word of L(r) gets the label under ``phi``.

    Exact for star-free schemas, for positive labels with a monotone
    formula, and for negative labels with a monotone formula and a schema
    of star height at most one. Otherwise words up to ``max_len`` are
    tried and a clean run yields ``unknown``.
    """
    ap = make_ap(ap)
    monotone = signature(phi) <= MONOTONE
    if star_height(r) == 0:
        return _check_words(phi, _all_star_free(r, ap), positive, exact=True)
    if monotone and positive:
        return _check_words(phi, _lower_instances(r, ap), positive, exact=True)
    if monotone and is_simple(r):
        rewritten = rewrite_for_fragment(phi, "strict-eventually")
        longest = max((len(e) for e in canonical_set(rewritten)), default=1)
        bad = [unfold(e, longest) for e in _upper_branches(r, ap) if eval_monotone(rewritten, e)]
        if not bad:
            return SchematicVerdict("fits")
        # the unfolding lies in L(r) and satisfies phi; report the least one
        return SchematicVerdict("fails", sort_words(bad)[0])
    from .schema import instances
    return _check_words(phi, instances(r, ap, max_len), positive, exact=False)


def _all_star_free(r: Schema, ap) -> set[tuple]:
    syms = _flat_syms(r)
    return set(itertools.product(*[letters_of(s.pred, ap) for s in syms]))


def _check_words(phi, words, positive, exact: bool) -> SchematicVerdict:
    for w in sort_words(w for w in words if w):
        if eval_finite(phi, w) != positive:
            return SchematicVerdict("fails", w)
    return SchematicVerdict("fits" if exact else "unknown")


def bounded_fit(phi: Formula, sample: Sample, max_len: int) -> bool:
    """Fit judged only on the members of each schema up to ``max_len``."""
    from .schema import instances
    for ex in sample:
        words = instances(ex.payload, sample.ap, max_len) if isinstance(ex.payload, Schema) else [ex.payload]
        if any(eval_finite(phi, w) != ex.positive for w in words):
            return False
    return True


def characterize_schematic(phi: Formula, ap, variant: str = CORRECTED, prune: str = "prefix") -> CharacterizationReport:
    """Simple schematic sample for a monotone formula: positive canonical
    words as one-word schemas, negative expressions with stars for
    omega-powers."""
    base = characterize_monotone(phi, ap, variant, prune)
    ap = base.sample.ap
    examples = []
    for ex in base.sample:
        if ex.positive:
            r = from_word_schema(ex.payload, ap)
        else:
            r = translate_schematic(ex.payload, ap)
        verdict = schematic_fit(phi, r, ex.positive, ap)
        if verdict.status != "fits":
            raise AssertionError(f"{to_text(phi)!r} does not fit {r}: {verdict}")
        examples.append(LabeledExample(r, ex.positive))
    return CharacterizationReport(phi, Sample(ap, examples), dict(base.work))
