"""Enumeration-based teacher and learner."""
from __future__ import annotations

from .errors import NotFitting
from .formula import Formula, to_text
from .sample import LabeledExample, Sample
from .semantics import distinguish_finite, eval_finite
from .verification import EnumerationOrder, fits


def gold_teach(phi: Formula, order: EnumerationOrder, max_states: int = 200_000) -> Sample:
    """One separating word against every earlier, inequivalent formula.

    Each word is the shortlex-least finite word on which the two differ,
    labeled by ``phi``.
    """
    formulas = order.formulas()
    try:
        j = formulas.index(phi)
    except ValueError:
        raise ValueError(f"{to_text(phi)!r} is not among the enumerated formulas") from None
    examples = []
    for psi in formulas[:j]:
        w = distinguish_finite(phi, psi, order.ap, max_states)
        if w is not None:
            examples.append(LabeledExample(w, eval_finite(phi, w)))
    return Sample(order.ap, examples)


def gold_learn(sample: Sample, order: EnumerationOrder) -> Formula:
    """The first enumerated formula fitting the sample."""
    for psi in order:
        if fits(psi, sample):
            return psi
    raise NotFitting(f"no formula up to size {order.max_size} fits the sample")
