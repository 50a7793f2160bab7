"""Ordinals below omega^omega in Cantor normal form."""
from __future__ import annotations

from functools import total_ordering


@total_ordering
class Ordinal:
    """``sum(omega**e * c for e, c in terms)`` with strictly decreasing exponents."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        terms = tuple((int(e), int(c)) for e, c in terms if c)
        for (e1, _), (e2, _) in zip(terms, terms[1:]):
            if e1 <= e2:
                raise ValueError(f"exponents must strictly decrease: {terms}")
        if any(e < 0 or c < 0 for e, c in terms):
            raise ValueError(f"negative exponent or coefficient: {terms}")
        self.terms = terms

    @classmethod
    def finite(cls, n: int) -> Ordinal:
        return cls(((0, n),)) if n else cls()

    @classmethod
    def omega_power(cls, e: int, c: int = 1) -> Ordinal:
        return cls(((e, c),))

    def __add__(self, other: Ordinal) -> Ordinal:
        if not isinstance(other, Ordinal):
            return NotImplemented
        if not other.terms:
            return self
        lead = other.terms[0][0]
        kept = [t for t in self.terms if t[0] > lead]
        same = [c for e, c in self.terms if e == lead]
        first = (lead, other.terms[0][1] + (same[0] if same else 0))
        return Ordinal(kept + [first] + list(other.terms[1:]))

    def times_omega(self) -> Ordinal:
        """``self * omega``: only the leading exponent survives, raised by one."""
        if not self.terms:
            return self
        return Ordinal(((self.terms[0][0] + 1, 1),))

    def is_finite(self) -> bool:
        return all(e == 0 for e, _ in self.terms)

    def __int__(self) -> int:
        if not self.is_finite():
            raise ValueError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    def _key(self):
        # lexicographic on the term list, with "no more terms" ranking lowest
        return tuple(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Ordinal.finite(other)
        return isinstance(other, Ordinal) and self.terms == other.terms

    def __lt__(self, other) -> bool:
        if isinstance(other, int):
            other = Ordinal.finite(other)
        return self._key() < other._key()

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        return f"Ordinal({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            if e == 0:
                parts.append(str(c))
                continue
            base = "ω" if e == 1 else f"ω^{e}"
            parts.append(base if c == 1 else f"{base}·{c}")
        return "+".join(parts)


def ordinal_add(a: Ordinal, b: Ordinal) -> Ordinal:
    return a + b


def ordinal_cmp(a: Ordinal, b: Ordinal) -> int:
    """-1, 0 or 1."""
    return (a > b) - (a < b)
