class LtlError(Exception):
    """Base class for every error raised by this package."""


class ParseError(LtlError):
    def __init__(self, text: str, pos: int, expected: str):
        self.text = text
        self.pos = pos
        self.expected = expected
        super().__init__(f"at position {pos}: expected {expected} in {text!r}")


class UndeclaredAtom(LtlError):
    def __init__(self, name: str, ap):
        self.name = name
        super().__init__(f"atom {name!r} not in AP {{{', '.join(sorted(ap))}}}")


class FragmentError(LtlError):
    """A formula contains a node the requested operation cannot handle."""

    def __init__(self, message: str, node=None):
        self.node = node
        super().__init__(message)


class EmptyWord(LtlError):
    pass


class NonFlat(LtlError):
    pass


class BudgetExceeded(LtlError):
    pass


class Unevaluable(LtlError):
    """A payload/formula combination with no exact evaluation procedure."""


class NotFitting(LtlError):
    pass
