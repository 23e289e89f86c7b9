"""Exception hierarchy shared by the radsplit modules.

Refusals (inputs outside what the closed forms or the Newton engine can
decide) derive from ``Unsupported`` so callers can tell them apart from
malformed input.
"""


class RadsplitError(Exception):
    """Base class for every error raised by this package."""


class ZeroValuation(RadsplitError, ValueError):
    pass


class RangeError(RadsplitError, ValueError):
    pass


class DivisibleBase(RadsplitError, ValueError):
    pass


class WieferichOverflow(RadsplitError, ArithmeticError):
    pass


class ModulusMismatch(RadsplitError, ValueError):
    pass


class DivisionByZeroPoly(RadsplitError, ZeroDivisionError):
    pass


class NotMonic(RadsplitError, ValueError):
    pass


class EmptyPolygon(RadsplitError, ValueError):
    pass


class WrongCase(RadsplitError, ValueError):
    pass


class ReducibleInput(RadsplitError, ValueError):
    """x^n - a is reducible over Q; ``witness`` says why."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"x^{witness.n} - {witness.a} is reducible: {witness.reason}")


class Unsupported(RadsplitError):
    """The input is valid but no proven result decides it."""


class UnsupportedEven(Unsupported):
    pass


class RequiresFurtherDissection(Unsupported):
    pass


class ExtensionCoefficients(Unsupported):
    pass


class ConsistencyError(RadsplitError, AssertionError):
    """Two independent computations of the same quantity disagree."""
