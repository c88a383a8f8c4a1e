"""Exception hierarchy shared by every hopfbench module."""


class HopfbenchError(Exception):
    """Base class for all errors raised by hopfbench."""


class FieldError(HopfbenchError):
    """Unsupported (p, k) or a missing modulus."""


class ParseError(HopfbenchError):
    """Malformed word, polynomial, presentation or braiding text."""


class PresentationError(HopfbenchError):
    """A Hopf presentation violates its structural rules."""


class InconsistentRelations(HopfbenchError):
    """The relations force 1 = 0, so the quotient is the zero ring."""

    def __init__(self, message, system=None):
        super().__init__(message)
        self.system = system


class InfiniteBasis(HopfbenchError):
    """The irreducible-word basis did not close below the cap."""


class BudgetExceeded(HopfbenchError):
    """An enumeration or completion exceeded its configured budget."""


class NotGrouplike(HopfbenchError):
    """An element passed as group-like is not group-like."""


class AntipodeError(HopfbenchError):
    """The identity map is not convolution invertible."""


class YdCompatibilityError(HopfbenchError):
    """Action and coaction do not form a Yetter-Drinfeld module."""


class BraidEquationError(HopfbenchError):
    """A braiding fails the braid equation or is not invertible."""


class CatalogError(HopfbenchError):
    """Unknown family, out-of-domain parameter or missing predicate."""
