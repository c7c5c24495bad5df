"""Exception types shared across the engine."""


class IntDiffOpError(Exception):
    """Base class for all engine errors."""


class ZeroPolynomial(IntDiffOpError):
    """Raised when an operation needs a nonzero polynomial."""


class DivisionByZero(IntDiffOpError, ZeroDivisionError):
    """Raised on inversion of zero or division by a zero element."""


class DimensionMismatch(IntDiffOpError):
    """Operands live over a different number of tensor factors."""


class ModeMismatch(IntDiffOpError):
    """Operands disagree on which factors are in quotient mode."""


class EmptyFactorList(IntDiffOpError):
    """A tensor product needs at least one factor."""


class LimitExceeded(IntDiffOpError):
    """Enumeration request beyond the configured size limit."""


class OperatorSyntaxError(IntDiffOpError):
    """Parse failure; carries the offset of the offending token."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class IndexOutOfRange(IntDiffOpError):
    """Generator index outside 1..n."""


class NegativeExponent(IntDiffOpError):
    """Operator powers must have nonnegative integer exponents."""
