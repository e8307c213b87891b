"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: input problems exit 1, mathematical
rejections (non-maximal ideal, inseparable input) exit 2, internal
limits exit 3.
"""


class ExtFactorError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ExtFactorError):
    """Problems with user-supplied input (files, expressions, moduli)."""


class InputSyntaxError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" at line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(message + loc)


class UnknownVariable(InputError):
    pass


class FieldMismatch(InputError):
    pass


class BadModulus(InputError):
    pass


class NotGroebner(InputError):
    """The declared basis failed the S-polynomial test."""


class NotZeroDimensional(InputError):
    """The staircase under the ideal's leading monomials is infinite."""


class ArityMismatch(ExtFactorError):
    """Operands live in different polynomial rings."""


class ZeroInversion(ExtFactorError):
    pass


class DivisionByZeroPoly(ExtFactorError):
    pass


class NotSquare(ExtFactorError):
    pass


class Singular(ExtFactorError):
    """Singular linear system; carries a nonzero kernel vector."""

    def __init__(self, kernel):
        self.kernel = kernel
        super().__init__("singular matrix")


class NotMonicInY(ExtFactorError):
    pass


class MathRejection(ExtFactorError):
    """The input is well-formed but outside the method's mathematical scope."""


class NotMaximalIdeal(MathRejection):
    """The ideal is not maximal; ``witness`` is a zero divisor when available."""

    def __init__(self, witness=None, message=None):
        self.witness = witness
        if message is None:
            message = "ideal is not maximal"
            if witness is not None:
                message += f" (zero divisor witness: {witness})"
        super().__init__(message)


class InseparableInput(MathRejection):
    """Derivative vanished in characteristic p; inseparable inputs are rejected."""


class LimitExceeded(ExtFactorError):
    pass


class RecursionLimit(LimitExceeded):
    pass


class ExhaustedGrid(LimitExceeded):
    pass
