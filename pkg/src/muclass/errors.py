"""Exception hierarchy.

Every error carries a stable machine-readable ``code`` and the CLI exit
status it maps to (1 for mathematical precondition failures, 2 for usage
and parse errors).
"""


class MuClassError(Exception):
    code = "Error"
    exit_status = 1


class ZeroInversion(MuClassError, ZeroDivisionError):
    code = "ZeroInversion"


class ZeroDivisor(MuClassError, ZeroDivisionError):
    """Raised in an extension ring when a residue shares a factor with the modulus.

    ``factor`` is the monic proper factor of the modulus (ascending
    coefficient tuple over the base field), so callers can split and retry.
    """

    code = "ZeroDivisor"

    def __init__(self, factor, message=None):
        self.factor = factor
        super().__init__(message or f"zero divisor: modulus has proper factor {factor!r}")


class ZeroDenominator(MuClassError, ZeroDivisionError):
    code = "ZeroDenominator"


class PoleAtSpecialization(MuClassError):
    code = "PoleAtSpecialization"


class DivisionByZeroPoly(MuClassError, ZeroDivisionError):
    code = "DivisionByZeroPoly"


class NotARoot(MuClassError):
    code = "NotARoot"


class NoRootInPolicy(MuClassError):
    code = "NoRootInPolicy"


class ConstantPolynomial(MuClassError):
    code = "ConstantPolynomial"


class InternalInconsistency(MuClassError):
    code = "InternalInconsistency"


class NotASyzygy(MuClassError):
    code = "NotASyzygy"


class NoDecomposition(InternalInconsistency):
    code = "NoDecomposition"


class DegenerateShear(MuClassError):
    code = "DegenerateShear"


class NoAdmissiblePick(MuClassError):
    code = "NoAdmissiblePick"


class MuMaximal(MuClassError):
    code = "MuMaximal"


class RejectionBudgetExceeded(MuClassError):
    code = "RejectionBudgetExceeded"


class InvalidTriple(MuClassError):
    code = "InvalidTriple"


class InvalidField(MuClassError):
    code = "InvalidField"
    exit_status = 2


class PolySyntaxError(MuClassError):
    code = "SyntaxError"
    exit_status = 2

    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")


class WrongVariable(PolySyntaxError):
    code = "WrongVariable"


class UsageError(MuClassError):
    code = "UsageError"
    exit_status = 2
