"""Exception hierarchy.

``PreconditionError`` subclasses mean the inputs are well formed but violate a
mathematical hypothesis (the CLI maps them to exit code 3).
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class ParseDiagnostic:
    position: int
    message: str


class PolyAutError(Exception):
    pass


class ParseError(PolyAutError, ValueError):
    def __init__(self, position, message, text=None):
        self.position = position
        self.message = message
        self.text = text
        super().__init__(f"offset {position}: {message}")

    @property
    def diagnostic(self):
        return ParseDiagnostic(self.position, self.message)


class ArityError(PolyAutError, ValueError):
    pass


class ArityMismatch(PolyAutError, ValueError):
    pass


class StepLimitExceeded(PolyAutError, RuntimeError):
    pass


class PreconditionError(PolyAutError, ValueError):
    """Inputs violate a mathematical precondition.

    ``witness`` optionally carries the offending polynomial.
    """

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotDivisible(PreconditionError):
    pass


class ConstantModulus(PreconditionError):
    pass


class NotCoprime(PreconditionError):
    pass


class NotInvertible(PreconditionError):
    pass


class NotAutomorphism(PreconditionError):
    pass


class CongruenceFailed(PreconditionError):
    pass


class NotTameShape(PreconditionError):
    pass


class NotTame(PreconditionError):
    def __init__(self, message, d1=None, witness=None):
        self.d1 = d1
        super().__init__(message, witness)


class UnsupportedDerivation(PreconditionError):
    pass


class KernelViolation(PreconditionError):
    pass


class NotLocallyNilpotent(PreconditionError):
    pass


class HasZVariable(PreconditionError):
    pass


class ConstantInput(PreconditionError):
    pass
