"""
Exceptions raised across the library
Contract violations are ValueErrors so callers can treat them like bad arguments;
undecidable or inconsistent computations are RuntimeErrors
"""


class ContractError(ValueError):
    """A documented precondition of an operation does not hold"""


class UnsupportedAlphabetError(ContractError):
    """The operation is only defined for a particular alphabet size"""


class SentinelConflictError(ContractError):
    """A symbol label collides with the sentinel label"""


class NotInFamilyError(ContractError):
    """A word or parameter set lies outside the requested string family"""


class NotDeBruijnError(ContractError):
    """A cycle fails the window-uniqueness check"""


class BudgetExceededError(ContractError):
    """An oracle cap, enumeration cap or size budget would be exceeded"""


class PrimitivityUndecided(RuntimeError):
    """Factoring 2^k-1 needs more trial divisions than the budget allows"""


class VerificationFailure(RuntimeError):
    """
    Two independent computations that must agree did not
    The mismatch attribute carries a human-readable description
    """

    def __init__(self, message: str, mismatch: str = ""):
        super().__init__(message if not mismatch else f"{message}\n{mismatch}")
        self.mismatch = mismatch
