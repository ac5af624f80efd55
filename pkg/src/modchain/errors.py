"""Exception types shared across the package."""


class ModchainError(Exception):
    pass


class InvalidInput(ModchainError):
    pass


class PreconditionViolated(InvalidInput):
    """An operation's stated hypothesis failed; the message names which one."""


class NotCoprime(ModchainError):
    """Raised when an operation needs gcd(b, m) = 1 and it does not hold."""


class NotDivisible(ModchainError):
    """Raised when a lift step is asked to relate moduli where prev does not divide next."""


class FactorizationNeeded(ModchainError):
    """An integer resisted factorization within the configured effort bound."""

    def __init__(self, n: int, message: str = ""):
        self.n = n
        super().__init__(message or f"could not factor {n} within the effort bound")


class BaseModulusTooLarge(ModchainError):
    """The first chain modulus supports too many distinct summand powers to enumerate."""


class UnbalancedInapplicable(ModchainError):
    """The dlog-based lift needs the new factor to be a prime not dividing 6 * prev."""


class MemoryBudgetExceeded(ModchainError):
    """A meet-in-the-middle step would exceed the configured per-side entry cap."""


class ChainExhausted(ModchainError):
    """The chain ended while some summand exponents were still indeterminate.

    Carries the partial results so a caller can inspect or checkpoint them.
    """

    def __init__(self, solutions, report):
        self.solutions = solutions
        self.report = report
        super().__init__("chain exhausted with indeterminate exponents remaining")
