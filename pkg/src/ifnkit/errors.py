"""Exception hierarchy shared by the whole toolkit."""


class IfnError(Exception):
    """Base class for all domain and input errors raised by ifnkit."""


class EmptyCycle(IfnError):
    """A cycle must contain at least one node."""


class DuplicateNodeInCycle(IfnError):
    """A node may appear at most once inside a single cycle."""


class NegativeCoefficient(IfnError):
    """A stored signature term must have a strictly positive coefficient."""


class EmptySignature(IfnError):
    """The operation needs a signature with at least one term."""


class SignatureSyntaxError(IfnError):
    """Malformed signature text; carries the 0-based offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"syntax error at position {position}: {message}")
        self.position = position


class NegativeFlowResult(IfnError):
    """Assigning a negative coefficient would drive a link flow below zero."""


class NotPremagic(IfnError):
    """Row sums and column sums of the matrix do not match at every node."""


class NotIrreducible(IfnError):
    """The network or signature is not strongly connected."""


class CycleBudgetExceeded(IfnError):
    """Cycle enumeration passed the configured cap."""


class UnknownLink(IfnError):
    """A cycle uses a link that is absent from the network support."""


class DimensionMismatch(IfnError):
    """Vector/matrix dimensions disagree."""


class InfeasibleKappa(IfnError):
    """Requested total flow is too small for the requested node count."""


class NotStochastic(IfnError):
    """Matrix rows must be nonnegative and sum to exactly 1."""


# Errors that mean "the input was well-formed but the domain preconditions
# fail"; the CLI maps these to exit code 2 and the HTTP service to 422.
# Everything else under IfnError is treated as a parse/usage error.
DOMAIN_ERRORS = (
    NegativeFlowResult,
    NotPremagic,
    NotIrreducible,
    CycleBudgetExceeded,
    InfeasibleKappa,
    NotStochastic,
)
