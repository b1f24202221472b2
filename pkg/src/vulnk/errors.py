"""Exception hierarchy. Everything user-facing derives from VulnkError,
which the CLI maps to exit code 2; anything else is an internal error (1)."""


class VulnkError(Exception):
    """Base class for validation and usage errors."""


class MalformedLine(VulnkError):
    pass


class ProbabilityOutOfRange(VulnkError):
    pass


class UnknownLabel(VulnkError):
    pass


class DuplicateEdge(VulnkError):
    pass


class SelfEdge(VulnkError):
    pass


class BudgetExceeded(VulnkError):
    pass


class InvalidK(VulnkError):
    pass


class InvalidBk(VulnkError):
    pass


class InvalidArguments(VulnkError):
    pass


class MismatchedK(VulnkError):
    pass


class InfeasibleShape(VulnkError):
    pass
