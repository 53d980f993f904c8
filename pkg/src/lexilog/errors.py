"""Exception hierarchy shared by every lexilog module."""


class LexilogError(Exception):
    """Base class for all errors raised by lexilog."""


class InvalidValueError(LexilogError, ValueError):
    """A digit sequence is not a member of the truth domain."""

    def __init__(self, reason, digits=None):
        self.reason = reason
        self.digits = digits
        super().__init__(reason)


class FormulaSyntaxError(LexilogError):
    """Lexical or syntactic error in formula text.

    ``position`` is the 0-based character offset where the problem was found.
    """

    def __init__(self, message, position, kind="syntax"):
        self.message = message
        self.position = position
        self.kind = kind
        super().__init__(f"{kind} error at offset {position}: {message}")


class UnboundAtomError(LexilogError, LookupError):
    def __init__(self, atom):
        self.atom = atom
        super().__init__(f"atom {atom!r} is not bound by the assignment")


class BudgetExceededError(LexilogError):
    """A brute-force procedure would exceed its configured work limit."""


class DataFormatError(LexilogError, ValueError):
    """Malformed assignment text, dataset CSV or level table."""
