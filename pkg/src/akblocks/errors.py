"""Exception hierarchy shared by the library and the command line driver.

Each class carries the exit code the CLI reports for it.
"""


class AKError(Exception):
    exit_code = 1


class ParseError(AKError, ValueError):
    exit_code = 2


class PreconditionError(AKError, ValueError):
    exit_code = 3


class CapExceeded(AKError):
    exit_code = 4


class TheoremViolation(AKError):
    """A checked mathematical statement failed on a concrete instance.

    ``statement`` names the result that failed (e.g. ``"Lemma 3.8"``) and
    ``witness`` holds whatever data exhibits the failure.
    """

    exit_code = 5

    def __init__(self, statement, message, witness=None):
        super().__init__(f"{statement}: {message}")
        self.statement = statement
        self.witness = witness


class InternalError(AKError, RuntimeError):
    """Raised when a computed object fails a self-consistency check."""
