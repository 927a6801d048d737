"""Exceptions raised by qwalk3"""


class QWalkError(Exception):
    """Base class for everything qwalk3 raises on purpose"""


class PreconditionError(QWalkError, ValueError):
    """A construction was asked for outside its stated hypotheses.

    `condition` is a short machine-readable name for the failed hypothesis,
    so command output can report it without parsing the message.
    """

    def __init__(self, condition, message):
        super().__init__(f"{condition}: {message}")
        self.condition = condition
        self.message = message


class WindowError(QWalkError, ValueError):
    """Lattice window bounds that cannot hold the requested computation"""


class SelectionError(QWalkError):
    """No eigenvalue candidate survived the stationarity oracle"""

    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = dict(residuals or {})


class ConfigError(QWalkError):
    """Bad run document or command line options"""


class VerificationFailure(QWalkError):
    """One or more verification checks breached their tolerance"""

    def __init__(self, failures):
        names = ", ".join(sorted({f["check"] for f in failures}))
        super().__init__(f"{len(failures)} check(s) failed: {names}")
        self.failures = list(failures)
