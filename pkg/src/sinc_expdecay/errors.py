"""Exception types raised by the library."""


class SincDomainError(ValueError):
    """An argument lies outside the domain of a map or approximant."""


class BranchError(SincDomainError):
    """A complex argument hits a singular point or branch cut of a map."""


class AdmissibilityError(ValueError):
    """A strip half-width ``d`` is outside the range allowed for a map."""


class BuildError(RuntimeError):
    """A function sample needed by an approximant is not finite."""

    def __init__(self, message, k=None, n=None):
        super().__init__(message)
        self.k = k
        self.n = n
