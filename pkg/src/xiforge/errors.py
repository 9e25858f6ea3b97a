"""Exception and warning types shared across the library."""


class DomainError(ValueError):
    """Argument outside the domain an operation is defined on."""


class PoleError(DomainError):
    """Evaluation requested at (or within tolerance of) a pole."""


class ConvergenceError(RuntimeError):
    """A series hit its term cap before meeting the requested tail bound."""

    def __init__(self, message, achieved_tail=None, terms_used=None):
        super().__init__(message)
        self.achieved_tail = achieved_tail
        self.terms_used = terms_used


class ToleranceNotMet(RuntimeError):
    """Adaptive quadrature stopped with an error estimate above tolerance."""

    def __init__(self, message, achieved, requested):
        super().__init__(message)
        self.achieved = achieved
        self.requested = requested


class CountMismatch(RuntimeError):
    """A zero scan found a different number of zeros than the degree demands."""

    def __init__(self, message, found, expected):
        super().__init__(message)
        self.found = found
        self.expected = expected


class FormError(ValueError):
    """A representation form was requested outside its validity domain."""


class PrecisionWarning(UserWarning):
    """Result may carry fewer correct digits than the documented default."""


class UnverifiedDomainWarning(UserWarning):
    """Evaluation is outside the hypotheses the backing theorem was stated for."""
