"""Exception types shared across the package."""


class LekError(Exception):
    """Base class for numerical errors raised by this package."""


class DomainError(LekError, ValueError):
    """Argument outside the domain where a function is defined."""


class PoleError(LekError, ZeroDivisionError):
    """Evaluation at (or through) a pole."""


class DivergenceError(LekError, ArithmeticError):
    """A series or iteration failed to converge."""


class NonFiniteError(LekError, ArithmeticError):
    """An integrand returned inf or nan inside the integration range."""


class ConvergenceError(LekError, ArithmeticError):
    """Quadrature exhausted its evaluation budget before meeting the tolerance."""


class AccuracyWarning(UserWarning):
    """A result was computed but is known to carry reduced accuracy."""


class BranchError(DomainError):
    """A radicand would cross its branch cut inside an integration range."""


class CatalogError(LekError, LookupError):
    """Unknown suite or case id."""
