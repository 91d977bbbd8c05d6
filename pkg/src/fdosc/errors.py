"""Exception types shared across the toolkit."""


class PoleError(ArithmeticError):
    """Gamma-type function evaluated at a pole (non-positive integer)."""


class ParameterError(ValueError):
    """Polynomial or series parameters make a denominator vanish."""


class CouplingError(ValueError):
    """Coupling constants outside the range where exponents stay real."""


class EvaluationError(ArithmeticError):
    """A function or operator could not be evaluated at the requested point."""


class SpectralError(ArithmeticError):
    """Spectral scalar (e.g. f(E)) is non-positive where a square root is needed."""


class ConvergenceError(RuntimeError):
    """An iterative eigensolver failed to converge."""
