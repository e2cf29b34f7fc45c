"""Exception types raised by conrad."""


class ConradError(Exception):
    """Base class for all conrad errors."""


class ParameterError(ConradError, ValueError):
    """A parameter is missing, superfluous or outside its legal range.

    ``param`` names the offending parameter when known, so the CLI can
    point at the right flag.
    """

    def __init__(self, message, param=None):
        super().__init__(message)
        self.param = param


class DomainError(ConradError, ValueError):
    """An evaluation point lies outside the domain of an operator."""

    def __init__(self, message, z=None):
        super().__init__(message)
        self.z = z


class SingularityError(DomainError):
    """Evaluation too close to the pole without a pole-cancelled evaluator."""


class NoRootError(ConradError, ArithmeticError):
    """No sign change of a radius polynomial was found in the bracket."""

    def __init__(self, message, lo=None, hi=None, f_lo=None, f_hi=None):
        super().__init__(message)
        self.lo, self.hi = lo, hi
        self.f_lo, self.f_hi = f_lo, f_hi
