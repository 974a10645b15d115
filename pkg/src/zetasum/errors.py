"""Exception hierarchy.  Non-convergence is not an exception: it is reported
through ``EvalResult.converged``."""


class ZetasumError(Exception):
    pass


class DomainError(ZetasumError, ValueError):
    """Argument outside the region where a formula is defined or validated."""


class PoleError(DomainError):
    """Argument sits on (or numerically too close to) a declared pole."""


class SingularParameterError(DomainError):
    """Exponent k = -1 in the power-sum formulas (harmonic numbers)."""


class CapacityError(ZetasumError, ValueError):
    """Request exceeds a stated design limit (e.g. the Bernoulli table)."""


class IntegrandError(ZetasumError, FloatingPointError):
    """Integrand returned NaN/Inf at a sample point."""

    def __init__(self, abscissa: float, value):
        self.abscissa = abscissa
        self.value = value
        super().__init__(f"integrand is not finite at x = {abscissa!r} (got {value!r})")
