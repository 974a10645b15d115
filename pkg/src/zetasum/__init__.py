"""Power sums, Riemann zeta and Hurwitz zeta for complex arguments via csch^2
integral representations, with an error-controlled quadrature underneath."""

from .errors import (
    CapacityError,
    DomainError,
    IntegrandError,
    PoleError,
    SingularParameterError,
    ZetasumError,
)
from .faulhaber import (
    TailForm,
    faulhaber_bernoulli_odd,
    powersum_ac,
    powersum_ac_alt,
    powersum_bruteforce,
    zeta_even_tail,
)
from .hurwitz import (
    HurwitzParams,
    hp_bruteforce,
    hp_sum_ac,
    hp_sum_hurwitz,
    hurwitz_global,
    hurwitz_neg_int,
)
from .kernel import bernoulli_table, cpow, csch_sq, log_gamma
from .quadrature import (
    EvalResult,
    QuadratureConfig,
    integrate_finite,
    integrate_semi_infinite,
    truncation_point,
)
from .zeta import (
    ZetaRepresentation,
    zeta,
    zeta_functional,
    zeta_global,
    zeta_reference,
    zeta_strip_neg,
    zeta_strip_pos,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "DomainError",
    "EvalResult",
    "HurwitzParams",
    "IntegrandError",
    "PoleError",
    "QuadratureConfig",
    "SingularParameterError",
    "TailForm",
    "ZetaRepresentation",
    "ZetasumError",
    "bernoulli_table",
    "cpow",
    "csch_sq",
    "faulhaber_bernoulli_odd",
    "hp_bruteforce",
    "hp_sum_ac",
    "hp_sum_hurwitz",
    "hurwitz_global",
    "hurwitz_neg_int",
    "integrate_finite",
    "integrate_semi_infinite",
    "log_gamma",
    "powersum_ac",
    "powersum_ac_alt",
    "powersum_bruteforce",
    "truncation_point",
    "zeta",
    "zeta_even_tail",
    "zeta_functional",
    "zeta_global",
    "zeta_reference",
    "zeta_strip_neg",
    "zeta_strip_pos",
]
