"""Hermite-theta zeta families and integral representations of Riemann xi.

Everything is pure-Python double precision with certified truncation and
quadrature error accounting; exact rational arithmetic backs the Bernoulli
and Stirling layers and the integer special values.
"""

from .errors import (
    ConvergenceError,
    CountMismatch,
    DomainError,
    FormError,
    PoleError,
    PrecisionWarning,
    ToleranceNotMet,
    UnverifiedDomainWarning,
)
from .special import (
    bernoulli,
    digamma,
    double_factorial,
    gamma_complex,
    hermite,
    log_gamma,
    pochhammer,
    stirling_first_unsigned,
)
from .hyper import (
    PolyFamilySpec,
    d_hyp2f1_at_zero,
    d_hyp2f1_ds,
    hermite_mellin_lead,
    hermite_mellin_poly,
    hyp2f1_gamma_ratio,
    hyp2f1_terminating,
    laguerre_mellin_poly,
    rising_factorial_sum,
    xi_weight_poly,
)
from .zeta import (
    special_value_even,
    special_value_even_float,
    special_value_neg,
    zeta,
    zeta_deriv,
    zeta_family,
    zeta_family_deriv,
    zeta_family_hyp_form,
)
from .theta import (
    SeriesControl,
    ThetaArgument,
    ThetaSum,
    gaussian_hermite_moment,
    hermite_gaussian,
    hermite_gaussian_at_zero,
    hermite_theta,
    hermite_theta_weighted,
    inversion_residual,
    parity_split_recombination,
    theta_abs_bound,
    theta_small_argument_asymptote,
)
from .quad import QuadratureConfig, QuadratureResult
from .xi import (
    RepresentationReport,
    ReportCell,
    SplitParameter,
    completed_zeta,
    mellin_omega_integral,
    mellin_psi_integral,
    representation_report,
    split_tail_transform,
    xi_direct,
    xi_split_real,
    xi_split_wedge,
)
from .zeros import (
    ExhaustiveReport,
    ZeroRecord,
    critical_line_section,
    find_zeros,
    verify_exhaustive,
)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "CountMismatch",
    "DomainError",
    "FormError",
    "PoleError",
    "PrecisionWarning",
    "ToleranceNotMet",
    "UnverifiedDomainWarning",
    "bernoulli",
    "digamma",
    "double_factorial",
    "gamma_complex",
    "hermite",
    "log_gamma",
    "pochhammer",
    "stirling_first_unsigned",
    "PolyFamilySpec",
    "d_hyp2f1_at_zero",
    "d_hyp2f1_ds",
    "hermite_mellin_lead",
    "hermite_mellin_poly",
    "hyp2f1_gamma_ratio",
    "hyp2f1_terminating",
    "laguerre_mellin_poly",
    "rising_factorial_sum",
    "xi_weight_poly",
    "special_value_even",
    "special_value_even_float",
    "special_value_neg",
    "zeta",
    "zeta_deriv",
    "zeta_family",
    "zeta_family_deriv",
    "zeta_family_hyp_form",
    "SeriesControl",
    "ThetaArgument",
    "ThetaSum",
    "gaussian_hermite_moment",
    "hermite_gaussian",
    "hermite_gaussian_at_zero",
    "hermite_theta",
    "hermite_theta_weighted",
    "inversion_residual",
    "parity_split_recombination",
    "theta_abs_bound",
    "theta_small_argument_asymptote",
    "QuadratureConfig",
    "QuadratureResult",
    "RepresentationReport",
    "ReportCell",
    "SplitParameter",
    "completed_zeta",
    "mellin_omega_integral",
    "mellin_psi_integral",
    "representation_report",
    "split_tail_transform",
    "xi_direct",
    "xi_split_real",
    "xi_split_wedge",
    "ExhaustiveReport",
    "ZeroRecord",
    "critical_line_section",
    "find_zeros",
    "verify_exhaustive",
    "__version__",
]
