"""Special functions on the cut -1 < x < 1 with complex degree."""

from .degree_derivative import EVEN_FORMULAS, ODD_FORMULAS, dP_dnu_resonant
from .gamma import digamma, gamma_ratio, log_gamma, rgamma
from .hypergeometric import hyp2f1_regularized, hyp2f1_series
from .legendre import ferrers_P, ferrers_Q, gegenbauer_C, legendre_R, split_argument
from .trig import HALF_ODD_FORMULAS, ferrers_P_half_odd, ferrers_PQ_half_odd_aux

__all__ = [
    "log_gamma",
    "digamma",
    "rgamma",
    "gamma_ratio",
    "hyp2f1_series",
    "hyp2f1_regularized",
    "ferrers_P",
    "ferrers_Q",
    "legendre_R",
    "gegenbauer_C",
    "split_argument",
    "ferrers_P_half_odd",
    "ferrers_PQ_half_odd_aux",
    "HALF_ODD_FORMULAS",
    "dP_dnu_resonant",
    "EVEN_FORMULAS",
    "ODD_FORMULAS",
]
