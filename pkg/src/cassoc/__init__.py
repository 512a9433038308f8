"""Exact-arithmetic engine for compressed Drinfeld associators.

Computes the commuting-commutator reduction of the Hausdorff series, solves
the compressed hexagon equation degree by degree, verifies the compressed
pentagon in the four-strand quotient, and expresses the Drinfeld series over
formal odd-zeta symbols -- all over exact rationals.
"""

from .exact import (
    bernoulli,
    check_bernoulli_identity,
    ext_bernoulli_closed,
    ext_bernoulli_prime,
    ext_bernoulli_recursive,
    gamma_coefficients,
)
from .series import QQ, BiSeries, UniSeries, standard_series
from .cbh import (
    associative_log_oracle,
    classical_cbh_in_model,
    compressed_cbh,
    hausdorff_in_l3,
)
from .hexagon import (
    AlphaTable,
    ParamSet,
    build_f,
    diagonal_series,
    extreme_coefficients,
    family_I,
    family_II,
    family_III,
    g_from_f,
    model_hexagon_check,
    residual_15b,
    residual_39,
    solve_degreewise,
    split_residuals,
)
from .pentagon import dimension_report, pentagon_check, pentagon_residual, phi_bar_eval
from .zeta import ThetaRing, drinfeld_f, solve_betas_in_theta, theta_even, theta_series

__version__ = "0.1.0"
