from .error import Error
from .polynomial import Polynomial
from .series import Series, egf_coeff, series_compose, series_exp
from .combinatorics import (
    deg_exp_series, deg_falling, deg_log_series, deg_poly_bell, polyexp_apply,
    stirling, stirling_table)
from .distributions import (
    Bernoulli, FiniteDiscrete, Gamma, PointMass, Poisson, parse_distribution)
from .probabilistic import (
    deg_mgf_closed, deg_mgf_series, deg_moment, prob_deg_bell,
    prob_deg_stirling2, sm_deg_moment)
from .poly_bell import (
    PolyBellQuery, bel_closed, bel_gf, bel_number, bel_row, bel_via_sm)
from .identities import run_all, verify_identity
