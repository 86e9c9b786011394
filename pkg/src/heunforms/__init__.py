"""Closed forms of Heun and confluent Heun functions, certified exactly."""

from .closed_forms import certify_family, hc_closed_form, hl_closed_form, index_form_sum
from .exact import binomial, coeff_a, coeff_r, pochhammer
from .heun import (
    ConfluentHeunParams,
    HeunParams,
    check_derivative_relation,
    confluent_series,
    heun_series,
    ode_residual_confluent,
    ode_residual_general,
)
from .identities import sweep, verify_identity
from .series import ClosedFormExpr, Polynomial, PowerSeries, cf_eval_exact, cf_expand_series

__version__ = "0.1.0"
