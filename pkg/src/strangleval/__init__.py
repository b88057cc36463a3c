"""Relative-value analytics for delta-symmetric option strangles.

A strangle sells (or buys) the put and call whose deltas share one
absolute value delta.  Its price over the discounted strike spread, the
relative value R(delta, nu), depends only on delta and nu = sigma*sqrt(t)
and never exceeds bound(delta).  The package prices the legs, evaluates R
and its bound, optimizes the exit delta for a fractional-loss policy, and
benchmarks market option chains against the bound.
"""

__version__ = "0.1.0"

from .bs_engine import MarketContext, call_price, d_terms, delta_call, delta_put, put_price
from .chain_ingest import (
    ChainRow,
    MarketStrangle,
    benchmark_chain,
    benchmark_report,
    bundled_chain_text,
    infer_delta,
    load_bundled_chain,
    parse_chain,
    select_strangle,
    sigma_from_iv,
)
from .delta_param import (
    NU_MIN,
    DeltaNuPoint,
    call_price_dn,
    in_domain_b,
    prob_itm_call,
    put_price_dn,
    strike_call,
    strike_put,
)
from .errors import ConvergenceError, DegenerateNuError, DomainError, InputError, StrangleValError
from .normal_kernel import cdf, pdf, quantile
from .oracle import McEstimate, OracleConfig, price_by_quadrature, prob_between_mc
from .relative_value import (
    MonotonicityReport,
    StranglePricing,
    bound,
    bound_derivative,
    monotonicity_report,
    price_strangle,
    rv_closed,
    rv_phi_form,
    success_probability,
    surface,
)
from .strategy_optimizer import (
    DEFAULT_LAMBDAS,
    StrategyOptimum,
    approx_expected_reward,
    expected_relative_reward,
    optimal_delta,
    strategy_table,
)

__all__ = [
    "__version__",
    "pdf", "cdf", "quantile",
    "MarketContext", "call_price", "put_price", "d_terms", "delta_call", "delta_put",
    "DeltaNuPoint", "NU_MIN", "in_domain_b", "strike_call", "strike_put",
    "call_price_dn", "put_price_dn", "prob_itm_call",
    "StranglePricing", "bound", "bound_derivative", "rv_closed", "rv_phi_form",
    "success_probability", "price_strangle", "surface", "monotonicity_report", "MonotonicityReport",
    "StrategyOptimum", "DEFAULT_LAMBDAS", "optimal_delta", "strategy_table",
    "approx_expected_reward", "expected_relative_reward",
    "ChainRow", "MarketStrangle", "parse_chain", "select_strangle", "infer_delta",
    "benchmark_chain", "benchmark_report", "bundled_chain_text", "load_bundled_chain", "sigma_from_iv",
    "OracleConfig", "McEstimate", "price_by_quadrature", "prob_between_mc",
    "StrangleValError", "DomainError", "DegenerateNuError", "InputError", "ConvergenceError",
]
