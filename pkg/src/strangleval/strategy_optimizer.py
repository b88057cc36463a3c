"""Exit-strategy analytics for the short delta-symmetric strangle.

The position is closed at expiry for the full credit with probability
alpha, or bought back early for a fraction lambda of the credit.  The
nu -> 0 reward (1 - 2*delta*(1+lambda)) * bound(delta) has a unique
interior maximizer delta_star for each lambda in (0, 1].
"""
import math
from dataclasses import dataclass

from . import normal_kernel as nk
from .delta_param import DeltaNuPoint
from .errors import ConvergenceError, DomainError
from .relative_value import bound, rv_closed, success_probability

DEFAULT_LAMBDAS = (0.25, 0.40, 0.50, 0.60, 0.75, 1.00)

_BRACKET_LO = 1e-6
_BRACKET_HI = 0.5 - 1e-6


def _check_lambda(lam: float):
    if not 0.0 < lam <= 1.0:
        raise DomainError(f"lambda must lie in (0, 1], got {lam}")


def expected_relative_reward(delta: float, lam: float, nu: float) -> float:
    """Exact-nu expected reward (alpha*(1+lambda) - lambda) * R(delta, nu)."""
    _check_lambda(lam)
    point = DeltaNuPoint(delta, nu)
    alpha = success_probability(point)
    return (alpha * (1.0 + lam) - lam) * rv_closed(point)


def approx_expected_reward(delta: float, lam: float) -> float:
    """nu -> 0 reward (1 - 2*delta*(1+lambda)) * bound(delta); what optimal_delta maximizes.

    Nonnegative exactly when delta <= 1/(2*(1+lambda)).
    """
    _check_lambda(lam)
    return (1.0 - 2.0 * delta * (1.0 + lam)) * bound(delta)


def optimality_lhs(delta: float) -> float:
    """Left side of the first-order condition: delta*(1 - z^2) - z*phi(z).

    Strictly increasing from 0 to 0.5 on (0, 0.5); the optimum solves
    optimality_lhs(delta) = 1/(2*(1+lambda)).
    """
    z = nk.quantile(delta)
    return delta * (1.0 - z * z) - z * nk.pdf(z)


@dataclass(frozen=True)
class StrategyOptimum:
    """One strategy-table row: exit fraction, optimal delta, reward and win odds there."""
    lam: float
    delta_star: float
    expected_reward: float
    success_prob: float


def optimal_delta(lam: float) -> StrategyOptimum:
    """Maximize the nu -> 0 reward over delta by bisecting the first-order condition."""
    _check_lambda(lam)
    target = 1.0 / (2.0 * (1.0 + lam))
    lo, hi = _BRACKET_LO, _BRACKET_HI
    if optimality_lhs(lo) - target > 0.0 or optimality_lhs(hi) - target < 0.0:
        raise ConvergenceError(f"first-order condition not bracketed for lambda={lam}")
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        if optimality_lhs(mid) - target <= 0.0:
            lo = mid
        else:
            hi = mid
    delta_star = 0.5 * (lo + hi)
    if abs(optimality_lhs(delta_star) - target) > 1e-10:
        raise ConvergenceError(f"residual too large at delta_star={delta_star} for lambda={lam}")
    return StrategyOptimum(
        lam=lam,
        delta_star=delta_star,
        expected_reward=approx_expected_reward(delta_star, lam),
        success_prob=1.0 - 2.0 * delta_star,
    )


def strategy_table(lambdas=None) -> list[StrategyOptimum]:
    """One optimum per lambda, in input order.  Default: DEFAULT_LAMBDAS."""
    if lambdas is None:
        lambdas = DEFAULT_LAMBDAS
    return [optimal_delta(lam) for lam in lambdas]
