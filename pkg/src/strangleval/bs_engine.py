"""Black-Scholes pricing in strike space, in daily units.

sigma is per sqrt(day), t is in days and r is per day, so nu = sigma*sqrt(t)
and r*t are dimensionless.  Annualized volatility quotes are converted at
the ingestion boundary (sigma = iv / sqrt(365)), never inside the engine.
European exercise, zero dividend.
"""
import math
from dataclasses import dataclass

from . import normal_kernel as nk
from .errors import DomainError


@dataclass(frozen=True)
class MarketContext:
    """Classical BS inputs: price mu, daily vol sigma, days to expiry t, daily rate r."""
    mu: float
    sigma: float
    t: float
    r: float = 0.0

    def __post_init__(self):
        if not self.mu > 0.0:
            raise DomainError(f"mu must be positive, got {self.mu}")
        if not self.sigma > 0.0:
            raise DomainError(f"sigma must be positive, got {self.sigma}")
        if not self.t > 0.0:
            raise DomainError(f"t must be positive, got {self.t}")
        if not self.r >= 0.0:
            raise DomainError(f"negative rates are not supported, got r={self.r}")

    @property
    def nu(self) -> float:
        return self.sigma * math.sqrt(self.t)


def _check_strike(k: float):
    if not k > 0.0:
        raise DomainError(f"strike must be positive, got {k}")


def d_terms(ctx: MarketContext, k: float) -> tuple[float, float]:
    """(d1, d2) with d1 = (log(mu/k) + (r + sigma^2/2)t) / (sigma*sqrt(t)), d2 = d1 - sigma*sqrt(t)."""
    _check_strike(k)
    nu = ctx.nu
    d1 = (math.log(ctx.mu / k) + (ctx.r + 0.5 * ctx.sigma * ctx.sigma) * ctx.t) / nu
    return d1, d1 - nu


def call_price(ctx: MarketContext, k: float) -> float:
    """mu*Phi(d1) - k*exp(-rt)*Phi(d2)."""
    d1, d2 = d_terms(ctx, k)
    return ctx.mu * nk.cdf(d1) - k * math.exp(-ctx.r * ctx.t) * nk.cdf(d2)


def put_price(ctx: MarketContext, k: float) -> float:
    """k*exp(-rt)*Phi(-d2) - mu*(1 - Phi(d1)); satisfies put-call parity with call_price."""
    d1, d2 = d_terms(ctx, k)
    return k * math.exp(-ctx.r * ctx.t) * nk.cdf(-d2) - ctx.mu * (1.0 - nk.cdf(d1))


def delta_call(ctx: MarketContext, k: float) -> float:
    """Call delta Phi(d1), in (0, 1)."""
    d1, _ = d_terms(ctx, k)
    return nk.cdf(d1)


def delta_put(ctx: MarketContext, k: float) -> float:
    """Put delta delta_call - 1, in (-1, 0)."""
    return delta_call(ctx, k) - 1.0
