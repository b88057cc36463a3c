"""The (delta, nu) re-parameterization of the strangle design space.

Strikes and leg prices are indexed by the call delta instead of the strike:
z = quantile(delta) turns the strike inversion and both option prices into
closed forms in (delta, nu) alone, up to the overall factor mu.
"""
import math
from dataclasses import dataclass

from . import normal_kernel as nk
from .bs_engine import MarketContext
from .errors import DomainError

# Below this nu the closed forms for R degenerate (0/0); callers wanting the
# nu -> 0 limit should use relative_value.bound instead.
NU_MIN = 1e-6


@dataclass(frozen=True)
class DeltaNuPoint:
    """A strangle design point: shared leg delta in (0, 0.5) and nu = sigma*sqrt(t)."""
    delta: float
    nu: float

    def __post_init__(self):
        if not 0.0 < self.delta < 0.5:
            raise DomainError(f"delta must lie in (0, 0.5), got {self.delta}")
        if not self.nu > 0.0:
            raise DomainError(f"nu must be positive, got {self.nu}")


def in_domain_b(point: DeltaNuPoint) -> bool:
    """True iff delta < Phi(-nu/2): both legs strictly OTM at r = 0."""
    return point.delta < nk.cdf(-point.nu / 2.0)


def _z(delta: float) -> float:
    if not 0.0 < delta < 1.0:
        raise DomainError(f"delta must lie in (0, 1), got {delta}")
    return nk.quantile(delta)


def strike_call(ctx: MarketContext, delta: float) -> float:
    """k+ = mu*exp(-z*nu + nu^2/2 + r*t), the strike whose call delta equals delta."""
    z = _z(delta)
    nu = ctx.nu
    return ctx.mu * math.exp(-z * nu + 0.5 * nu * nu + ctx.r * ctx.t)


def strike_put(ctx: MarketContext, delta: float) -> float:
    """k- = mu*exp(z*nu + nu^2/2 + r*t), the strike whose put delta equals -delta."""
    z = _z(delta)
    nu = ctx.nu
    return ctx.mu * math.exp(z * nu + 0.5 * nu * nu + ctx.r * ctx.t)


def call_price_dn(ctx: MarketContext, delta: float) -> float:
    """Price of the delta-call: mu * (delta - exp(-z*nu + nu^2/2) * Phi(z - nu))."""
    z = _z(delta)
    nu = ctx.nu
    return ctx.mu * (delta - math.exp(-z * nu + 0.5 * nu * nu) * nk.cdf(z - nu))


def put_price_dn(ctx: MarketContext, delta: float) -> float:
    """Price of the delta-put: -mu * (delta - exp(z*nu + nu^2/2) * Phi(z + nu))."""
    z = _z(delta)
    nu = ctx.nu
    return -ctx.mu * (delta - math.exp(z * nu + 0.5 * nu * nu) * nk.cdf(z + nu))


def prob_itm_call(point: DeltaNuPoint) -> float:
    """Phi(z - nu): chance the delta-call expires ITM.  Always <= delta; -> delta as nu -> 0."""
    z = nk.quantile(point.delta)
    return nk.cdf(z - point.nu)
