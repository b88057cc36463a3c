"""Brute-force verification oracles, independent of the closed forms.

price_by_quadrature integrates the discounted lognormal payoff expectation
with composite Simpson; prob_between_mc estimates the between-strikes
probability by Monte Carlo.  Both exist to validate the analytic modules,
not to replace them.
"""
import math
from dataclasses import dataclass

import numpy as np

from . import normal_kernel as nk
from .bs_engine import MarketContext
from .errors import DomainError

_MC_BATCH = 10 ** 6
_TWO_53 = 2 ** 53


@dataclass(frozen=True)
class OracleConfig:
    mc_paths: int = 10 ** 7
    quadrature_points: int = 2001
    seed: int = 0

    def __post_init__(self):
        if self.mc_paths < 10 ** 4:
            raise DomainError(f"mc_paths must be at least 10^4, got {self.mc_paths}")
        if self.quadrature_points < 101 or self.quadrature_points % 2 == 0:
            raise DomainError(f"quadrature_points must be odd and >= 101, got {self.quadrature_points}")
        if not 0 <= self.seed < 2 ** 64:
            raise DomainError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


def _simpson(y: np.ndarray, h: float) -> float:
    return h / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-2:2].sum())


def price_by_quadrature(ctx: MarketContext, k: float, right: str, cfg: OracleConfig = OracleConfig()) -> float:
    """Discounted E[payoff(S_T)] with log S_T ~ Normal(log mu + (r - sigma^2/2)t, sigma^2 t).

    Composite Simpson in log-price over the mean +/- 10 sd, truncated at the
    payoff kink so the integrand stays smooth; the discarded tail mass is
    below 1e-23.
    """
    if right not in ("C", "P"):
        raise DomainError(f"right must be 'C' or 'P', got {right!r}")
    if not k > 0.0:
        raise DomainError(f"strike must be positive, got {k}")
    s = ctx.nu
    m = math.log(ctx.mu) + (ctx.r - 0.5 * ctx.sigma * ctx.sigma) * ctx.t
    lo, hi = m - 10.0 * s, m + 10.0 * s
    if right == "C":
        lo = max(lo, math.log(k))
    else:
        hi = min(hi, math.log(k))
    if lo >= hi:
        return 0.0
    n = cfg.quadrature_points
    x = np.linspace(lo, hi, n)
    z = (x - m) / s
    density = np.exp(-0.5 * z * z) / (s * nk.SQRT_2PI)
    payoff = np.exp(x) - k if right == "C" else k - np.exp(x)
    integral = _simpson(payoff * density, (hi - lo) / (n - 1))
    return math.exp(-ctx.r * ctx.t) * float(integral)


@dataclass(frozen=True)
class McEstimate:
    value: float
    std_error: float
    paths: int


def prob_between_mc(ctx: MarketContext, k_lo: float, k_hi: float, cfg: OracleConfig = OracleConfig()) -> McEstimate:
    """Monte Carlo P(k_lo < S_T < k_hi) with its binomial standard error.

    Terminal prices come from uniform draws pushed through the kernel
    quantile.  Paths are generated in fixed-size batches whose generators
    are spawned deterministically from the seed, so a given OracleConfig
    always reproduces the same estimate.  k_lo = 0 with k_hi = inf covers
    the whole support and yields exactly 1.0.
    """
    if not k_lo < k_hi:
        raise DomainError(f"need k_lo < k_hi, got {k_lo} >= {k_hi}")
    drift = math.log(ctx.mu) + (ctx.r - 0.5 * ctx.sigma * ctx.sigma) * ctx.t
    vol = ctx.nu
    n = cfg.mc_paths
    sizes = [_MC_BATCH] * (n // _MC_BATCH)
    if n % _MC_BATCH:
        sizes.append(n % _MC_BATCH)
    children = np.random.SeedSequence(cfg.seed).spawn(len(sizes))
    hits = 0
    for size, child in zip(sizes, children):
        gen = np.random.Generator(np.random.Philox(child))
        # uniforms on the open lattice {1 .. 2^53 - 1} / 2^53, safe for quantile
        u = gen.integers(1, _TWO_53, size=size).astype(np.float64) * (1.0 / _TWO_53)
        s_t = np.exp(drift + vol * nk.quantile(u))
        hits += int(np.count_nonzero((k_lo < s_t) & (s_t < k_hi)))
    p_hat = hits / n
    return McEstimate(p_hat, math.sqrt(p_hat * (1.0 - p_hat) / n), n)
