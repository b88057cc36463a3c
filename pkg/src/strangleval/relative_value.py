"""Relative value R(delta, nu) of the delta-symmetric strangle and its bound.

R is the strangle price over the discounted strike spread; it depends only
on (delta, nu), not on mu or r.  bound(delta) is its nu -> 0 limit and an
upper bound over all nu.
"""
import math
from dataclasses import dataclass

from . import normal_kernel as nk
from .bs_engine import MarketContext
from .delta_param import (
    NU_MIN,
    DeltaNuPoint,
    call_price_dn,
    in_domain_b,
    put_price_dn,
    strike_call,
    strike_put,
)
from .errors import DegenerateNuError, DomainError


def _check_nu(nu: float):
    if nu < NU_MIN:
        raise DegenerateNuError(
            f"nu={nu} is below the supported minimum {NU_MIN}; use bound(delta) for the nu -> 0 limit")


def _check_delta(delta: float):
    if not 0.0 < delta < 0.5:
        raise DomainError(f"delta must lie in (0, 0.5), got {delta}")


def rv_closed(point: DeltaNuPoint) -> float:
    """R(delta, nu) = (exp(z*nu)*Phi(z+nu) - exp(-z*nu)*Phi(z-nu)) / (exp(-z*nu) - exp(z*nu)).

    The denominator is evaluated as 2*sinh(-z*nu), which is the same
    quantity without the cancellation of the two exponentials.
    """
    _check_nu(point.nu)
    z = nk.quantile(point.delta)
    nu = point.nu
    num = math.exp(z * nu) * nk.cdf(z + nu) - math.exp(-z * nu) * nk.cdf(z - nu)
    return num / (2.0 * math.sinh(-z * nu))


def rv_phi_form(point: DeltaNuPoint) -> float:
    """R in pdf/cdf-only form: (phi(z-nu)*Phi(z+nu) - phi(z+nu)*Phi(z-nu)) / (phi(z+nu) - phi(z-nu)).

    Cross-validates rv_closed.  The denominator equals
    phi(z-nu) * expm1(-2*z*nu) exactly, a form that stays accurate where
    the direct difference of the two densities loses digits.
    """
    _check_nu(point.nu)
    z = nk.quantile(point.delta)
    nu = point.nu
    num = nk.pdf(z - nu) * nk.cdf(z + nu) - nk.pdf(z + nu) * nk.cdf(z - nu)
    return num / (nk.pdf(z - nu) * math.expm1(-2.0 * z * nu))


def bound(delta: float) -> float:
    """Upper bound on R over all nu, and its nu -> 0 limit: -phi(z)/z - delta."""
    _check_delta(delta)
    z = nk.quantile(delta)
    return -nk.pdf(z) / z - delta


def bound_derivative(delta: float) -> float:
    """d(bound)/d(delta) = 1/z^2; diverges as delta -> 0.5."""
    _check_delta(delta)
    z = nk.quantile(delta)
    return 1.0 / (z * z)


def success_probability(point: DeltaNuPoint) -> float:
    """alpha = Phi(-z-nu) - Phi(z-nu): chance the price expires between the strikes.

    Tends to 1 - 2*delta as nu -> 0; any nu > 0 is accepted.
    """
    z = nk.quantile(point.delta)
    return nk.cdf(-z - point.nu) - nk.cdf(z - point.nu)


@dataclass(frozen=True)
class StranglePricing:
    """Both legs of a delta-symmetric strangle priced at one (delta, nu)."""
    point: DeltaNuPoint
    k_minus: float
    k_plus: float
    price_put: float
    price_call: float
    total: float
    relative_value: float


def price_strangle(ctx: MarketContext, delta: float) -> StranglePricing:
    """Price both legs at the shared delta and divide by the discounted strike spread.

    The resulting relative_value agrees with rv_closed(delta, nu) for every
    mu and r (the ratio cancels both).
    """
    _check_delta(delta)
    point = DeltaNuPoint(delta, ctx.nu)
    _check_nu(point.nu)
    k_minus = strike_put(ctx, delta)
    k_plus = strike_call(ctx, delta)
    price_put = put_price_dn(ctx, delta)
    price_call = call_price_dn(ctx, delta)
    total = price_put + price_call
    pv_spread = (k_plus - k_minus) * math.exp(-ctx.r * ctx.t)
    return StranglePricing(point, k_minus, k_plus, price_put, price_call, total, total / pv_spread)


def default_deltas() -> list[float]:
    """The standard reporting deltas: 0.01 .. 0.49, step 0.01."""
    return [i / 100.0 for i in range(1, 50)]


def default_nus() -> list[float]:
    """The standard reporting nus: 0.01 .. 1.00, step 0.01."""
    return [j / 100.0 for j in range(1, 101)]


def default_grid() -> list[DeltaNuPoint]:
    """The full standard (delta, nu) reporting lattice."""
    return [DeltaNuPoint(d, n) for d in default_deltas() for n in default_nus()]


@dataclass(frozen=True)
class SurfacePoint:
    delta: float
    nu: float
    rv: float
    bound: float
    alpha: float


def surface(points: list[DeltaNuPoint] | None = None) -> list[SurfacePoint]:
    """Evaluate rv, bound and alpha over the given points (default: the standard grid)."""
    if points is None:
        points = default_grid()
    out = []
    for p in points:
        out.append(SurfacePoint(p.delta, p.nu, rv_closed(p), bound(p.delta), success_probability(p)))
    return out


@dataclass(frozen=True)
class MonotonicityViolation:
    delta: float
    nu: float
    axis: str
    slope: float


@dataclass(frozen=True)
class MonotonicityReport:
    checked: int
    violations: list[MonotonicityViolation]
    excluded: list[DeltaNuPoint]


def monotonicity_report(points: list[DeltaNuPoint]) -> MonotonicityReport:
    """Finite-difference sign checks of R on the lattice spanned by the points.

    At every supplied point inside the OTM domain whose lattice neighbours
    were also supplied, central differences must satisfy dR/dnu <= tol and
    dR/ddelta > -tol, tol = 1e-9 * max(1, |R|).  Points outside the domain
    are excluded and flagged, not checked.
    """
    inside = []
    excluded = []
    for p in points:
        (inside if in_domain_b(p) else excluded).append(p)
    provided = {(p.delta, p.nu) for p in points}
    deltas = sorted({p.delta for p in points})
    nus = sorted({p.nu for p in points})
    d_index = {d: i for i, d in enumerate(deltas)}
    n_index = {n: j for j, n in enumerate(nus)}
    cache: dict[tuple[float, float], float] = {}

    def value(d: float, n: float) -> float:
        if (d, n) not in cache:
            cache[(d, n)] = rv_closed(DeltaNuPoint(d, n))
        return cache[(d, n)]

    checked = 0
    violations = []
    for p in inside:
        i, j = d_index[p.delta], n_index[p.nu]
        tol = 1e-9 * max(1.0, abs(value(p.delta, p.nu)))
        if 0 < j < len(nus) - 1 and (p.delta, nus[j - 1]) in provided and (p.delta, nus[j + 1]) in provided:
            slope = (value(p.delta, nus[j + 1]) - value(p.delta, nus[j - 1])) / (nus[j + 1] - nus[j - 1])
            checked += 1
            if slope > tol:
                violations.append(MonotonicityViolation(p.delta, p.nu, "nu", slope))
        if 0 < i < len(deltas) - 1 and (deltas[i - 1], p.nu) in provided and (deltas[i + 1], p.nu) in provided:
            slope = (value(deltas[i + 1], p.nu) - value(deltas[i - 1], p.nu)) / (deltas[i + 1] - deltas[i - 1])
            checked += 1
            if slope <= -tol:
                violations.append(MonotonicityViolation(p.delta, p.nu, "delta", slope))
    return MonotonicityReport(checked, violations, excluded)
