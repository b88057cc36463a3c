import math

import pytest

from strangleval import (
    DeltaNuPoint,
    DomainError,
    MarketContext,
    call_price,
    call_price_dn,
    delta_call,
    delta_put,
    in_domain_b,
    prob_itm_call,
    put_price,
    put_price_dn,
    strike_call,
    strike_put,
)
from strangleval.normal_kernel import cdf


def test_point_validation():
    DeltaNuPoint(0.25, 0.3)
    with pytest.raises(DomainError):
        DeltaNuPoint(0.0, 0.3)
    with pytest.raises(DomainError):
        DeltaNuPoint(0.5, 0.3)
    with pytest.raises(DomainError):
        DeltaNuPoint(0.25, 0.0)
    with pytest.raises(DomainError):
        DeltaNuPoint(0.25, -0.1)


def test_in_domain_b():
    assert in_domain_b(DeltaNuPoint(0.16, 0.5))
    assert in_domain_b(DeltaNuPoint(0.49, 0.01))
    assert not in_domain_b(DeltaNuPoint(0.45, 1.0))
    # boundary delta = cdf(-nu/2) itself is excluded (strict inequality)
    nu = 0.5
    assert not in_domain_b(DeltaNuPoint(cdf(-nu / 2.0), nu))
    assert in_domain_b(DeltaNuPoint(cdf(-nu / 2.0) - 1e-12, nu))


def test_ibm_strike_anchors(ibm_ctx):
    # frozen against a 50-digit evaluation
    assert strike_call(ibm_ctx, 0.34) == pytest.approx(120.97240356235926, abs=1e-9)
    assert strike_put(ibm_ctx, 0.34) == pytest.approx(111.74398499815761, abs=1e-9)


def test_strike_reflection(ibm_ctx):
    # put strike at delta equals call strike at 1 - delta
    for d in (0.1, 0.25, 0.34, 0.45):
        assert strike_put(ibm_ctx, d) == pytest.approx(strike_call(ibm_ctx, 1.0 - d), rel=1e-12)


def test_strike_round_trip():
    ctx = MarketContext(mu=100.0, sigma=0.02, t=50.0, r=1e-4)
    for d in (0.05, 0.16, 0.34, 0.49):
        assert delta_call(ctx, strike_call(ctx, d)) == pytest.approx(d, abs=1e-10)
        assert delta_put(ctx, strike_put(ctx, d)) == pytest.approx(-d, abs=1e-10)


def test_prices_match_strike_space(ibm_ctx):
    for d in (0.1, 0.25, 0.34):
        assert call_price_dn(ibm_ctx, d) == pytest.approx(
            call_price(ibm_ctx, strike_call(ibm_ctx, d)), abs=1e-10)
        assert put_price_dn(ibm_ctx, d) == pytest.approx(
            put_price(ibm_ctx, strike_put(ibm_ctx, d)), abs=1e-10)


def test_ibm_price_anchors(ibm_ctx):
    assert call_price_dn(ibm_ctx, 0.34) == pytest.approx(2.3915327547523556, abs=1e-10)
    assert put_price_dn(ibm_ctx, 0.34) == pytest.approx(2.6562187163005761, abs=1e-10)


def test_delta_parameterization_scale_free():
    # price over mu depends only on (delta, nu), not on mu
    a = MarketContext(mu=1.0, sigma=0.02, t=50.0)
    b = MarketContext(mu=5000.0, sigma=0.02, t=50.0)
    for d in (0.16, 0.34):
        assert call_price_dn(a, d) == pytest.approx(call_price_dn(b, d) / 5000.0, rel=1e-12)
        assert put_price_dn(a, d) == pytest.approx(put_price_dn(b, d) / 5000.0, rel=1e-12)


def test_otm_geometry():
    # inside the OTM domain the put strike sits below mu*e^{rt} and the call above
    ctx = MarketContext(mu=100.0, sigma=0.02, t=25.0, r=1e-4)
    fwd = 100.0 * math.exp(1e-4 * 25.0)
    for d in (0.05, 0.2, 0.4):
        if in_domain_b(DeltaNuPoint(d, ctx.nu)):
            assert strike_put(ctx, d) < fwd < strike_call(ctx, d)


def test_strike_asymmetry():
    # exp(nu^2/2) skews both strikes up: the call strike sits further from
    # the forward than the put strike at the same delta
    ctx = MarketContext(mu=100.0, sigma=0.1, t=25.0)  # nu = 0.5
    up = strike_call(ctx, 0.16) - 100.0
    down = 100.0 - strike_put(ctx, 0.16)
    assert up > down


def test_prob_itm_never_exceeds_delta():
    for d in (0.01, 0.16, 0.34, 0.49):
        for nu in (1e-8, 0.01, 0.3, 1.0):
            assert prob_itm_call(DeltaNuPoint(d, nu)) <= d


def test_prob_itm_limit():
    # Pr(ITM) -> delta as nu -> 0
    for d in (0.16, 0.34):
        assert prob_itm_call(DeltaNuPoint(d, 1e-8)) == pytest.approx(d, abs=1e-7)


def test_delta_outside_half_accepted_for_strikes(ibm_ctx):
    # strike/price maps accept any delta in (0, 1); only the strangle
    # abstractions restrict to (0, 0.5)
    assert strike_call(ibm_ctx, 0.66) < strike_call(ibm_ctx, 0.34)
    with pytest.raises(DomainError):
        strike_call(ibm_ctx, 0.0)
    with pytest.raises(DomainError):
        strike_put(ibm_ctx, 1.0)
