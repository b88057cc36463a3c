import math

import pytest
from fastapi.testclient import TestClient

from strangleval import DeltaNuPoint, bound, optimal_delta, rv_closed, success_probability
from strangleval.chain_ingest import bundled_chain_text
from strangleval.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    body = client.get("/health").json()
    assert body["status"] == "ok"
    assert body["version"]


def test_bound_exact_json_float(client):
    # JSON floats survive the round trip exactly, so the service value
    # equals the library value to the last bit
    body = client.get("/bound", params={"delta": 0.16}).json()
    assert body["bound"] == bound(0.16)
    assert body["delta"] == 0.16


def test_bound_domain_error(client):
    resp = client.get("/bound", params={"delta": 0.6})
    assert resp.status_code == 400
    body = resp.json()
    assert body["category"] == "domain"
    assert "delta" in body["message"]


def test_rv_with_nu(client):
    body = client.get("/rv", params={"delta": 0.25, "nu": 0.2}).json()
    point = DeltaNuPoint(0.25, 0.2)
    assert body["rv"] == rv_closed(point)
    assert body["bound"] == bound(0.25)
    assert body["alpha"] == success_probability(point)


def test_rv_with_sigma_days(client):
    body = client.get("/rv", params={"delta": 0.25, "sigma": 0.02, "days": 100}).json()
    assert body["nu"] == pytest.approx(0.2, abs=1e-15)


def test_rv_with_iv_days(client):
    body = client.get("/rv", params={"delta": 0.34, "iv": 0.3832, "days": 23}).json()
    assert body["nu"] == pytest.approx(0.3832 / math.sqrt(365.0) * math.sqrt(23.0), abs=1e-15)


def test_rv_volatility_flag_conflicts(client):
    for params in (
        {"delta": 0.25},
        {"delta": 0.25, "nu": 0.2, "sigma": 0.02},
        {"delta": 0.25, "nu": 0.2, "days": 10},
        {"delta": 0.25, "sigma": 0.02},  # days missing
        {"delta": 0.25, "sigma": 0.02, "iv": 0.3, "days": 10},
        {"delta": 0.25, "sigma": 0.02, "days": -5},
    ):
        resp = client.get("/rv", params=params)
        assert resp.status_code == 400
        assert resp.json()["category"] == "domain"


def test_price_endpoint(client):
    body = client.get("/price", params={
        "mu": 115.73, "iv": 0.3832, "days": 23, "delta": 0.34}).json()
    assert body["k_minus"] == pytest.approx(111.74398499815761, abs=1e-9)
    assert body["k_plus"] == pytest.approx(120.97240356235926, abs=1e-9)
    assert body["total"] == pytest.approx(body["price_put"] + body["price_call"], abs=1e-12)
    assert body["rv"] == pytest.approx(0.5469790339412951, abs=1e-12)
    assert body["rate"] == 0.0


def test_optimal_delta_uses_lambda_alias(client):
    body = client.get("/optimal-delta", params={"lambda": 0.5}).json()
    assert "lambda" in body and "lam" not in body
    opt = optimal_delta(0.5)
    assert body["lambda"] == 0.5
    assert body["delta_star"] == opt.delta_star
    assert body["expected_reward"] == opt.expected_reward
    assert body["success_prob"] == opt.success_prob


def test_optimal_delta_rejects_bad_lambda(client):
    resp = client.get("/optimal-delta", params={"lambda": 0.0})
    assert resp.status_code == 400
    assert resp.json()["category"] == "domain"


def test_strategy_table_default(client):
    rows = client.get("/strategy-table").json()["rows"]
    assert [row["lambda"] for row in rows] == [0.25, 0.40, 0.50, 0.60, 0.75, 1.00]


def test_strategy_table_custom(client):
    rows = client.get("/strategy-table", params={"lambdas": "0.9,0.3"}).json()["rows"]
    assert [row["lambda"] for row in rows] == [0.9, 0.3]


def test_strategy_table_bad_lambdas(client):
    for bad in ("abc", "0.5,x", ","):
        resp = client.get("/strategy-table", params={"lambdas": bad})
        assert resp.status_code == 400


def test_surface_full_grid(client):
    rows = client.get("/surface").json()["rows"]
    assert len(rows) == 4900
    first = rows[0]
    assert first["delta"] == 0.01
    assert first["nu"] == 0.01
    assert first["rv"] == rv_closed(DeltaNuPoint(0.01, 0.01))


def test_curve_bound(client):
    body = client.get("/curve", params={"kind": "bound"}).json()
    assert body["kind"] == "bound"
    assert body["lambda"] is None
    assert len(body["rows"]) == 49
    assert body["rows"][15]["delta"] == 0.16
    assert body["rows"][15]["value"] == bound(0.16)


def test_curve_reward(client):
    body = client.get("/curve", params={"kind": "reward", "lambda": 0.5}).json()
    assert body["lambda"] == 0.5
    assert len(body["rows"]) == 49


def test_curve_flag_conflicts(client):
    assert client.get("/curve", params={"kind": "bound", "lambda": 0.5}).status_code == 400
    assert client.get("/curve", params={"kind": "reward"}).status_code == 400
    assert client.get("/curve", params={"kind": "nope"}).status_code == 400


def test_chain_benchmark_roundtrip(client):
    resp = client.post("/chain-benchmark", json={"csv_text": bundled_chain_text()})
    assert resp.status_code == 200
    body = resp.json()
    assert body["totals"] == {"total": 7, "well_priced": 6, "bs_undervalues": 0, "below_bound": 1}
    tickers = [row["ticker"] for row in body["rows"]]
    assert tickers == ["SPY", "LLY", "BA", "TLT", "C", "IBM", "GOOG"]
    ibm = body["rows"][5]
    assert ibm["r_hat"] == pytest.approx(0.575, abs=1e-12)
    assert ibm["days"] == 23
    assert ibm["verdict"] == "well_priced"


def test_chain_benchmark_explicit_delta(client):
    resp = client.post("/chain-benchmark",
                       json={"csv_text": bundled_chain_text(), "delta": 0.25})
    body = resp.json()
    assert all(row["r_bar"] == bound(0.25) for row in body["rows"])


def test_chain_benchmark_input_error(client):
    resp = client.post("/chain-benchmark", json={"csv_text": "not,a,chain\n"})
    assert resp.status_code == 400
    body = resp.json()
    assert body["category"] == "input"
    assert "header" in body["message"]


def test_chain_benchmark_bad_row_is_input_error(client):
    csv_text = ("ticker,underlying,days,strike,right,bid,ask,delta,iv\n"
                "IBM,115.73,23,120,C,9.99,2.44,0.34,0.3832\n")
    resp = client.post("/chain-benchmark", json={"csv_text": csv_text})
    assert resp.status_code == 400
    assert resp.json()["category"] == "input"
    assert "line 2" in resp.json()["message"]
