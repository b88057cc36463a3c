"""Request and response schemas of the HTTP service."""
from pydantic import BaseModel, ConfigDict, Field


class HealthResponse(BaseModel):
    status: str
    version: str


class BoundResponse(BaseModel):
    delta: float
    bound: float


class RvResponse(BaseModel):
    delta: float
    nu: float
    rv: float
    bound: float
    alpha: float


class PriceResponse(BaseModel):
    mu: float
    sigma: float
    days: float
    rate: float
    delta: float
    nu: float
    k_minus: float
    k_plus: float
    price_put: float
    price_call: float
    total: float
    rv: float
    bound: float


class OptimumModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: float = Field(alias="lambda")
    delta_star: float
    expected_reward: float
    success_prob: float


class StrategyTableResponse(BaseModel):
    rows: list[OptimumModel]


class SurfaceRow(BaseModel):
    delta: float
    nu: float
    rv: float
    bound: float
    alpha: float


class SurfaceResponse(BaseModel):
    rows: list[SurfaceRow]


class CurvePoint(BaseModel):
    delta: float
    value: float


class CurveResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    kind: str
    lam: float | None = Field(default=None, alias="lambda")
    rows: list[CurvePoint]


class ChainBenchmarkRequest(BaseModel):
    csv_text: str
    delta: float | None = None
    rate: float = 0.0


class BenchmarkRowModel(BaseModel):
    ticker: str
    mu: float
    iv: float | None
    days: int
    delta: float
    k1: float
    k2: float
    price: float
    r_hat: float
    r_bar: float
    verdict: str


class BenchmarkTotals(BaseModel):
    total: int
    well_priced: int
    bs_undervalues: int
    below_bound: int


class ChainBenchmarkResponse(BaseModel):
    rows: list[BenchmarkRowModel]
    totals: BenchmarkTotals
