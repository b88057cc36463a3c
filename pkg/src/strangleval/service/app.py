"""HTTP service wrapping the analytics library.

Every numeric endpoint is a thin shim over one library call.  Domain
errors map to 400 with category "domain", unusable input data to 400 with
category "input"; the CLI relies on that split for its exit codes.
"""
import math

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..bs_engine import MarketContext
from ..chain_ingest import benchmark_chain, benchmark_rows, parse_chain, sigma_from_iv, verdict_totals
from ..delta_param import DeltaNuPoint
from ..errors import DomainError, InputError
from ..relative_value import (
    bound,
    default_deltas,
    price_strangle,
    rv_closed,
    success_probability,
    surface,
)
from ..strategy_optimizer import approx_expected_reward, optimal_delta, strategy_table
from .models import (
    BenchmarkRowModel,
    BenchmarkTotals,
    BoundResponse,
    ChainBenchmarkRequest,
    ChainBenchmarkResponse,
    CurvePoint,
    CurveResponse,
    HealthResponse,
    OptimumModel,
    PriceResponse,
    RvResponse,
    StrategyTableResponse,
    SurfaceResponse,
    SurfaceRow,
)


def _resolve_sigma(sigma: float | None, iv: float | None) -> float:
    if sigma is not None and iv is not None:
        raise DomainError("pass either sigma (daily) or iv (annualized), not both")
    if sigma is not None:
        return sigma
    if iv is not None:
        return sigma_from_iv(iv)
    raise DomainError("a volatility is required: sigma (daily) or iv (annualized)")


def _resolve_nu(nu: float | None, sigma: float | None, iv: float | None, days: float | None) -> float:
    if nu is not None:
        if sigma is not None or iv is not None or days is not None:
            raise DomainError("pass either nu alone or a volatility with days, not both")
        return nu
    if sigma is None and iv is None and days is None:
        raise DomainError("pass nu directly, or a volatility (sigma or iv) with days")
    if days is None:
        raise DomainError("days is required when nu is built from a volatility")
    if not days > 0.0:
        raise DomainError(f"days must be positive, got {days}")
    return _resolve_sigma(sigma, iv) * math.sqrt(days)


def _optimum_model(opt) -> OptimumModel:
    return OptimumModel(lam=opt.lam, delta_star=opt.delta_star,
                        expected_reward=opt.expected_reward, success_prob=opt.success_prob)


def create_app() -> FastAPI:
    app = FastAPI(title="strangleval", version=__version__)

    @app.exception_handler(DomainError)
    async def _domain_error(request: Request, exc: DomainError):
        return JSONResponse(status_code=400, content={"category": "domain", "message": str(exc)})

    @app.exception_handler(InputError)
    async def _input_error(request: Request, exc: InputError):
        return JSONResponse(status_code=400, content={"category": "input", "message": str(exc)})

    @app.get("/health", response_model=HealthResponse)
    def health():
        return HealthResponse(status="ok", version=__version__)

    @app.get("/bound", response_model=BoundResponse)
    def get_bound(delta: float = Query(...)):
        return BoundResponse(delta=delta, bound=bound(delta))

    @app.get("/rv", response_model=RvResponse)
    def get_rv(delta: float = Query(...),
               nu: float | None = Query(default=None),
               sigma: float | None = Query(default=None),
               iv: float | None = Query(default=None),
               days: float | None = Query(default=None)):
        point = DeltaNuPoint(delta, _resolve_nu(nu, sigma, iv, days))
        return RvResponse(delta=delta, nu=point.nu, rv=rv_closed(point),
                          bound=bound(delta), alpha=success_probability(point))

    @app.get("/price", response_model=PriceResponse)
    def get_price(mu: float = Query(...),
                  delta: float = Query(...),
                  days: float = Query(...),
                  sigma: float | None = Query(default=None),
                  iv: float | None = Query(default=None),
                  rate: float = Query(default=0.0)):
        ctx = MarketContext(mu, _resolve_sigma(sigma, iv), days, rate)
        pricing = price_strangle(ctx, delta)
        return PriceResponse(mu=mu, sigma=ctx.sigma, days=days, rate=rate, delta=delta,
                             nu=ctx.nu, k_minus=pricing.k_minus, k_plus=pricing.k_plus,
                             price_put=pricing.price_put, price_call=pricing.price_call,
                             total=pricing.total, rv=pricing.relative_value, bound=bound(delta))

    @app.get("/optimal-delta", response_model=OptimumModel)
    def get_optimal_delta(lam: float = Query(..., alias="lambda")):
        return _optimum_model(optimal_delta(lam))

    @app.get("/strategy-table", response_model=StrategyTableResponse)
    def get_strategy_table(lambdas: str | None = Query(default=None)):
        if lambdas is None:
            rows = strategy_table()
        else:
            try:
                values = [float(part) for part in lambdas.split(",") if part.strip()]
            except ValueError:
                raise DomainError(f"lambdas must be comma-separated numbers, got {lambdas!r}") from None
            if not values:
                raise DomainError("lambdas is empty")
            rows = strategy_table(values)
        return StrategyTableResponse(rows=[_optimum_model(opt) for opt in rows])

    @app.get("/surface", response_model=SurfaceResponse)
    def get_surface():
        rows = [SurfaceRow(delta=p.delta, nu=p.nu, rv=p.rv, bound=p.bound, alpha=p.alpha)
                for p in surface()]
        return SurfaceResponse(rows=rows)

    @app.get("/curve", response_model=CurveResponse)
    def get_curve(kind: str = Query(...),
                  lam: float | None = Query(default=None, alias="lambda")):
        deltas = default_deltas()
        if kind == "bound":
            if lam is not None:
                raise DomainError("the bound curve takes no lambda")
            points = [CurvePoint(delta=d, value=bound(d)) for d in deltas]
        elif kind == "reward":
            if lam is None:
                raise DomainError("the reward curve needs a lambda")
            points = [CurvePoint(delta=d, value=approx_expected_reward(d, lam)) for d in deltas]
        else:
            raise DomainError(f"unknown curve kind {kind!r}; expected bound or reward")
        return CurveResponse(kind=kind, lam=lam, rows=points)

    @app.post("/chain-benchmark", response_model=ChainBenchmarkResponse)
    def post_chain_benchmark(request: ChainBenchmarkRequest):
        strangles = benchmark_chain(parse_chain(request.csv_text), request.delta, request.rate)
        rows = [BenchmarkRowModel(**row.__dict__) for row in benchmark_rows(strangles)]
        counts = verdict_totals(strangles)
        totals = BenchmarkTotals(total=len(strangles),
                                 well_priced=counts["well_priced"],
                                 bs_undervalues=counts["bs_undervalues"],
                                 below_bound=counts["below_bound"])
        return ChainBenchmarkResponse(rows=rows, totals=totals)

    return app
