"""Option-chain CSV ingestion and market-vs-bound benchmarking.

Input CSV header: ticker,underlying,days,strike,right,bid,ask,delta,iv
(right is C or P; delta and iv may be empty).  Mid prices are (bid+ask)/2.
The market relative value r_hat = mid_total / (spread * exp(-r*t)) is
compared against bound(target delta): a strangle is well_priced exactly
when r_hat >= r_bar.
"""
import csv
import io
import math
from dataclasses import dataclass
from importlib import resources

from .bs_engine import MarketContext, delta_call, delta_put
from .errors import DomainError, InputError
from .relative_value import bound

ANNUALIZATION_DAYS = 365.0
CHAIN_HEADER = ("ticker", "underlying", "days", "strike", "right", "bid", "ask", "delta", "iv")
REPORT_HEADER = ("ticker", "mu", "iv", "days", "delta", "k1", "k2", "price", "r_hat", "r_bar", "verdict")

VERDICT_WELL_PRICED = "well_priced"
VERDICT_BS_UNDERVALUES = "bs_undervalues"
VERDICT_BELOW_BOUND = "below_bound"

_BUNDLED_CHAIN = "sample_chain.csv"


def sigma_from_iv(iv: float) -> float:
    """Daily volatility from an annualized quote: sigma = iv / sqrt(365)."""
    return iv / math.sqrt(ANNUALIZATION_DAYS)


@dataclass(frozen=True)
class ChainRow:
    """One option quote from an ingested chain."""
    ticker: str
    underlying: float
    days: int
    strike: float
    right: str
    bid: float
    ask: float
    delta: float | None = None
    iv: float | None = None

    def __post_init__(self):
        problems = _row_problems(self)
        if problems:
            raise InputError("; ".join(problems))

    def mid(self) -> float:
        return 0.5 * (self.bid + self.ask)


def _row_problems(row: ChainRow) -> list[str]:
    problems = []
    if not row.ticker:
        problems.append("ticker is empty")
    if not row.underlying > 0.0:
        problems.append(f"underlying must be positive, got {row.underlying}")
    if row.days < 1:
        problems.append(f"days must be at least 1, got {row.days}")
    if not row.strike > 0.0:
        problems.append(f"strike must be positive, got {row.strike}")
    if row.right not in ("C", "P"):
        problems.append(f"right must be C or P, got {row.right!r}")
    if row.bid < 0.0:
        problems.append(f"bid must be nonnegative, got {row.bid}")
    if row.ask < row.bid:
        problems.append(f"crossed quote: ask {row.ask} < bid {row.bid}")
    if row.delta is not None and row.right == "C" and not 0.0 < row.delta < 1.0:
        problems.append(f"call delta must lie in (0, 1), got {row.delta}")
    if row.delta is not None and row.right == "P" and not -1.0 < row.delta < 0.0:
        problems.append(f"put delta must lie in (-1, 0), got {row.delta}")
    if row.iv is not None and not row.iv > 0.0:
        problems.append(f"iv must be positive, got {row.iv}")
    return problems


def _parse_float(field: str, text: str, optional: bool = False) -> float | None:
    text = text.strip()
    if not text:
        if optional:
            return None
        raise ValueError(f"{field} is empty")
    try:
        return float(text)
    except ValueError:
        raise ValueError(f"{field} is not a number: {text!r}") from None


def _parse_int(field: str, text: str) -> int:
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"{field} is not an integer: {text!r}") from None


def parse_chain(data) -> list[ChainRow]:
    """Parse a chain CSV from bytes, str or a text file object.

    All malformed lines are collected and reported together, each with its
    line number.  A file without even a header line is an error; a
    header-only file is an empty chain.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputError(f"chain is not valid UTF-8: {exc}") from None
    elif isinstance(data, str):
        text = data
    else:
        text = data.read()
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise InputError("empty chain file: no header line") from None
    if tuple(h.strip() for h in header) != CHAIN_HEADER:
        raise InputError(f"bad header: expected {','.join(CHAIN_HEADER)}, got {','.join(header)}")
    rows = []
    problems = []
    for lineno, record in enumerate(reader, start=2):
        if not record or all(not cell.strip() for cell in record):
            continue
        if len(record) != len(CHAIN_HEADER):
            problems.append(f"line {lineno}: expected {len(CHAIN_HEADER)} fields, got {len(record)}")
            continue
        try:
            row = ChainRow(
                ticker=record[0].strip(),
                underlying=_parse_float("underlying", record[1]),
                days=_parse_int("days", record[2]),
                strike=_parse_float("strike", record[3]),
                right=record[4].strip(),
                bid=_parse_float("bid", record[5]),
                ask=_parse_float("ask", record[6]),
                delta=_parse_float("delta", record[7], optional=True),
                iv=_parse_float("iv", record[8], optional=True),
            )
        except (ValueError, InputError) as exc:
            problems.append(f"line {lineno}: {exc}")
            continue
        rows.append(row)
    if problems:
        raise InputError("; ".join(problems))
    return rows


def infer_delta(row: ChainRow, r: float = 0.0) -> float:
    """BS delta of the row from its quoted iv (sigma = iv / sqrt(365))."""
    if row.iv is None:
        raise InputError(f"{row.ticker} {row.strike} {row.right}: no iv to infer a delta from")
    ctx = MarketContext(row.underlying, sigma_from_iv(row.iv), float(row.days), r)
    if row.right == "C":
        return delta_call(ctx, row.strike)
    return delta_put(ctx, row.strike)


def verdict_for(r_hat: float, r_bar: float) -> str:
    """well_priced iff r_hat >= r_bar; anything smaller prices below the bound."""
    return VERDICT_WELL_PRICED if r_hat >= r_bar else VERDICT_BELOW_BOUND


@dataclass(frozen=True)
class MarketStrangle:
    """A market strangle: two selected legs benchmarked against the bound."""
    put_row: ChainRow
    call_row: ChainRow
    target_delta: float
    achieved_delta: float
    mid_total: float
    spread: float
    r_hat: float
    r_bar: float
    verdict: str
    rate: float = 0.0


def _leg_delta(row: ChainRow, r: float) -> float:
    if row.delta is not None:
        return row.delta
    return infer_delta(row, r)


def select_strangle(rows: list[ChainRow], target_delta: float, r: float = 0.0) -> MarketStrangle:
    """Pick the put and call whose |delta| is closest to target_delta and benchmark them.

    The rows must describe one ticker and expiry.  Quoted deltas are used
    when present, otherwise inferred from iv.  Ties go to the strike
    nearer the underlying.
    """
    if not 0.0 < target_delta < 0.5:
        raise DomainError(f"target delta must lie in (0, 0.5), got {target_delta}")
    if not rows:
        raise InputError("no chain rows to select from")
    if len({(row.ticker, row.days) for row in rows}) > 1:
        raise InputError("rows span more than one ticker/expiry")
    if len({row.underlying for row in rows}) > 1:
        raise InputError("rows disagree on the underlying price")

    def pick(right: str, wanted: float) -> ChainRow:
        candidates = [row for row in rows if row.right == right]
        if not candidates:
            kind = "call" if right == "C" else "put"
            raise InputError(f"no {kind} leg in the chain for {rows[0].ticker}")
        return min(candidates,
                   key=lambda row: (abs(_leg_delta(row, r) - wanted), abs(row.strike - row.underlying)))

    put_row = pick("P", -target_delta)
    call_row = pick("C", target_delta)
    if not put_row.strike < call_row.strike:
        raise InputError(
            f"selected strikes are not an OTM strangle: put {put_row.strike} >= call {call_row.strike}")
    achieved = 0.5 * (abs(_leg_delta(put_row, r)) + abs(_leg_delta(call_row, r)))
    mid_total = put_row.mid() + call_row.mid()
    spread = call_row.strike - put_row.strike
    r_hat = mid_total / (spread * math.exp(-r * put_row.days))
    r_bar = bound(target_delta)
    return MarketStrangle(put_row, call_row, target_delta, achieved, mid_total, spread,
                          r_hat, r_bar, verdict_for(r_hat, r_bar), r)


def benchmark_chain(rows: list[ChainRow], target_delta: float | None = None, r: float = 0.0) -> list[MarketStrangle]:
    """One strangle per (ticker, expiry) group, in first-seen order.

    With target_delta = None each group's target is the mean absolute
    quoted delta of its rows, so a chain quoted at one delta per ticker
    benchmarks at exactly that delta.
    """
    groups: dict[tuple[str, int], list[ChainRow]] = {}
    for row in rows:
        groups.setdefault((row.ticker, row.days), []).append(row)
    strangles = []
    for (ticker, _), group in groups.items():
        if target_delta is None:
            quoted = [abs(row.delta) for row in group if row.delta is not None]
            if not quoted:
                raise InputError(f"{ticker}: no quoted deltas to infer a target from; pass a target delta")
            target = sum(quoted) / len(quoted)
        else:
            target = target_delta
        strangles.append(select_strangle(group, target, r))
    return strangles


@dataclass(frozen=True)
class BenchmarkRow:
    """One line of the benchmark table."""
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


def benchmark_rows(strangles: list[MarketStrangle]) -> list[BenchmarkRow]:
    rows = []
    for s in strangles:
        ivs = [leg.iv for leg in (s.put_row, s.call_row) if leg.iv is not None]
        rows.append(BenchmarkRow(
            ticker=s.put_row.ticker,
            mu=s.put_row.underlying,
            iv=sum(ivs) / len(ivs) if ivs else None,
            days=s.put_row.days,
            delta=s.achieved_delta,
            k1=s.put_row.strike,
            k2=s.call_row.strike,
            price=s.mid_total,
            r_hat=s.r_hat,
            r_bar=s.r_bar,
            verdict=s.verdict,
        ))
    return rows


def verdict_totals(strangles: list[MarketStrangle]) -> dict[str, int]:
    counts = {VERDICT_WELL_PRICED: 0, VERDICT_BS_UNDERVALUES: 0, VERDICT_BELOW_BOUND: 0}
    for s in strangles:
        counts[s.verdict] += 1
    return counts


def benchmark_report(strangles: list[MarketStrangle]) -> str:
    """CSV report with one row per strangle and a trailing totals line."""
    lines = [",".join(REPORT_HEADER)]
    for row in benchmark_rows(strangles):
        lines.append(",".join([
            row.ticker,
            f"{row.mu:.6f}",
            "" if row.iv is None else f"{row.iv:.6f}",
            str(row.days),
            f"{row.delta:.6f}",
            f"{row.k1:.6f}",
            f"{row.k2:.6f}",
            f"{row.price:.6f}",
            f"{row.r_hat:.6f}",
            f"{row.r_bar:.6f}",
            row.verdict,
        ]))
    counts = verdict_totals(strangles)
    lines.append(f"# total={len(strangles)} well_priced={counts[VERDICT_WELL_PRICED]} "
                 f"bs_undervalues={counts[VERDICT_BS_UNDERVALUES]} below_bound={counts[VERDICT_BELOW_BOUND]}")
    return "\n".join(lines) + "\n"


def bundled_chain_text() -> str:
    """The bundled sample chain (seven liquid tickers, two legs each) as CSV text."""
    return resources.files("strangleval").joinpath("data").joinpath(_BUNDLED_CHAIN).read_text(encoding="utf-8")


def load_bundled_chain() -> list[ChainRow]:
    return parse_chain(bundled_chain_text())
