"""Command-line client for the strangle analytics service.

Every subcommand issues one HTTP request.  By default an in-process
instance of the service handles it; --server points the same client at a
running instance instead.  Scalars print with 6 decimals; surface and
curve CSVs print full repr precision for plotting.
"""
import asyncio
from pathlib import Path

import click
import httpx

from .chain_ingest import REPORT_HEADER


def _request(server, method, path, *, params=None, json_body=None) -> httpx.Response:
    if server:
        try:
            with httpx.Client(base_url=server, timeout=60.0) as client:
                return client.request(method, path, params=params, json=json_body)
        except httpx.HTTPError as exc:
            click.echo(f"error: cannot reach {server}: {exc}", err=True)
            raise SystemExit(2) from None

    async def _in_process():
        from .service import create_app
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(transport=transport, base_url="http://strangleval.local") as client:
            return await client.request(method, path, params=params, json=json_body)

    return asyncio.run(_in_process())


def _payload(response: httpx.Response) -> dict:
    if response.status_code == 200:
        return response.json()
    if response.status_code == 400:
        body = response.json()
        click.echo(f"error: {body.get('message', 'request failed')}", err=True)
        raise SystemExit(1 if body.get("category") == "input" else 2)
    click.echo(f"error: service returned {response.status_code}: {response.text}", err=True)
    raise SystemExit(2)


def _emit(text: str, out: str | None):
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        click.echo(f"error: cannot write {out}: {exc}", err=True)
        raise SystemExit(1) from None


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Base URL of a running service; default handles requests in process.")
@click.pass_context
def main(ctx, server):
    """Relative-value analytics for delta-symmetric option strangles."""
    ctx.obj = server


@main.command()
@click.option("--delta", type=float, required=True, help="Shared leg delta, in (0, 0.5).")
@click.pass_obj
def bound(server, delta):
    """Print the universal bound on relative value at the given delta."""
    data = _payload(_request(server, "GET", "/bound", params={"delta": delta}))
    click.echo(f"{data['bound']:.6f}")


@main.command()
@click.option("--delta", type=float, required=True, help="Shared leg delta, in (0, 0.5).")
@click.option("--nu", type=float, default=None, help="Volatility horizon sigma*sqrt(days).")
@click.option("--sigma", type=float, default=None, help="Daily volatility (with --days).")
@click.option("--iv", type=float, default=None, help="Annualized volatility, converted as iv/sqrt(365) (with --days).")
@click.option("--days", type=float, default=None, help="Days to expiry.")
@click.pass_obj
def rv(server, delta, nu, sigma, iv, days):
    """Relative value R(delta, nu), its bound, and the between-strikes probability."""
    params = {"delta": delta}
    for name, value in (("nu", nu), ("sigma", sigma), ("iv", iv), ("days", days)):
        if value is not None:
            params[name] = value
    data = _payload(_request(server, "GET", "/rv", params=params))
    click.echo(f"rv = {data['rv']:.6f}")
    click.echo(f"bound = {data['bound']:.6f}")
    click.echo(f"alpha = {data['alpha']:.6f}")


@main.command()
@click.option("--mu", type=float, required=True, help="Current underlying price.")
@click.option("--sigma", type=float, default=None, help="Daily volatility.")
@click.option("--iv", type=float, default=None, help="Annualized volatility, converted as iv/sqrt(365).")
@click.option("--days", type=float, required=True, help="Days to expiry.")
@click.option("--rate", type=float, default=0.0, show_default=True, help="Daily risk-free rate.")
@click.option("--delta", type=float, required=True, help="Shared leg delta, in (0, 0.5).")
@click.pass_obj
def price(server, mu, sigma, iv, days, rate, delta):
    """Strikes, leg prices, total price and relative value of the delta-symmetric strangle."""
    params = {"mu": mu, "days": days, "rate": rate, "delta": delta}
    if sigma is not None:
        params["sigma"] = sigma
    if iv is not None:
        params["iv"] = iv
    data = _payload(_request(server, "GET", "/price", params=params))
    for name in ("k_minus", "k_plus", "price_put", "price_call", "total", "rv"):
        click.echo(f"{name} = {data[name]:.6f}")


@main.command("optimal-delta")
@click.option("--lambda", "lam", type=float, required=True, help="Exit fraction, in (0, 1].")
@click.pass_obj
def optimal_delta_cmd(server, lam):
    """The delta maximizing the expected relative reward of the lambda-exit."""
    data = _payload(_request(server, "GET", "/optimal-delta", params={"lambda": lam}))
    click.echo(f"lambda = {data['lambda']:.6f}")
    click.echo(f"delta_star = {data['delta_star']:.6f}")
    click.echo(f"expected_reward = {data['expected_reward']:.6f}")
    click.echo(f"alpha = {data['success_prob']:.6f}")


@main.command("strategy-table")
@click.option("--lambdas", default=None, metavar="L1,L2,...",
              help="Comma-separated exit fractions; default 0.25,0.40,0.50,0.60,0.75,1.00.")
@click.option("--out", type=click.Path(), default=None, help="Write the CSV here instead of stdout.")
@click.pass_obj
def strategy_table_cmd(server, lambdas, out):
    """Optimal delta, expected reward and win probability per exit fraction, as CSV."""
    params = {} if lambdas is None else {"lambdas": lambdas}
    data = _payload(_request(server, "GET", "/strategy-table", params=params))
    lines = ["lambda,delta_star,expected_reward,success_prob"]
    for row in data["rows"]:
        lines.append(f"{row['lambda']:.2f},{row['delta_star']:.3f},"
                     f"{row['expected_reward']:.3f},{row['success_prob']:.3f}")
    _emit("\n".join(lines) + "\n", out)


@main.command("chain-benchmark")
@click.option("--file", "path", required=True, type=click.Path(), help="Chain CSV to benchmark.")
@click.option("--delta", type=float, default=None,
              help="Target delta for every ticker; default infers each ticker's target from its quoted deltas.")
@click.option("--rate", type=float, default=0.0, show_default=True, help="Daily risk-free rate.")
@click.option("--out", type=click.Path(), default=None, help="Write the CSV here instead of stdout.")
@click.pass_obj
def chain_benchmark(server, path, delta, rate, out):
    """Benchmark the strangles of a chain CSV against the bound, as CSV."""
    try:
        csv_text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        click.echo(f"error: cannot read {path}: {exc}", err=True)
        raise SystemExit(1) from None
    body = {"csv_text": csv_text, "delta": delta, "rate": rate}
    data = _payload(_request(server, "POST", "/chain-benchmark", json_body=body))
    lines = [",".join(REPORT_HEADER)]
    for row in data["rows"]:
        lines.append(",".join([
            row["ticker"],
            f"{row['mu']:.6f}",
            "" if row["iv"] is None else f"{row['iv']:.6f}",
            str(row["days"]),
            f"{row['delta']:.6f}",
            f"{row['k1']:.6f}",
            f"{row['k2']:.6f}",
            f"{row['price']:.6f}",
            f"{row['r_hat']:.6f}",
            f"{row['r_bar']:.6f}",
            row["verdict"],
        ]))
    totals = data["totals"]
    lines.append(f"# total={totals['total']} well_priced={totals['well_priced']} "
                 f"bs_undervalues={totals['bs_undervalues']} below_bound={totals['below_bound']}")
    _emit("\n".join(lines) + "\n", out)


@main.command()
@click.option("--out", type=click.Path(), default=None, help="Write the CSV here instead of stdout.")
@click.option("--curve", type=click.Choice(["bound", "reward"]), default=None,
              help="Emit a single delta curve instead of the full grid.")
@click.option("--lambda", "lam", type=float, default=None, help="Exit fraction for --curve reward.")
@click.pass_obj
def surface(server, out, curve, lam):
    """Full (delta, nu) grid of rv/bound/alpha as CSV, or one curve with --curve."""
    if curve is None:
        if lam is not None:
            raise click.UsageError("--lambda requires --curve reward")
        data = _payload(_request(server, "GET", "/surface"))
        lines = ["delta,nu,rv,bound,alpha"]
        for row in data["rows"]:
            lines.append(f"{row['delta']!r},{row['nu']!r},{row['rv']!r},{row['bound']!r},{row['alpha']!r}")
    else:
        if curve == "reward" and lam is None:
            raise click.UsageError("--curve reward requires --lambda")
        if curve == "bound" and lam is not None:
            raise click.UsageError("--curve bound takes no --lambda")
        params = {"kind": curve}
        if lam is not None:
            params["lambda"] = lam
        data = _payload(_request(server, "GET", "/curve", params=params))
        lines = ["delta,value"]
        for row in data["rows"]:
            lines.append(f"{row['delta']!r},{row['value']!r}")
    _emit("\n".join(lines) + "\n", out)


if __name__ == "__main__":
    main()
