"""Run the HTTP service: python -m strangleval.service [--host H] [--port P]."""
import click
import uvicorn

from . import create_app


@click.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def main(host: str, port: int):
    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
