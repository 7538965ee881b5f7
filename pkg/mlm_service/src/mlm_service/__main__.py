"""Command-line entry point: load a backend, then serve over HTTP.

The listen port comes from --port when given, else the
MLM_SERVICE_PORT environment variable, else 8023; the backend spec
likewise falls back to MLM_SERVICE_BACKEND, else the bundled bigram
model.
"""

from __future__ import annotations

import os
from typing import Mapping

import click

DEFAULT_PORT = 8023
DEFAULT_BACKEND = "bigram"


def resolve_port(flag: int | None, env: Mapping[str, str]) -> int:
    if flag is not None:
        return flag
    raw = env.get("MLM_SERVICE_PORT")
    if raw is None:
        return DEFAULT_PORT
    try:
        port = int(raw)
    except ValueError:
        raise click.ClickException(
            f"MLM_SERVICE_PORT must be an integer, got {raw!r}"
        ) from None
    if not 0 <= port <= 65535:
        raise click.ClickException(f"MLM_SERVICE_PORT out of range: {port}")
    return port


def resolve_backend_spec(flag: str | None, env: Mapping[str, str]) -> str:
    return flag or env.get("MLM_SERVICE_BACKEND") or DEFAULT_BACKEND


@click.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=None,
              help=f"Listen port [default: $MLM_SERVICE_PORT or {DEFAULT_PORT}].")
@click.option("--backend", "backend_spec", default=None,
              help="Backend spec: 'bigram', 'bigram:<corpus>' or "
                   "'transformers:<checkpoint>' "
                   "[default: $MLM_SERVICE_BACKEND or bigram].")
def main(host: str, port: int | None, backend_spec: str | None) -> None:
    """Serve masked-token candidates over HTTP."""
    import uvicorn

    from .app import create_app
    from .backends import load_backend

    spec = resolve_backend_spec(backend_spec, os.environ)
    app = create_app(backend_factory=lambda: load_backend(spec))
    uvicorn.run(app, host=host, port=resolve_port(port, os.environ))


if __name__ == "__main__":
    main()
