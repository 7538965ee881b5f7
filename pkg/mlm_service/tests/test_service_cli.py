import click
import pytest

from mlm_service.__main__ import (
    DEFAULT_BACKEND,
    DEFAULT_PORT,
    resolve_backend_spec,
    resolve_port,
)


class TestResolvePort:
    def test_flag_wins(self):
        assert resolve_port(9000, {"MLM_SERVICE_PORT": "8100"}) == 9000

    def test_env_var(self):
        assert resolve_port(None, {"MLM_SERVICE_PORT": "8100"}) == 8100

    def test_default(self):
        assert resolve_port(None, {}) == DEFAULT_PORT

    def test_non_integer_rejected(self):
        with pytest.raises(click.ClickException, match="integer"):
            resolve_port(None, {"MLM_SERVICE_PORT": "eighty"})

    def test_out_of_range_rejected(self):
        with pytest.raises(click.ClickException, match="out of range"):
            resolve_port(None, {"MLM_SERVICE_PORT": "70000"})


class TestResolveBackendSpec:
    def test_flag_wins(self):
        assert resolve_backend_spec("bigram:x", {"MLM_SERVICE_BACKEND": "y"}) \
            == "bigram:x"

    def test_env_var(self):
        assert resolve_backend_spec(None, {"MLM_SERVICE_BACKEND": "y"}) == "y"

    def test_default(self):
        assert resolve_backend_spec(None, {}) == DEFAULT_BACKEND == "bigram"
