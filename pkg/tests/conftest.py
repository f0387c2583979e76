from __future__ import annotations

import contextlib
import io

import pytest

from qforms import CalculusConfig, Q
from qforms.cli import main


@pytest.fixture
def generic_cfg() -> CalculusConfig:
    return CalculusConfig(Q)


@pytest.fixture
def anyonic_cfg() -> CalculusConfig:
    return CalculusConfig(Q, anyonic=True)


@pytest.fixture
def run_cli():
    """Invoke the CLI in process, returning (exit code, captured stdout)."""

    def run(argv: list[str]) -> tuple[int, str]:
        buffer = io.StringIO()
        with contextlib.redirect_stdout(buffer):
            code = main(argv)
        return code, buffer.getvalue()

    return run
