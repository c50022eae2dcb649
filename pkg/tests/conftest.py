"""Shared fixtures: catalog records and an in-process CLI runner."""

from __future__ import annotations

import io
import time
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import dataclass

import pytest

from delpezzo import catalog, cli


@dataclass(frozen=True)
class CliRun:
    code: int
    stdout: str
    stderr: str
    elapsed: float


@pytest.fixture
def run_cli():
    """Run `delpezzo` subcommands in-process (process startup excluded)."""

    def run(*argv: str) -> CliRun:
        out, err = io.StringIO(), io.StringIO()
        start = time.perf_counter()
        with redirect_stdout(out), redirect_stderr(err):
            code = cli.main(list(argv))
        return CliRun(code, out.getvalue(), err.getvalue(), time.perf_counter() - start)

    return run


@pytest.fixture(scope="session")
def s3_work() -> catalog.SurfaceRecord:
    return catalog.get("q-v-work")


@pytest.fixture(scope="session")
def s3_table() -> catalog.SurfaceRecord:
    return catalog.get("q-v")


@pytest.fixture(scope="session")
def cayley() -> catalog.SurfaceRecord:
    return catalog.get("c-cayley")


@pytest.fixture(scope="session")
def s7() -> catalog.SurfaceRecord:
    return catalog.get("c-e6")
