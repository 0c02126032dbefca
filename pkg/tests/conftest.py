from __future__ import annotations

import time

import pytest

from sring import run_verification, std_config


@pytest.fixture(scope="session")
def std_verification():
    """One shared std-corpus verification run: (report, elapsed seconds)."""
    start = time.perf_counter()
    report = run_verification(std_config(), corpus_label="std")
    return report, time.perf_counter() - start
