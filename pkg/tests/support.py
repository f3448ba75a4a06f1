"""Helpers shared by the test modules."""

import time
from functools import lru_cache

import pytest

from sharpgenus.realization import scan

SCAN_LIMIT = 200

# verdict lines of the acceptance criteria, echoed in the terminal summary
ACCEPTANCE_LINES = pytest.StashKey[list]()


def timed_scan(p_max: int = SCAN_LIMIT, workers: int = 1):
    """Scan once per argument pair; returns (records, seconds)."""
    return _timed_scan(p_max, workers)


@lru_cache(maxsize=None)
def _timed_scan(p_max: int, workers: int):
    start = time.perf_counter()
    records = scan(p_max, workers=workers)
    return records, time.perf_counter() - start
