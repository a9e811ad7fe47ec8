"""Shared fixtures and the per-criterion acceptance summary."""

from collections import defaultdict

import numpy as np
import pytest

from gsgkit.spectra import SpectralRatios

_CRITERIA: dict[int, list[bool]] = defaultdict(list)
_TITLES: dict[int, str] = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    num = marker.args[0]
    _TITLES.setdefault(num, marker.kwargs.get("title", ""))
    _CRITERIA[num].append(call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        status = "PASS" if all(_CRITERIA[num]) else "FAIL"
        terminalreporter.write_line(f"criterion {num:>2}: {status}  {_TITLES[num]}")


def assert_identity(r: SpectralRatios) -> None:
    """w2 = 1 + 1/w1 whenever both ratios exist; length = gap + bulk."""
    assert r.length == r.gap + r.bulk
    if r.w1 is not None and r.w2 is not None and r.w1 > 0:
        assert abs(r.w2 - (1.0 + 1.0 / r.w1)) <= 1e-9 * max(1.0, r.w2)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
