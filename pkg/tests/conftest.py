import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from signed_young.partitions import Partition  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def pytest_addoption(parser):
    parser.addoption("--max-dim", type=int, default=1500, help="dimension budget; the stretch criterion needs >= 700")


@pytest.fixture(scope="session")
def max_dim(request):
    return request.config.getoption("--max-dim")


def partitions(max_part=6, max_len=6):
    return st.lists(st.integers(1, max_part), max_size=max_len).map(lambda xs: Partition(sorted(xs, reverse=True)))


primes = st.sampled_from([2, 3, 5, 7])
odd_primes = st.sampled_from([3, 5, 7])


_CRITERIA: list[str] = []


def record_criterion(line: str) -> None:
    _CRITERIA.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
