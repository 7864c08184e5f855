import os

# every vanishing_subspace call re-checks matrix * basis == 0
os.environ.setdefault("ORDCURVES_CHECK_EXACT", "1")

import pytest

from ordcurves import kernels
from ordcurves.prng import XorShift64Star


@pytest.fixture
def rng():
    return XorShift64Star(20240601)


@pytest.fixture(params=sorted(kernels.available_backends()))
def backend(request):
    return kernels.available_backends()[request.param]


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
