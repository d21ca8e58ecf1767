import importlib

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def _backends():
    out = [pytest.param(importlib.import_module("paretofit._pure"), id="python")]
    try:
        out.append(pytest.param(importlib.import_module("paretofit._kernels"), id="cython"))
    except ImportError:
        out.append(pytest.param(None, id="cython", marks=pytest.mark.skip("extension not built")))
    return out


@pytest.fixture(scope="module", params=_backends())
def backend(request):
    """Each kernel implementation in turn."""
    return request.param


ACCEPTANCE = []


@pytest.fixture
def record():
    """Log one acceptance criterion outcome and fail the test if it missed."""

    def _record(name, ok, detail):
        ACCEPTANCE.append((name, bool(ok), detail))
        print(f"{name} {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, f"{name}: {detail}"

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in sorted(ACCEPTANCE, key=lambda r: int(r[0][1:])):
        terminalreporter.write_line(f"{name} {'PASS' if ok else 'FAIL'}: {detail}")
