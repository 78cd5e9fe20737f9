import pytest

from polyloop import kernels

ACCEPTANCE = {}


@pytest.fixture(params=["python", "cython"])
def backend(request):
    """Run a test once per elimination backend, restoring the default afterwards."""
    before = kernels.BACKEND
    try:
        kernels.use(request.param)
    except ImportError:
        pytest.skip("compiled kernels not built")
    yield request.param
    kernels.use(before)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
