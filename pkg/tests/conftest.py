import pytest

from sl2trunc import _kernels
from sl2trunc.rootsys import AlgebraSpec, build_root_system
from sl2trunc.sl2pair import principal_characteristic, solve_h

_ACCEPTANCE: list[tuple[str, str]] = []


@pytest.fixture(params=_kernels.BACKENDS)
def backend(request):
    return request.param


@pytest.fixture
def rs_of():
    return lambda text: build_root_system(AlgebraSpec.parse(text))


@pytest.fixture
def principal_h():
    def make(rs):
        return solve_h(rs, principal_characteristic(rs))
    return make


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.get_closest_marker("acceptance"):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _ACCEPTANCE.append((doc, "PASS" if rep.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for doc, status in _ACCEPTANCE:
        terminalreporter.write_line(f"{status}  {doc}")
