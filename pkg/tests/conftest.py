import pytest
from hypothesis import HealthCheck, settings

from qtorsion.exactmath import modp

settings.register_profile(
    "qtorsion",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much, HealthCheck.data_too_large],
    derandomize=True,
)
settings.load_profile("qtorsion")

BACKENDS = ["python"] + (["compiled"] if modp.compiled_available() else [])

# (criterion number, passed, detail) lines collected by the acceptance suite
ACCEPTANCE: list[tuple[int, bool, str]] = []


@pytest.fixture(params=BACKENDS)
def backend(request):
    before = modp.BACKEND
    modp.use_backend(request.param)
    yield request.param
    modp.use_backend(before)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n, ok, detail in sorted(ACCEPTANCE, key=lambda t: t[0]):
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
