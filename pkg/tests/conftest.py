import pytest
from hypothesis import HealthCheck, settings

from hitcalc.hit import cohit_basis

settings.register_profile("suite", max_examples=80, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("suite")

W1, W2, W3, W4 = (3, 1, 1, 1, 1), (3, 1, 1, 3), (3, 3, 2, 2), (3, 3, 4, 1)


@pytest.fixture(scope="session")
def qp5_33():
    return cohit_basis(5, 33)


@pytest.fixture(scope="session")
def qp5_33_zero():
    return cohit_basis(5, 33, "zero")


@pytest.fixture(scope="session")
def qp5_33_positive():
    return cohit_basis(5, 33, "positive")


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(test_acceptance.RESULTS):
        terminalreporter.write_line(test_acceptance.RESULTS[k])
