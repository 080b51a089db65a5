import pytest
from hypothesis import HealthCheck, settings

from schurkit.enumeration import all_schur_rings
from schurkit.groups import AbelianGroup
from schurkit.schur import Partition, verify_schur

settings.register_profile(
    "schurkit",
    derandomize=True,
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("schurkit")

Z12 = AbelianGroup.cyclic(12)

S_CLASSES = [[0], [6], [4, 8], [2, 10], [1, 5, 9], [3, 7, 11]]
T_CLASSES = [[0], [6], [4, 10], [2, 8], [1, 3, 5, 7, 9, 11]]
U_CLASSES = [[0], [4], [8], [2, 6, 10], [1, 5, 9], [3, 7, 11]]


@pytest.fixture(scope="session")
def z12():
    return Z12


@pytest.fixture(scope="session")
def ring_S():
    return verify_schur(Partition.from_indices(Z12, S_CLASSES))


@pytest.fixture(scope="session")
def ring_T():
    return verify_schur(Partition.from_indices(Z12, T_CLASSES))


@pytest.fixture(scope="session")
def ring_U():
    return verify_schur(Partition.from_indices(Z12, U_CLASSES))


_ENUM: dict = {}


def enumerated(factors):
    """Enumeration results shared across test modules."""
    if factors not in _ENUM:
        _ENUM[factors] = all_schur_rings(AbelianGroup(factors))
    return _ENUM[factors]


@pytest.fixture(scope="session")
def cyclic_catalog():
    return {n: enumerated((n,)).rings for n in (4, 6, 8, 12)}


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[key])
