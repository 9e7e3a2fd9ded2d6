import pytest
from hypothesis import settings
from hypothesis import strategies as st

from quatlattice.square_complex import build_squares
from quatlattice.words import Word

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@pytest.fixture(scope="session")
def g35():
    return build_squares(3, 5)


@pytest.fixture(scope="session")
def g517():
    return build_squares(5, 17)


@pytest.fixture(scope="session")
def g57():
    return build_squares(5, 7)


small = st.integers(min_value=-30, max_value=30)
int_quats = st.tuples(small, small, small, small)
nonzero_quats = int_quats.filter(lambda x: any(x))


def words_over(pres, max_size=12):
    return st.lists(st.integers(0, pres.num_letters - 1), max_size=max_size).map(
        lambda letters: Word(tuple(letters), pres))


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[number])
