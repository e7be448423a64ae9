import pytest
from hypothesis import strategies as st

from monmap.maps import NonOrientedMap, Pairing, load_fixture


@pytest.fixture(scope="session")
def klein():
    return load_fixture("klein")


@pytest.fixture(scope="session")
def projective():
    return load_fixture("projective")


def pairing_strategy(n):
    return st.permutations(list(range(1, 2 * n + 1))).map(
        lambda labs: Pairing(
            (labs[i], labs[i + 1]) for i in range(0, 2 * n, 2)))


def map_strategy(min_n=1, max_n=3):
    def build(n):
        return st.tuples(pairing_strategy(n), pairing_strategy(n),
                         pairing_strategy(n)).map(
            lambda t: NonOrientedMap(*t))

    return st.integers(min_n, max_n).flatmap(build)
