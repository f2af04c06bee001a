import pytest

from sympmatroid.greedy import BasisFamily

fs = frozenset


@pytest.fixture
def paper_matroid():
    """The worked example over E±3: {1 -3; 2 -3; -1 2; -1 3}."""
    return BasisFamily(3, [fs({1, -3}), fs({2, -3}), fs({-1, 2}), fs({-1, 3})])


@pytest.fixture
def two_bases():
    """The two-member family used for the greedy trace example."""
    return BasisFamily(3, [fs({-2, -1, 3}), fs({-2, 1, 3})])
