import pytest

from sgq import SuperRing


@pytest.fixture
def grassmann2():
    """Lambda[t1, t2]: two odd generators, no even ones."""
    return SuperRing([], ["t1", "t2"])


@pytest.fixture
def grassmann4():
    return SuperRing([], ["t1", "t2", "t3", "t4"])


@pytest.fixture
def mixed_ring():
    """Q(i)[x] tensor Lambda[th1, th2]."""
    return SuperRing(["x"], ["th1", "th2"])
