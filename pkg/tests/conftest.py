import pytest

from hopfbench import config
from hopfbench.gf import make_field

config.PROGRESS = False


@pytest.fixture
def F2():
    return make_field(2)


@pytest.fixture
def F3():
    return make_field(3)


@pytest.fixture
def F4():
    return make_field(2, 2)


@pytest.fixture
def F5():
    return make_field(5)
