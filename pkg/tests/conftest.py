import pytest

from displaycalc import muddy


@pytest.fixture(scope="session")
def deak():
    return muddy.load_deak()
