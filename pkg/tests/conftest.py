import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sintdyn.ffpoly import PrimeField


@pytest.fixture(scope="session")
def F2():
    return PrimeField(2)


@pytest.fixture(scope="session")
def F3():
    return PrimeField(3)


@pytest.fixture(scope="session")
def F5():
    return PrimeField(5)
