import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make naive.py importable

from ssn.families import builtin_family
from ssn.sigma import SigmaPartition


@pytest.fixture(scope="session")
def s3():
    return builtin_family("symmetric(3)")


@pytest.fixture(scope="session")
def s4():
    return builtin_family("symmetric(4)")


@pytest.fixture(scope="session")
def a4():
    return builtin_family("alternating(4)")


@pytest.fixture(scope="session")
def a5():
    return builtin_family("alternating(5)")


@pytest.fixture(scope="session")
def w23():
    return builtin_family("wreath_cyclic(2,3)")


@pytest.fixture(scope="session")
def split23():
    return SigmaPartition.of({2}, {3})


@pytest.fixture(scope="session")
def merged23():
    return SigmaPartition.of({2, 3})


@pytest.fixture(scope="session")
def degenerate():
    return SigmaPartition.of()
