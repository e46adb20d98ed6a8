import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from idemring import build_matrix_algebra, build_upper_triangular, build_zn, make_field  # noqa: E402


@pytest.fixture(scope="session")
def F2():
    return make_field(2)


@pytest.fixture(scope="session")
def F3():
    return make_field(3)


@pytest.fixture(scope="session")
def F4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def M2F2(F2):
    return build_matrix_algebra(F2, 2)


@pytest.fixture(scope="session")
def M2F3(F3):
    return build_matrix_algebra(F3, 2)


@pytest.fixture(scope="session")
def M2F4(F4):
    return build_matrix_algebra(F4, 2)


@pytest.fixture(scope="session")
def T2F2(F2):
    return build_upper_triangular(F2, 2)


@pytest.fixture(scope="session")
def Z6():
    return build_zn(6)


def mu(R, a, b, c=1):
    """Index of c*E_ab in a matrix-unit algebra (1-based a, b like the labels)."""
    return R.index([c if lab == f"E{a}{b}" else 0 for lab in R.labels])
