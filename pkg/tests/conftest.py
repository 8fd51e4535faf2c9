import json
from pathlib import Path

import pytest

from algebra.finite_field import build_field
from constructions.functions import lin_function, trace_function

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name):
    return json.loads((FIXTURES / name).read_text())


@pytest.fixture(scope="session")
def gf9():
    """GF(3^2) over GF(3)."""
    return build_field(3, 1, 2)


@pytest.fixture(scope="session")
def gf27():
    return build_field(3, 1, 3)


@pytest.fixture(scope="session")
def gf25():
    return build_field(5, 1, 2)


@pytest.fixture(scope="session")
def gf81_over_9():
    """GF(3^4) over GF(9)."""
    return build_field(3, 2, 2)


@pytest.fixture(scope="session")
def trace9(gf9):
    return trace_function(gf9)


@pytest.fixture(scope="session")
def trace27(gf27):
    return trace_function(gf27)


@pytest.fixture(scope="session")
def lin27(gf27):
    return lin_function(gf27)


@pytest.fixture(scope="session")
def gds_oracle():
    return load_fixture("gds_oracle_q3_n2.json")


@pytest.fixture(scope="session")
def hg_pinned():
    return load_fixture("hg_readings.json")
