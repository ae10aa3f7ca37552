import pytest

from rulebots.rules import load_stack
from rulebots.sim import load_map


@pytest.fixture(scope="session")
def warehouse():
    return load_map("warehouse")


@pytest.fixture(scope="session")
def airplane():
    return load_map("airplane")


@pytest.fixture(scope="session")
def baseline_stack():
    return load_stack(["baseline"])


@pytest.fixture(scope="session")
def full_stack():
    return load_stack(["baseline", "cs_rules", "warehouse_tactics"])
