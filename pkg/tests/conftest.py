import pytest

from fibword.claims import run_all_claims


@pytest.fixture(scope="session")
def all_claims():
    """One full registry run at default budgets, shared across tests."""
    return run_all_claims()
