import pytest

from twostack.counting import brute_force_w


@pytest.fixture(scope="session")
def brute_rows():
    """Brute-force run tables for n = 1..9, computed once per session."""
    return {n: brute_force_w(n) for n in range(1, 10)}
