import pytest

from eigencone.classify import LrClassifier


@pytest.fixture(scope="session")
def classifier() -> LrClassifier:
    """One warm classifier shared across the whole run."""
    return LrClassifier()
