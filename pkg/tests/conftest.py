from pathlib import Path

import pytest

from oggkit.enumeration import EnumBounds, enumerate_structures

FIXTURE_DIR = Path(__file__).resolve().parents[1] / "fixtures"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"

GRID3 = ("0", "1/2", "1")


@pytest.fixture(scope="session")
def corpus_n2():
    """All valid n=2, k=1 structures over every labeled order (28 of them)."""
    return list(enumerate_structures(EnumBounds(2, 1, order_mode="all")))


@pytest.fixture(scope="session")
def corpus_n2_trivial():
    return list(enumerate_structures(EnumBounds(2, 1, order_mode="trivial")))
