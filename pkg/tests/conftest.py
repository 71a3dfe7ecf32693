import json
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def derived():
    """Values frozen from tests/oracles/build_fixtures.py (sympy-only oracle)."""
    return json.loads((FIXTURES / "derived.json").read_text())
