"""
Test fixtures for the finite-duality test suite.
"""

import json

import pytest
from click.testing import CliRunner

from core.lattice import from_poset
from core.order import antichain, chain


@pytest.fixture
def three_chain():
    """Three-element chain lattice over the two-element chain of primes."""
    return from_poset(chain(2))


@pytest.fixture
def four_boolean():
    """Four-element Boolean lattice over two incomparable primes."""
    return from_poset(antichain(2))


@pytest.fixture
def runner():
    """CLI runner with INFO logs silenced so stdout holds only the report."""
    return CliRunner(env={"FINITE_DUALITY_LOG_LEVEL": "WARNING"})


@pytest.fixture
def structure_file(tmp_path):
    """Write a structure document to a JSON file and return its path."""
    counter = iter(range(1000))

    def write(document, name=None):
        path = tmp_path / (name or f"structure-{next(counter)}.json")
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)

    return write


@pytest.fixture
def sample_structures():
    """One small document per kind the CLI reads."""
    chain_poset = {"kind": "poset", "n": 2, "leq": [[0, 1]]}
    z2 = {"kind": "monoid", "n": 2, "mult": [[0, 1], [1, 0]], "unit": 0}
    trivial = {"kind": "monoid", "n": 1, "mult": [[0]], "unit": 0}
    return {
        "poset": chain_poset,
        "lattice": {"kind": "lattice", "base": chain_poset},
        "abstract-lattice": {"kind": "abstract-lattice", "n": 3, "leq": [[0, 1], [1, 2]]},
        "operator": {
            "kind": "operator",
            "base": chain_poset,
            "k": 1,
            "n": 1,
            "table": [
                {"input": [0], "output": [[0]]},
                {"input": [1], "output": [[1]]},
            ],
        },
        "monoid": z2,
        "monoid-hom": {"kind": "monoid-hom", "dom": z2, "cod": trivial, "table": [0, 0]},
        "dfa": {
            "kind": "dfa",
            "states": 2,
            "alphabet": "a",
            "delta": [[1], [0]],
            "initial": 0,
            "accepting": [0],
        },
        "category": {
            "kind": "category",
            "objects": ["X", "Y"],
            "morphisms": [
                {"id": "1X", "dom": "X", "cod": "X"},
                {"id": "1Y", "dom": "Y", "cod": "Y"},
                {"id": "f", "dom": "X", "cod": "Y"},
            ],
            "identities": ["1X", "1Y"],
        },
        "relmon": {
            "kind": "relmon",
            "n": 2,
            "comp": [[[0], [1]], [[1], []]],
            "E": [0],
        },
    }
