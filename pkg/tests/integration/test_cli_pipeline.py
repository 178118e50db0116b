"""
Integration tests chaining CLI commands through their JSON reports.
"""

import json

import pytest

from core.cli_api import EXIT_OK, cli


def dualize(runner, path):
    result = runner.invoke(cli, ["dualize", "--in", path])
    assert result.exit_code == EXIT_OK, result.output
    return json.loads(result.output)["result"]


@pytest.mark.integration
class TestPipeline:
    """Feed dual structures back into the CLI."""

    def test_category_through_relmon(self, runner, structure_file, sample_structures):
        first = dualize(runner, structure_file(sample_structures["category"]))
        back = dualize(runner, structure_file(first["relmon"]))
        category = back["category"]
        assert category["kind"] == "category"
        assert len(category["objects"]) == 2
        assert len(category["morphisms"]) == 3
        assert len(category["identities"]) == 2
        assert len(category["compose"]) == 4

    def test_category_report_is_a_fixed_point(self, runner, structure_file, sample_structures):
        first = dualize(runner, structure_file(sample_structures["category"]))
        category = dualize(runner, structure_file(first["relmon"]))["category"]
        again = dualize(runner, structure_file(category))
        assert again["relmon"]["comp"] == first["relmon"]["comp"]
        assert again["flags"] == first["flags"]

    def test_synmon_dfa_feeds_dualize(self, runner, structure_file):
        result = runner.invoke(cli, ["synmon", "--pattern", "(ab)*"])
        assert result.exit_code == EXIT_OK
        minimal = json.loads(result.output)["result"]["monoid"]["minimal_dfa"]
        report = dualize(runner, structure_file(minimal))
        assert report["syntactic_monoid"]["size"] == 6

    def test_operator_relation_operator(self, runner, structure_file, sample_structures):
        first = dualize(runner, structure_file(sample_structures["operator"]))
        operator = dualize(runner, structure_file(first["relation"]))["operator"]
        again = dualize(runner, structure_file(operator))
        assert again["relation"] == first["relation"]
