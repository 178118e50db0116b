"""
Integration tests for the exhaustive agreement sweeps.
"""

import pytest

from core.catdual import enumerate_categories
from core.config import DualityConfig
from core.exceptions import DualityError
from core.lattice import enumerate_homs, from_poset
from core.order import enumerate_posets_up_to
from core.reglang import LANGUAGE_CORPUS
from core.residuation import enumerate_residuation_algebras
from core.sweeps import (
    SUITES,
    run_all,
    sweep_birkhoff,
    sweep_catdual,
    sweep_reglang,
    sweep_residuation,
)


@pytest.mark.integration
class TestSweepsIntegration:
    """Every suite at a small bound must pass with no failures."""

    @pytest.mark.parametrize("name", list(SUITES))
    def test_suite_passes(self, name):
        """Test one suite at size 2."""
        (result,) = run_all(DualityConfig(max_size=2, sample_size=20), [name])
        assert result.name == name
        assert result.failures == []
        assert result.ok
        assert result.checked > 0

    def test_suite_order_is_fixed(self):
        """Test that results follow the registry order, not the request order."""
        results = run_all(DualityConfig(max_size=1), ["tensor", "birkhoff"])
        assert [r.name for r in results] == ["birkhoff", "tensor"]

    def test_unknown_suite(self):
        """Test that unknown suite names are rejected before anything runs."""
        with pytest.raises(DualityError) as exc:
            run_all(DualityConfig(), ["tensor", "nonsense"])
        assert exc.value.error_code == "SWEEP_UNKNOWN_SUITE"

    def test_reglang_checks_whole_corpus(self):
        """Test that every corpus language gets a word-level check."""
        result = sweep_reglang(DualityConfig(word_bound=5))
        assert result.ok
        assert result.checked >= len(LANGUAGE_CORPUS)

    def test_birkhoff_canonicalizes_every_lattice_up_to_eight(self):
        """Test that all 36 distributive lattices with at most 8 elements are rebuilt."""
        result = sweep_birkhoff(DualityConfig(max_size=0))
        assert result.ok
        assert result.checked == 36

    def test_residuation_checks_pure_morphisms(self):
        """Test that every lattice hom between small unital algebras is classified."""
        config = DualityConfig(max_size=2)
        algebras = [
            r
            for base in enumerate_posets_up_to(2)
            for r in enumerate_residuation_algebras(from_poset(base))
        ]
        unital = [r for r in algebras if r.unit is not None]
        homs = sum(len(list(enumerate_homs(r.lattice, s.lattice))) for r in unital for s in unital)
        assert len(unital) == 14
        assert homs == 564
        result = sweep_residuation(config)
        assert result.ok
        assert result.checked == len(algebras) + homs

    @pytest.mark.slow
    def test_functor_correspondence_up_to_four_morphisms(self):
        """Test that table maps between categories with 4 morphisms are swept."""
        assert any(c.n_morphisms == 4 for c in enumerate_categories())
        result = sweep_catdual(DualityConfig(max_size=0))
        assert result.ok
        assert result.checked > 748_253

    def test_report_without_timings(self):
        """Test that timings are dropped on request."""
        (result,) = run_all(DualityConfig(max_size=1), ["birkhoff"])
        assert "seconds" not in result.to_dict(timings=False)
        assert result.to_dict()["ok"] is True


@pytest.mark.integration
@pytest.mark.slow
def test_all_suites_at_default_bound():
    """Test every suite at the configured default size."""
    results = run_all(DualityConfig())
    assert [r.name for r in results] == list(SUITES)
    assert all(r.ok for r in results), [r.to_dict() for r in results if not r.ok]
