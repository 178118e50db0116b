"""
Unit tests for residuation algebras, their classification, ideals and morphisms.
"""

import pytest

from core.exceptions import ResiduationError, ResiduationPropertyError
from core.lattice import TWO, LatticeHom, from_poset
from core.order import antichain, chain
from core.residuation import (
    ResiduationAlgebra,
    boolean_negation_algebra,
    check_corelational,
    check_pure_morphism,
    classify,
    enumerate_derivation_algebras,
    enumerate_residuation_algebras,
    equation_failure,
    forth_back_failure,
    from_multiplication,
    gamma_from_residuals,
    heyting_algebra,
    ideal_algebra,
    is_coalgebra_morphism,
    is_corelational,
    mu_from_residuals,
    multiplication_operator,
    open_failure,
    residuals_from_gamma,
    residuation_ideal,
)


@pytest.fixture
def three_chain():
    return from_poset(chain(2))


@pytest.fixture
def four_boolean():
    return from_poset(antichain(2))


class TestConstruction:
    """Test validation of residuals and units."""

    def test_heyting_unit_is_top(self, three_chain):
        r = heyting_algebra(three_chain)
        assert r.unit == three_chain.top
        assert r.is_prime_unital

    def test_multiplication_unit(self):
        assert from_multiplication(TWO, [1]).unit == 1
        assert from_multiplication(TWO, [0]).unit is None

    def test_bad_unit(self):
        with pytest.raises(ResiduationPropertyError) as exc:
            from_multiplication(TWO, [1], unit=0)
        assert exc.value.error_code == "RESIDUATION_BAD_UNIT"

    def test_residual_must_keep_top(self, three_chain):
        with pytest.raises(ResiduationPropertyError) as exc:
            ResiduationAlgebra(three_chain, lambda x, z: 0, lambda z, y: three_chain.top)
        assert exc.value.error_code == "RESIDUAL_NOT_MEET_PRESERVING"

    def test_residuation_property(self, three_chain):
        with pytest.raises(ResiduationPropertyError) as exc:
            ResiduationAlgebra(three_chain, lambda x, z: z, lambda z, y: three_chain.top)
        assert exc.value.error_code == "RESIDUATION_PROPERTY"

    def test_negation_needs_boolean(self, three_chain, four_boolean):
        with pytest.raises(ResiduationPropertyError) as exc:
            boolean_negation_algebra(three_chain)
        assert exc.value.error_code == "RESIDUATION_NOT_BOOLEAN"
        r = boolean_negation_algebra(four_boolean)
        assert r.ldiv(0b01, 0b00) == 0b10

    def test_equality_by_tables(self, three_chain):
        assert heyting_algebra(three_chain) == heyting_algebra(three_chain)
        assert heyting_algebra(three_chain) != from_multiplication(three_chain, [0, 0, 0, 0])


class TestMultiplication:
    """Test mu and gamma recovered from the residuals."""

    def test_heyting_mu_is_meet(self, three_chain):
        r = heyting_algebra(three_chain)
        assert r.mu_prime(0, 1) == three_chain.primes[0]
        assert r.mu_prime(1, 1) == three_chain.primes[1]
        assert r.mu(three_chain.top, 0b01) == 0b01

    def test_recovered_table_matches_given(self, three_chain):
        for r in enumerate_residuation_algebras(three_chain):
            op = multiplication_operator(r)
            recovered = ResiduationAlgebra(three_chain, r.ldiv, r.rdiv)
            n = three_chain.base.n
            assert all(
                recovered.mu_prime(p, q) == op.table[p * n + q]
                for p in range(n)
                for q in range(n)
            )

    def test_gamma_round_trip(self, three_chain):
        for r in enumerate_residuation_algebras(three_chain):
            assert residuals_from_gamma(gamma_from_residuals(r)) == r

    def test_mu_left_adjoint_to_gamma(self, four_boolean):
        r = heyting_algebra(four_boolean)
        mu = mu_from_residuals(r)
        assert mu(mu.dom.top) == four_boolean.top

    def test_counit_unit(self, three_chain):
        c = gamma_from_residuals(heyting_algebra(three_chain))
        assert c.counit_unit() == three_chain.top
        assert c(three_chain.top) == c.square.top

    def test_residuation_algebra_count(self):
        # monotone maps from the one-point square to the two-element chain
        assert len(list(enumerate_residuation_algebras(TWO))) == 2


class TestClassification:
    """Test structural flags."""

    def test_heyting_chain_is_derivation(self, three_chain):
        flags = classify(heyting_algebra(three_chain))
        assert flags.to_dict() == {
            "pure": True,
            "associative": True,
            "unital": True,
            "prime_unital": True,
            "derivation": True,
            "join_preserving_at_primes": True,
        }

    def test_heyting_boolean_is_not_pure(self, four_boolean):
        flags = classify(heyting_algebra(four_boolean))
        assert not flags.pure
        assert flags.unital
        assert not flags.prime_unital
        assert not flags.derivation

    def test_derivation_algebras_on_two_atoms(self, four_boolean):
        # one per monoid structure on a labelled two-element set
        assert len(list(enumerate_derivation_algebras(four_boolean))) == 4

    def test_derivation_algebra_on_two(self):
        algebras = list(enumerate_derivation_algebras(TWO))
        assert len(algebras) == 1
        assert algebras[0].unit == 1


class TestIdeals:
    """Test residuation ideals."""

    def test_bounds_are_closed_in_chain(self, three_chain):
        r = heyting_algebra(three_chain)
        assert residuation_ideal(r, []) == (0, three_chain.top)

    def test_atom_generates_everything(self, four_boolean):
        r = heyting_algebra(four_boolean)
        assert residuation_ideal(r, [0b01]) == four_boolean.elements

    def test_complemented_needs_boolean(self, three_chain):
        with pytest.raises(ResiduationPropertyError):
            residuation_ideal(heyting_algebra(three_chain), [], complemented=True)

    def test_ideal_algebra_of_bounds(self, three_chain):
        r = heyting_algebra(three_chain)
        algebra, embedding = ideal_algebra(r, (0, three_chain.top))
        assert algebra.lattice.size == 2
        assert embedding == (0, three_chain.top)


class TestMorphisms:
    """Test pure and corelational morphisms."""

    def test_identity_is_pure_morphism(self, three_chain):
        r = heyting_algebra(three_chain)
        f = LatticeHom.identity(three_chain)
        assert check_pure_morphism(f, r, r)
        assert equation_failure(f, r, r) is None

    def test_hom_moving_the_unit_is_not_pure(self, three_chain):
        r = heyting_algebra(three_chain)
        middle, top = three_chain.elements[1], three_chain.top
        f = LatticeHom(three_chain, three_chain, (0, top, top))
        assert not check_pure_morphism(f, r, r)
        assert not is_coalgebra_morphism(f, r, r)
        assert open_failure(f, r, r) == ("unit", (top,))
        assert forth_back_failure(f, r, r) == ("unit", (middle,))
        assert equation_failure(f, r, r) is None

    def test_identity_is_corelational(self, three_chain):
        r = heyting_algebra(three_chain)
        f = LatticeHom.identity(three_chain)
        assert is_corelational(f, r, r)
        assert check_corelational(f, r, r)

    def test_carrier_mismatch(self, three_chain, four_boolean):
        f = LatticeHom.identity(three_chain)
        with pytest.raises(ResiduationError) as exc:
            equation_failure(f, heyting_algebra(four_boolean), heyting_algebra(three_chain))
        assert exc.value.error_code == "MORPHISM_CARRIER_MISMATCH"

    def test_needs_units(self):
        r = from_multiplication(TWO, [0])
        with pytest.raises(ResiduationError) as exc:
            is_corelational(LatticeHom.identity(TWO), r, r)
        assert exc.value.error_code == "RESIDUATION_NOT_UNITAL"
