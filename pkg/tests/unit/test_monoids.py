"""
Unit tests for ordered monoids and their duality with derivation algebras.
"""

import pytest

from core.exceptions import (
    InvalidMonoidError,
    InvalidRelationalMorphismError,
    NotADerivationAlgebraError,
    NotAHomomorphismError,
)
from core.lattice import LatticeHom, from_poset
from core.monoids import (
    MonoidHom,
    OrderedMonoid,
    RelationalMonoidMorphism,
    check_relational_morphism,
    compose_relational_morphisms,
    cyclic_group,
    derivation_to_monoid,
    dualize_monoid_hom,
    dualize_relational_morphism,
    enumerate_monoid_homs,
    enumerate_ordered_monoids,
    find_isomorphism,
    free_idempotent_pair,
    identity_relational,
    inverse_relation,
    is_isomorphic,
    monoid_to_derivation,
    relabel_monoid,
    relational_failure,
    relational_graph,
    trivial_monoid,
)
from core.order import OrderRelation, antichain, chain
from core.residuation import classify, heyting_algebra


class TestOrderedMonoid:
    """Test validation of multiplication tables."""

    def test_cyclic_group(self):
        z3 = cyclic_group(3)
        assert z3(1, 2) == 0
        assert z3.is_commutative
        assert z3.multiply_sets(0b010, 0b110) == 0b101

    def test_bad_unit(self):
        with pytest.raises(InvalidMonoidError) as exc:
            OrderedMonoid.discrete([[0, 1], [1, 1]], unit=1)
        assert exc.value.error_code == "MONOID_BAD_UNIT"
        assert exc.value.details["witness"] == 0

    def test_not_associative(self):
        with pytest.raises(InvalidMonoidError) as exc:
            OrderedMonoid.discrete([[0, 1, 2], [1, 2, 1], [2, 1, 1]])
        assert exc.value.error_code == "MONOID_NOT_ASSOCIATIVE"

    def test_not_monotone(self):
        with pytest.raises(InvalidMonoidError) as exc:
            OrderedMonoid(chain(2), ((0, 1), (1, 0)), 0)
        assert exc.value.error_code == "MONOID_NOT_MONOTONE"
        assert exc.value.details["witness"] == [0, 1, 1]

    def test_bad_table_shape(self):
        with pytest.raises(InvalidMonoidError) as exc:
            OrderedMonoid.discrete([[0, 1], [1]])
        assert exc.value.error_code == "MONOID_BAD_TABLE"

    def test_idempotent_pair_orders_either_way(self):
        # a above the unit, then a below it
        assert OrderedMonoid(chain(2), ((0, 1), (1, 1)), 0).n == 2
        assert OrderedMonoid(chain(2), ((0, 0), (0, 1)), 1).n == 2


class TestEnumeration:
    """Test enumeration up to isomorphism."""

    def test_discrete_counts(self):
        assert len(enumerate_ordered_monoids(1, discrete_only=True)) == 1
        assert len(enumerate_ordered_monoids(2, discrete_only=True)) == 2
        assert len(enumerate_ordered_monoids(3, discrete_only=True)) == 7

    def test_ordered_count_of_size_two(self):
        # Z/2 only on the antichain, {1, a} on three orders
        assert len(enumerate_ordered_monoids(2)) == 4

    def test_empty(self):
        assert enumerate_ordered_monoids(0) == ()

    def test_isomorphism(self):
        z3 = cyclic_group(3)
        other = relabel_monoid(z3, (0, 2, 1))
        assert is_isomorphic(z3, other)
        perm = find_isomorphism(z3, other)
        assert perm is not None
        assert relabel_monoid(z3, perm) == other
        assert not is_isomorphic(cyclic_group(2), free_idempotent_pair())
        assert find_isomorphism(cyclic_group(2), cyclic_group(3)) is None


class TestMonoidHom:
    """Test homomorphisms."""

    def test_to_and_from_trivial(self):
        assert MonoidHom(cyclic_group(2), trivial_monoid(), (0, 0)).is_surjective
        assert not MonoidHom(trivial_monoid(), cyclic_group(2), (0,)).is_surjective

    def test_unit_must_be_preserved(self):
        with pytest.raises(NotAHomomorphismError) as exc:
            MonoidHom(cyclic_group(2), cyclic_group(2), (1, 0))
        assert exc.value.error_code == "MONOID_HOM_UNIT"

    def test_multiplication_must_be_preserved(self):
        with pytest.raises(NotAHomomorphismError) as exc:
            MonoidHom(free_idempotent_pair(), cyclic_group(2), (0, 1))
        assert exc.value.error_code == "MONOID_HOM_MULT"
        assert exc.value.details["witness"] == [1, 1]

    def test_counts(self):
        assert len(list(enumerate_monoid_homs(cyclic_group(2), cyclic_group(2)))) == 2
        assert len(list(enumerate_monoid_homs(cyclic_group(3), cyclic_group(3)))) == 3

    def test_then(self):
        z2 = cyclic_group(2)
        f = MonoidHom(z2, trivial_monoid(), (0, 0))
        assert MonoidHom.identity(z2).then(f) == f

    def test_dual_of_identity(self):
        z2 = cyclic_group(2)
        assert dualize_monoid_hom(MonoidHom.identity(z2)) == LatticeHom.identity(
            from_poset(z2.carrier)
        )


class TestDerivationDuality:
    """Test ordered monoids against derivation algebras."""

    def test_derivation_flags(self):
        flags = classify(monoid_to_derivation(cyclic_group(2)))
        assert flags.derivation
        assert flags.pure

    def test_round_trip_discrete(self):
        for m in enumerate_ordered_monoids(3, discrete_only=True):
            assert derivation_to_monoid(monoid_to_derivation(m)) == m

    def test_round_trip_ordered(self):
        for m in enumerate_ordered_monoids(2):
            assert derivation_to_monoid(monoid_to_derivation(m)) == m

    def test_heyting_chain_is_meet_monoid(self):
        m = derivation_to_monoid(heyting_algebra(from_poset(chain(2))))
        assert m == OrderedMonoid(chain(2), ((0, 0), (0, 1)), 1)

    def test_boolean_heyting_has_no_dual_monoid(self):
        with pytest.raises(NotADerivationAlgebraError) as exc:
            derivation_to_monoid(heyting_algebra(from_poset(antichain(2))))
        assert exc.value.error_code == "NOT_A_DERIVATION_ALGEBRA"
        assert exc.value.details["prime_unital"] is False


class TestRelationalMorphisms:
    """Test relational morphisms and their corelational duals."""

    def test_identity_and_graph(self):
        z3 = cyclic_group(3)
        assert check_relational_morphism(identity_relational(z3))
        f = MonoidHom(z3, trivial_monoid(), (0, 0, 0))
        assert check_relational_morphism(relational_graph(f))

    def test_inverse_relation(self):
        f = MonoidHom(cyclic_group(2), trivial_monoid(), (0, 0))
        rho = inverse_relation(f)
        assert rho(0) == 0b11
        assert check_relational_morphism(rho)

    def test_total_failure(self):
        z2 = cyclic_group(2)
        rho = RelationalMonoidMorphism.from_images(z2, z2, (0, 0b11))
        assert relational_failure(rho) == ("total", (0,))

    def test_lax_square_failure(self):
        z2 = cyclic_group(2)
        rho = RelationalMonoidMorphism.from_images(z2, z2, (0b01, 0b11))
        assert relational_failure(rho) == ("lax_square", (1, 1, 1))

    def test_lax_unit_failure(self):
        rho = RelationalMonoidMorphism.from_images(
            trivial_monoid(), free_idempotent_pair(), (0b10,)
        )
        assert relational_failure(rho) == ("lax_unit", (0,))
        with pytest.raises(InvalidRelationalMorphismError) as exc:
            dualize_relational_morphism(rho)
        assert exc.value.error_code == "RELATIONAL_MORPHISM_INVALID"
        assert exc.value.details["condition"] == "lax_unit"
        assert dualize_relational_morphism(rho, strict=False)(0b10) == 0b1

    def test_carrier_mismatch(self):
        with pytest.raises(InvalidRelationalMorphismError) as exc:
            RelationalMonoidMorphism(
                cyclic_group(2),
                trivial_monoid(),
                OrderRelation(antichain(2), antichain(2), (0b01, 0b10)),
            )
        assert exc.value.error_code == "RELATIONAL_CARRIER_MISMATCH"

    def test_dual_of_identity_is_identity(self):
        z2 = cyclic_group(2)
        f = dualize_relational_morphism(identity_relational(z2))
        for b in from_poset(z2.carrier).elements:
            assert f(b) == b

    def test_composite_of_identities(self):
        z2 = cyclic_group(2)
        ident = identity_relational(z2)
        assert compose_relational_morphisms(ident, ident).relation.images == z2.carrier.up
