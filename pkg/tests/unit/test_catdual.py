"""
Unit tests for small categories, relational monoids and residuation CABAs.
"""

import pytest

from core.catdual import (
    FiniteCategory,
    RelationalMonoid,
    RelmonMorphism,
    arrow_category,
    build_category,
    categories_isomorphic,
    category_to_relmon,
    check_functor_correspondence,
    check_functor_duality,
    check_relmon_duality,
    classify_rescaba,
    composable_with,
    discrete_category,
    dualize_category_functor,
    enumerate_categories,
    enumerate_relmon_morphisms,
    enumerate_relmons,
    functor_as_morphism,
    functor_failure,
    is_functor,
    is_functorial,
    is_lax_unital,
    monoid_category,
    powerset_partial_monoid,
    reflects_composability,
    relabel_relmon,
    relmon_local_failure,
    relmon_to_category,
    relmon_to_rescaba,
    require_functorial,
    rescaba_of_category,
    terminal_category,
    unit_subsets,
    validate_relmon,
)
from core.exceptions import (
    CategoryError,
    InvalidCategoryError,
    NotFunctorialError,
    NotLocalPartialError,
    ResiduationError,
)
from core.lattice import LatticeMap
from core.monoids import cyclic_group


class TestFiniteCategory:
    """Test composition tables."""

    def test_arrow_category(self):
        c = arrow_category()
        assert c.hom(0, 1) == (2,)
        assert c.compose(0, 2) == 2
        assert c.compose(2, 1) == 2
        assert not c.composable(2, 2)

    def test_compose_outside_table(self):
        with pytest.raises(InvalidCategoryError) as exc:
            arrow_category().compose(2, 2)
        assert exc.value.error_code == "CATEGORY_COMPOSABILITY"

    def test_missing_composite(self):
        with pytest.raises(InvalidCategoryError) as exc:
            build_category(("X",), [("1", 0, 0), ("g", 0, 0)], {}, (0,))
        assert exc.value.error_code == "CATEGORY_COMPOSABILITY"
        assert exc.value.details["witness"] == [1, 1]

    def test_undefined_composite_of_composable_pair(self):
        with pytest.raises(InvalidCategoryError) as exc:
            FiniteCategory(("X",), ("1",), (0,), (0,), (0,), ((None,),))
        assert exc.value.error_code == "CATEGORY_COMPOSABILITY"

    def test_bad_shape(self):
        with pytest.raises(InvalidCategoryError) as exc:
            FiniteCategory(("X", "Y"), ("1",), (0,), (0,), (0,), ((0,),))
        assert exc.value.error_code == "CATEGORY_BAD_SHAPE"

    def test_enumeration_counts(self):
        # monoids of order 1 and 2
        assert len(enumerate_categories(max_objects=1, max_morphisms=2)) == 3
        # ten monoids of order at most 3, the discrete pair, two endomorphism
        # categories on two objects and the arrow
        assert len(enumerate_categories(max_objects=2, max_morphisms=3)) == 14


class TestRelationalMonoid:
    """Test the laws of relational monoids."""

    def test_shape(self):
        with pytest.raises(CategoryError) as exc:
            RelationalMonoid(2, ((0, 0),), 1)
        assert exc.value.error_code == "RELMON_BAD_SHAPE"
        with pytest.raises(CategoryError):
            RelationalMonoid(1, ((2,),), 1)

    def test_powerset_partial_monoid_is_not_local(self):
        m = powerset_partial_monoid(1)
        assert validate_relmon(m).to_dict() == {
            "associative": True,
            "unital": True,
            "partial": True,
            "local": False,
        }
        assert relmon_local_failure(m) == ("local", (1, 0, 1, 1))

    def test_not_a_category(self):
        with pytest.raises(NotLocalPartialError) as exc:
            relmon_to_category(powerset_partial_monoid(1))
        assert exc.value.error_code == "RELMON_NOT_LOCAL_PARTIAL"
        assert exc.value.details["local"] is False

    def test_discrete_category(self):
        m = category_to_relmon(discrete_category(2))
        assert m.comp == ((0b01, 0), (0, 0b10))
        assert m.identities == 0b11
        assert validate_relmon(m).is_category

    def test_monoid_category(self):
        z2 = cyclic_group(2)
        assert category_to_relmon(monoid_category(z2)) == RelationalMonoid.from_monoid(z2)

    def test_category_round_trip(self):
        for c in (discrete_category(2), arrow_category(), monoid_category(cyclic_group(3))):
            assert categories_isomorphic(relmon_to_category(category_to_relmon(c)), c)

    def test_enumerate_one_element(self):
        assert list(enumerate_relmons(1)) == [RelationalMonoid(1, ((1,),), 1)]

    def test_relabel(self):
        m = category_to_relmon(discrete_category(2))
        assert relabel_relmon(m, (1, 0)) == m

    def test_unit_subsets(self):
        assert unit_subsets(powerset_partial_monoid(1)) == [1]
        assert unit_subsets(RelationalMonoid(1, ((0,),), 0)) == []


class TestMorphisms:
    """Test functors and functorial morphisms."""

    def test_identity_is_functorial(self):
        m = powerset_partial_monoid(1)
        assert is_functorial(RelmonMorphism.identity(m))

    def test_shape(self):
        m = powerset_partial_monoid(1)
        with pytest.raises(CategoryError) as exc:
            RelmonMorphism(m, m, (5, 0))
        assert exc.value.error_code == "RELMON_MORPHISM_SHAPE"

    def test_morphisms_into_cyclic_group(self):
        one = category_to_relmon(terminal_category())
        z2 = RelationalMonoid.from_monoid(cyclic_group(2))
        assert [f.table for f in enumerate_relmon_morphisms(one, z2)] == [(0,)]

    def test_collapse_is_a_functor_without_reflection(self):
        c, one = arrow_category(), terminal_category()
        assert is_functor(c, one, (0, 0, 0))
        assert not reflects_composability(c, one, (0, 0, 0))
        assert not check_functor_correspondence(c, one, (0, 0, 0))
        with pytest.raises(NotFunctorialError) as exc:
            require_functorial(functor_as_morphism(c, one, (0, 0, 0)))
        assert exc.value.details["condition"] == "pure"

    def test_functor_failure(self):
        c = arrow_category()
        assert functor_failure(c, c, (0, 1, 1)) == (0, 2)
        with pytest.raises(InvalidCategoryError) as exc:
            functor_failure(c, c, (0, 1))
        assert exc.value.error_code == "FUNCTOR_BAD_SHAPE"

    def test_identity_functor(self):
        c = arrow_category()
        assert check_functor_correspondence(c, c, (0, 1, 2))
        h = dualize_category_functor(c, c, (0, 1, 2))
        assert all(h(x) == x for x in h.dom.elements)
        assert check_functor_duality(functor_as_morphism(c, c, (0, 1, 2)))

    def test_functor_duality_needs_pure(self):
        f = functor_as_morphism(arrow_category(), terminal_category(), (0, 0, 0))
        with pytest.raises(ResiduationError) as exc:
            check_functor_duality(f)
        assert exc.value.error_code == "MORPHISM_NOT_PURE"

    def test_collapse_is_lax_unital(self):
        f = functor_as_morphism(arrow_category(), terminal_category(), (0, 0, 0))
        r, s = relmon_to_rescaba(f.cod), relmon_to_rescaba(f.dom)
        h = LatticeMap.from_function(r.lattice, s.lattice, f.preimage)
        assert is_lax_unital(h, r, s)


class TestRescaba:
    """Test residuation CABAs and their flags."""

    def test_category_is_categorical(self):
        r = rescaba_of_category(arrow_category())
        assert r.unit == 0b011
        assert classify_rescaba(r).to_dict() == {
            "unital": True,
            "associative": True,
            "functional": True,
            "local": True,
            "categorical": True,
        }

    def test_composable_with(self):
        r = rescaba_of_category(arrow_category())
        assert composable_with(r, 0b100) == 0b010

    def test_powerset_partial_monoid_duality(self):
        flags, dual = check_relmon_duality(powerset_partial_monoid(1))
        assert flags.partial and dual.functional
        assert not flags.local and not dual.local
        assert not dual.categorical

    def test_empty_multiplication(self):
        m = RelationalMonoid(1, ((0,),), 0)
        flags, dual = check_relmon_duality(m)
        assert flags.associative and dual.associative
        assert not flags.unital and not dual.unital
        assert relmon_to_rescaba(m).unit is None

    def test_two_element_relmons_agree(self):
        for m in enumerate_relmons(2):
            check_relmon_duality(m)
