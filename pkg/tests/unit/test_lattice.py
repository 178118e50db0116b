"""
Unit tests for finite distributive lattices and Birkhoff duality.
"""

import pytest

from core.exceptions import (
    AdjointError,
    HomomorphismError,
    LatticeMismatchError,
    NotALatticeError,
    NotDistributiveError,
)
from core.lattice import (
    TWO,
    AbstractLattice,
    FiniteDistLattice,
    LatticeHom,
    LatticeMap,
    canonicalize,
    dual_poset,
    dualize_hom,
    dualize_map,
    enumerate_homs,
    enumerate_join_maps,
    from_poset,
    is_adjunction,
    left_adjoint,
    right_adjoint,
)
from core.order import antichain, chain, enumerate_monotone_maps, enumerate_posets, is_isomorphic


class TestFiniteDistLattice:
    """Test the downset representation."""

    def test_sizes(self):
        assert from_poset(chain(2)).size == 3
        assert from_poset(antichain(2)).size == 4
        assert from_poset(antichain(0)).size == 1

    def test_bounds_and_order(self):
        d = from_poset(chain(2))
        assert d.elements == (0b00, 0b01, 0b11)
        assert d.bottom == 0
        assert d.top == 0b11
        assert d.leq(0b01, 0b11)

    def test_primes(self):
        d = from_poset(chain(2))
        assert d.primes == (0b01, 0b11)
        assert d.prime_of(0b01) == 0
        assert d.prime_of(0b11) == 1
        assert d.prime_of(0) is None
        assert from_poset(antichain(2)).prime_of(0b11) is None

    def test_boolean_complement(self):
        d = from_poset(antichain(2))
        assert d.is_boolean
        assert d.complement(0b01) == 0b10

    def test_complement_needs_boolean(self):
        with pytest.raises(LatticeMismatchError) as exc:
            from_poset(chain(2)).complement(0b01)
        assert exc.value.error_code == "NOT_BOOLEAN"

    def test_heyting_on_chain(self):
        d = from_poset(chain(2))
        assert d.heyting(0b11, 0b01) == 0b01
        assert d.heyting(0b01, 0b11) == 0b11
        assert d.heyting(0b11, 0b00) == 0b00

    def test_check_element(self):
        with pytest.raises(LatticeMismatchError):
            from_poset(chain(2)).check_element(0b10)

    def test_dual_poset_recovers_base(self):
        for p in enumerate_posets(3):
            assert dual_poset(from_poset(p)) == p


class TestAbstractLattice:
    """Test canonicalization of lattices given by an order matrix."""

    def test_square_is_boolean(self):
        a = AbstractLattice.from_pairs(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        lattice, iso = canonicalize(a)
        assert lattice.size == 4
        assert lattice.is_boolean
        assert iso == (0b00, 0b01, 0b10, 0b11)
        assert a.join(1, 2) == 3
        assert a.meet(1, 2) == 0

    def test_chain_gives_chain_of_primes(self):
        a = AbstractLattice.from_pairs(3, [(0, 1), (1, 2)])
        lattice, _ = canonicalize(a)
        assert is_isomorphic(dual_poset(lattice), chain(2))

    def test_eight_chain_needs_seven_primes(self):
        a = AbstractLattice.from_pairs(8, [(i, i + 1) for i in range(7)])
        lattice, iso = canonicalize(a)
        assert lattice.size == 8
        assert len(lattice.primes) == 7
        assert is_isomorphic(dual_poset(lattice), chain(7))
        assert list(iso) == sorted(iso)

    def test_pentagon_not_distributive(self):
        a = AbstractLattice.from_pairs(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
        with pytest.raises(NotDistributiveError) as exc:
            canonicalize(a)
        assert exc.value.error_code == "LATTICE_NOT_DISTRIBUTIVE"

    def test_diamond_not_distributive(self):
        a = AbstractLattice.from_pairs(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
        with pytest.raises(NotDistributiveError):
            canonicalize(a)

    def test_missing_join(self):
        with pytest.raises(NotALatticeError) as exc:
            AbstractLattice.from_pairs(3, [(0, 1), (0, 2)])
        assert exc.value.error_code == "LATTICE_NO_JOIN"
        assert exc.value.details["witness"] == [1, 2]

    def test_empty(self):
        with pytest.raises(NotALatticeError) as exc:
            AbstractLattice.from_pairs(0, [])
        assert exc.value.error_code == "LATTICE_EMPTY"


class TestLatticeMaps:
    """Test maps, homomorphisms and their duals."""

    def test_hom_rejects_constant_top(self):
        d = from_poset(chain(2))
        with pytest.raises(HomomorphismError) as exc:
            LatticeHom(d, d, (d.top,) * d.size)
        assert exc.value.error_code == "HOM_BOTTOM"

    def test_not_monotone(self):
        d = from_poset(chain(2))
        with pytest.raises(HomomorphismError) as exc:
            LatticeMap(d, d, (0b11, 0b01, 0b00))
        assert exc.value.error_code == "MAP_NOT_MONOTONE"

    def test_identity_then(self):
        d = from_poset(antichain(2))
        f = LatticeHom.identity(d)
        assert f.then(f) == f
        assert isinstance(f.then(f), LatticeHom)

    def test_hom_count_matches_monotone_maps(self):
        # homs D(P) -> D(Q) correspond to monotone maps Q -> P
        for p in enumerate_posets(2):
            for q in enumerate_posets(2):
                homs = list(enumerate_homs(from_poset(p), from_poset(q)))
                maps = list(enumerate_monotone_maps(q, p))
                assert len(homs) == len(maps)

    def test_join_maps_into_two(self):
        d = from_poset(chain(2))
        assert len(list(enumerate_join_maps(d, TWO))) == 3

    def test_map_round_trip(self):
        for phi in enumerate_monotone_maps(chain(2), antichain(2)):
            assert dualize_hom(dualize_map(phi)) == phi

    def test_hom_round_trip(self):
        d, e = from_poset(chain(2)), from_poset(antichain(2))
        for f in enumerate_homs(d, e):
            assert dualize_map(dualize_hom(f)) == f


class TestAdjoints:
    """Test adjoints of lattice maps."""

    def test_left_adjoint_of_hom(self):
        d, e = from_poset(chain(2)), from_poset(antichain(2))
        for f in enumerate_homs(d, e):
            assert is_adjunction(left_adjoint(f), f)
            assert is_adjunction(f, right_adjoint(f))

    def test_right_adjoint_needs_bottom(self):
        d = from_poset(chain(2))
        f = LatticeMap(d, d, (d.top,) * d.size)
        with pytest.raises(AdjointError) as exc:
            right_adjoint(f)
        assert exc.value.error_code == "ADJOINT_BOTTOM"

    def test_left_adjoint_needs_top(self):
        d = from_poset(chain(2))
        f = LatticeMap(d, d, (0,) * d.size)
        with pytest.raises(AdjointError) as exc:
            left_adjoint(f)
        assert exc.value.error_code == "ADJOINT_TOP"


def test_lattice_equality_is_by_base():
    assert FiniteDistLattice(chain(2)) == from_poset(chain(2))
    assert FiniteDistLattice(chain(2)) != from_poset(antichain(2))
