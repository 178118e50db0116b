"""
Unit tests for tensor and box products of finite distributive lattices.
"""

import pytest

from core.exceptions import ArityError, HomomorphismError, LatticeMismatchError
from core.lattice import LatticeMap, from_poset
from core.order import antichain, chain
from core.tensor import (
    BoxElement,
    box,
    generators,
    horizontal_upper,
    limp,
    omega,
    omega_inverse,
    pure_tensor,
    rimp,
    tensor_of_homs,
    tensor_power,
)


@pytest.fixture
def three_chain():
    """Three-element chain lattice over the two-element chain of primes."""
    return from_poset(chain(2))


@pytest.fixture
def square(three_chain):
    return tensor_power(three_chain, 2)


class TestTensorProduct:
    """Test construction and pure tensors."""

    def test_sizes(self, three_chain):
        assert tensor_power(three_chain, 0).size == 2
        assert tensor_power(three_chain, 1).size == 3
        assert tensor_power(three_chain, 2).size == 6
        assert tensor_power(from_poset(antichain(1)), 3).size == 2

    def test_negative_arity(self, three_chain):
        with pytest.raises(ArityError):
            tensor_power(three_chain, -1)

    def test_pure_tensor_is_rectangle(self, square, three_chain):
        t = square.pure((0b01, 0b11))
        assert square.element(t).members == ((0, 0), (0, 1))
        assert pure_tensor(three_chain, (0b01, 0b11)) == t

    def test_pure_with_bottom_is_bottom(self, square):
        assert square.pure((0, 0b11)) == 0

    def test_pure_arity_mismatch(self, square):
        with pytest.raises(ArityError) as exc:
            square.pure((0b01,))
        assert exc.value.error_code == "TENSOR_ARITY"

    def test_pure_mixed_lattices(self, square):
        with pytest.raises(LatticeMismatchError) as exc:
            square.pure((0b10, 0b01))
        assert exc.value.error_code == "TENSOR_MIXED_LATTICES"

    def test_generators_of_pure_prime_tensor(self, square, three_chain):
        primes = three_chain.primes
        assert generators(square, square.pure((primes[1], primes[0]))) == ((1, 0),)


class TestOmega:
    """Test the tensor-to-box isomorphism."""

    def test_omega_is_complement(self, square):
        for t in square.elements:
            assert omega(square, t).upset == square.top & ~t

    def test_round_trip(self, square):
        for t in square.elements:
            assert omega_inverse(omega(square, t)) == t

    def test_round_trip_on_boolean_square(self):
        p = tensor_power(from_poset(antichain(2)), 2)
        for t in p.elements:
            assert omega_inverse(omega(p, t)) == t

    def test_formula_limit_zero_uses_canonical(self, square):
        assert omega(square, square.top, formula_limit=0).upset == 0

    def test_needs_square(self, three_chain):
        with pytest.raises(ArityError):
            omega(tensor_power(three_chain, 3), 0)


class TestBoxElements:
    """Test the box encoding."""

    def test_must_be_upset(self, square):
        with pytest.raises(LatticeMismatchError) as exc:
            BoxElement(square, 0b000001)
        assert exc.value.error_code == "BOX_NOT_UPSET"

    def test_box_of_tops_is_top(self, square, three_chain):
        assert box(square, (three_chain.top, three_chain.top)).upset == 0

    def test_meet_and_join(self, square):
        a = omega(square, square.pure((0b01, 0b11)))
        b = omega(square, square.pure((0b11, 0b01)))
        assert a.meet(b).leq(a)
        assert a.leq(a.join(b))
        assert omega_inverse(a.join(b)) == square.pure((0b01, 0b11)) | square.pure((0b11, 0b01))


class TestImplications:
    """Test the tensor implications."""

    def test_limp_of_pure(self, square, three_chain):
        for y in three_chain.elements:
            assert limp(square, three_chain.top, square.pure((three_chain.top, y))) == y

    def test_rimp_of_pure(self, square, three_chain):
        for x in three_chain.elements:
            assert rimp(square, square.pure((x, three_chain.top)), three_chain.top) == x

    def test_bottom_implies_top(self, square, three_chain):
        assert limp(square, 0, 0) == three_chain.top
        assert rimp(square, 0, 0) == three_chain.top


class TestMapsOnProducts:
    """Test tensors of homomorphisms and box maps."""

    def test_tensor_of_identities(self, three_chain, square):
        ident = LatticeMap.identity(three_chain)
        assert tensor_of_homs(ident, ident) == LatticeMap.identity(square)

    def test_tensor_needs_join_preserving(self, three_chain):
        top = LatticeMap(three_chain, three_chain, (three_chain.top,) * three_chain.size)
        with pytest.raises(HomomorphismError) as exc:
            tensor_of_homs(top, LatticeMap.identity(three_chain))
        assert exc.value.error_code == "TENSOR_NOT_JOIN_PRESERVING"

    def test_horizontal_upper_of_identities(self, three_chain, square):
        ident = LatticeMap.identity(three_chain)
        assert horizontal_upper(ident, ident) == LatticeMap.identity(square)
