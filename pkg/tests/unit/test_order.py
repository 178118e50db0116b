"""
Unit tests for finite posets, bit masks and order relations.
"""

import numpy as np
import pytest

from core.exceptions import IndexOutOfRangeError, InvalidPosetError, StabilityError
from core.order import (
    DownSet,
    MonotoneMap,
    OrderRelation,
    Poset,
    antichain,
    chain,
    compose,
    downset_closure,
    enumerate_monotone_maps,
    enumerate_order_relations,
    enumerate_posets,
    enumerate_posets_by_downsets,
    identity,
    is_isomorphic,
    mask_of,
    members,
    popcount,
    power_poset,
    relabel,
    tensor,
)


class TestBits:
    """Test the mask helpers."""

    def test_mask_round_trip(self):
        assert mask_of([0, 2, 3]) == 0b1101
        assert members(0b1101) == (0, 2, 3)
        assert members(0) == ()

    def test_popcount(self):
        assert popcount(0) == 0
        assert popcount(0b1011) == 3


class TestPoset:
    """Test poset construction and queries."""

    def test_from_pairs_takes_closure(self):
        p = Poset.from_pairs(3, [(0, 1), (1, 2)])
        assert p.le(0, 2)
        assert not p.le(2, 0)
        assert p.covers(0, 1)
        assert not p.covers(0, 2)

    def test_cycle_rejected(self):
        with pytest.raises(InvalidPosetError) as exc:
            Poset.from_pairs(2, [(0, 1), (1, 0)])
        assert exc.value.error_code == "POSET_NOT_ANTISYMMETRIC"

    def test_not_reflexive(self):
        with pytest.raises(InvalidPosetError) as exc:
            Poset(np.zeros((2, 2), dtype=bool))
        assert exc.value.error_code == "POSET_NOT_REFLEXIVE"
        assert exc.value.details["witness"] == [0]

    def test_not_transitive(self):
        leq = np.eye(3, dtype=bool)
        leq[0, 1] = leq[1, 2] = True
        with pytest.raises(InvalidPosetError) as exc:
            Poset(leq)
        assert exc.value.error_code == "POSET_NOT_TRANSITIVE"
        assert exc.value.details["witness"] == [0, 1, 2]

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            Poset.from_pairs(2, [(0, 5)])

    def test_bad_labels(self):
        with pytest.raises(InvalidPosetError) as exc:
            Poset(np.eye(2, dtype=bool), labels=["a"])
        assert exc.value.error_code == "POSET_BAD_LABELS"

    def test_empty_poset(self):
        p = antichain(0)
        assert p.n == 0
        assert p.downsets == (0,)

    def test_downsets_of_chain_and_antichain(self):
        assert chain(2).downsets == (0b00, 0b01, 0b11)
        assert len(antichain(2).downsets) == 4
        assert len(chain(3).downsets) == 4

    def test_upsets_complement_downsets(self):
        p = Poset.from_pairs(3, [(0, 2), (1, 2)])
        assert len(p.upsets) == len(p.downsets)
        assert all(p.is_upset(u) for u in p.upsets)

    def test_maximal_and_minimal(self):
        p = Poset.from_pairs(3, [(0, 2), (1, 2)])
        assert p.maximal(0b111) == (2,)
        assert p.minimal(0b111) == (0, 1)
        assert p.maximal(0b011) == (0, 1)

    def test_dual_reverses_order(self):
        p = chain(2)
        assert p.dual().le(1, 0)

    def test_equality_ignores_labels(self):
        assert Poset.from_pairs(2, [(0, 1)], labels=["a", "b"]) == chain(2)

    def test_label_defaults_to_index(self):
        assert chain(2).label(1) == "1"
        assert Poset.from_pairs(1, [], labels=["x"]).label(0) == "x"


class TestProducts:
    """Test row-major product posets."""

    def test_index_round_trip(self):
        p = power_poset(chain(2), 2)
        assert p.n == 4
        assert p.index_of((1, 0)) == 2
        assert p.tuple_of(3) == (1, 1)

    def test_product_order(self):
        p = power_poset(chain(2), 2)
        assert p.le(p.index_of((0, 1)), p.index_of((1, 1)))
        assert not p.le(p.index_of((0, 1)), p.index_of((1, 0)))

    def test_empty_product_is_point(self):
        assert power_poset(chain(2), 0).n == 1

    def test_product_mask(self):
        p = power_poset(chain(2), 2)
        mask = p.product_mask([0b10, 0b11])
        assert members(mask) == (2, 3)


class TestDownSets:
    """Test downset values and closures."""

    def test_closure(self):
        d = downset_closure(chain(3), [1])
        assert d.members == (0, 1)
        assert 0 in d and 2 not in d
        assert len(d) == 2

    def test_not_a_downset(self):
        with pytest.raises(InvalidPosetError) as exc:
            DownSet(chain(2), 0b10)
        assert exc.value.error_code == "NOT_A_DOWNSET"


class TestMonotoneMaps:
    """Test monotone maps and their enumeration."""

    def test_not_monotone(self):
        with pytest.raises(InvalidPosetError) as exc:
            MonotoneMap(chain(2), chain(2), (1, 0))
        assert exc.value.error_code == "MAP_NOT_MONOTONE"

    def test_then_is_diagrammatic(self):
        f = MonotoneMap(chain(2), chain(3), (0, 2))
        g = MonotoneMap(chain(3), chain(2), (0, 0, 1))
        assert f.then(g).table == (0, 1)

    def test_enumeration_counts(self):
        assert len(list(enumerate_monotone_maps(chain(2), chain(2)))) == 3
        assert len(list(enumerate_monotone_maps(antichain(2), chain(2)))) == 4


class TestEnumeration:
    """Test enumeration of posets up to isomorphism."""

    @pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 16)])
    def test_poset_counts(self, n, count):
        assert len(enumerate_posets(n)) == count

    def test_posets_with_few_downsets(self):
        posets = enumerate_posets_by_downsets(8)
        sizes = [len(p.downsets) for p in posets]
        # distributive lattices with 1..8 elements, up to isomorphism
        assert [sizes.count(k) for k in range(1, 9)] == [1, 1, 1, 2, 3, 5, 8, 15]
        assert max(p.n for p in posets) == 7
        assert any(is_isomorphic(p, chain(7)) for p in posets)

    def test_downset_bound_agrees_with_full_enumeration(self):
        small = [p for p in enumerate_posets_by_downsets(6) if p.n == 3]
        expected = [p for p in enumerate_posets(3) if len(p.downsets) <= 6]
        assert len(small) == len(expected) == 4

    def test_relabel_is_isomorphic(self):
        p = Poset.from_pairs(3, [(0, 2), (1, 2)])
        q = relabel(p, (2, 0, 1))
        assert is_isomorphic(p, q)
        assert not is_isomorphic(p, chain(3))


class TestOrderRelations:
    """Test stable relations and their composition."""

    def test_images_must_be_upsets(self):
        with pytest.raises(StabilityError) as exc:
            OrderRelation(chain(1), chain(2), (0b01,))
        assert exc.value.error_code == "RELATION_NOT_STABLE"

    def test_images_must_shrink(self):
        with pytest.raises(StabilityError):
            OrderRelation(chain(2), chain(1), (0, 1))

    def test_generated_by(self):
        r = OrderRelation.generated_by(chain(2), chain(2), [(1, 0)])
        assert r.images == (0b11, 0b11)

    def test_identity_is_unit(self):
        p = Poset.from_pairs(3, [(0, 2), (1, 2)])
        for r in enumerate_order_relations(p, chain(2)):
            assert compose(identity(p), r) == r
            assert compose(r, identity(chain(2))) == r

    def test_relation_count(self):
        # stable relations 1 -> 2-chain are the upsets of the chain
        assert len(list(enumerate_order_relations(chain(1), chain(2)))) == 3

    def test_tensor_shape(self):
        r = identity(chain(2))
        t = tensor(r, r)
        assert t.dom.n == 4
        assert t.images[0] == t.cod.full_mask

    def test_total_and_empty(self):
        assert identity(chain(2)).is_total()
        assert OrderRelation(chain(1), chain(1), (0,)).is_empty()
