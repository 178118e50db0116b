"""
Order Module
Finite posets, downsets, monotone maps, products and order relations.
"""

from .bits import is_subset, iter_bits, mask_of, members, popcount
from .enumeration import (
    canonical_key,
    enumerate_monotone_maps,
    enumerate_order_relations,
    enumerate_posets,
    enumerate_posets_by_downsets,
    enumerate_posets_up_to,
    is_isomorphic,
)
from .poset import (
    DownSet,
    MonotoneMap,
    Poset,
    ProductPoset,
    antichain,
    chain,
    downset_closure,
    power_poset,
    product_poset,
    relabel,
)
from .relations import OrderRelation, compose, identity, tensor

__version__ = "0.1.0"
__all__ = [
    "DownSet",
    "MonotoneMap",
    "OrderRelation",
    "Poset",
    "ProductPoset",
    "antichain",
    "canonical_key",
    "chain",
    "compose",
    "downset_closure",
    "enumerate_monotone_maps",
    "enumerate_order_relations",
    "enumerate_posets",
    "enumerate_posets_by_downsets",
    "enumerate_posets_up_to",
    "identity",
    "is_isomorphic",
    "is_subset",
    "iter_bits",
    "mask_of",
    "members",
    "popcount",
    "power_poset",
    "product_poset",
    "relabel",
    "tensor",
]
