"""
Adjoints of monotone maps between finite distributive lattices.
"""

import logging

from core.exceptions import AdjointError
from core.order import is_subset

from .lattice import LatticeMap

logger = logging.getLogger(__name__)


def left_adjoint(f: LatticeMap) -> LatticeMap:
    """
    f*(y) = meet of {x | y <= f(x)}.

    Requires f to preserve finite meets, top included.
    """
    if not f.preserves_top():
        raise AdjointError(
            "Left adjoint needs a top-preserving map",
            error_code="ADJOINT_TOP",
            details={"witness": [f.dom.top]},
        )
    witness = f.meet_failure()
    if witness is not None:
        raise AdjointError(
            "Left adjoint needs a meet-preserving map",
            error_code="ADJOINT_MEET",
            details={"witness": list(witness)},
        )
    return LatticeMap.from_function(
        f.cod,
        f.dom,
        lambda y: f.dom.meet_all(x for x in f.dom.elements if is_subset(y, f(x))),
    )


def right_adjoint(f: LatticeMap) -> LatticeMap:
    """
    f_*(y) = join of {x | f(x) <= y}.

    Requires f to preserve finite joins, bottom included.
    """
    if not f.preserves_bottom():
        raise AdjointError(
            "Right adjoint needs a bottom-preserving map",
            error_code="ADJOINT_BOTTOM",
            details={"witness": [f.dom.bottom]},
        )
    witness = f.join_failure()
    if witness is not None:
        raise AdjointError(
            "Right adjoint needs a join-preserving map",
            error_code="ADJOINT_JOIN",
            details={"witness": list(witness)},
        )
    return LatticeMap.from_function(
        f.cod,
        f.dom,
        lambda y: f.dom.join_all(x for x in f.dom.elements if is_subset(f(x), y)),
    )


def is_adjunction(lower: LatticeMap, upper: LatticeMap) -> bool:
    """lower(x) <= y iff x <= upper(y), for all x, y."""
    return all(
        is_subset(lower(x), y) == is_subset(x, upper(y))
        for x in lower.dom.elements
        for y in upper.dom.elements
    )
