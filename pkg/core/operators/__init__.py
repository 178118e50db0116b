"""
Operators Module
Join-operators between tensor powers and their dual stable relations.
"""

from .duality import (
    DualRelation,
    OperatorFlags,
    check_hom_duality,
    classify,
    dual_compose,
    dual_identity,
    dual_tensor,
    dualize_operator,
    dualize_relation,
    is_operator_morphism,
    is_relation_morphism,
    operator_relation,
)
from .operator import (
    Operator,
    bottom_operator,
    compose_operators,
    describe,
    enumerate_operators,
    enumerate_unary_operators,
    eval_operator,
    heyting_operator,
    identity_operator,
    meet_operator,
    meet_with,
    operator_from_map,
    tensor_operators,
    top_operator,
)

__version__ = "0.1.0"
__all__ = [
    "DualRelation",
    "Operator",
    "OperatorFlags",
    "bottom_operator",
    "check_hom_duality",
    "classify",
    "compose_operators",
    "describe",
    "dual_compose",
    "dual_identity",
    "dual_tensor",
    "dualize_operator",
    "dualize_relation",
    "enumerate_operators",
    "enumerate_unary_operators",
    "eval_operator",
    "heyting_operator",
    "identity_operator",
    "is_operator_morphism",
    "is_relation_morphism",
    "meet_operator",
    "meet_with",
    "operator_from_map",
    "operator_relation",
    "tensor_operators",
    "top_operator",
]
