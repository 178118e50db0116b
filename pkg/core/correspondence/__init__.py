"""
Correspondence Module
Operator (in)equations against first-order properties of dual relations.
"""

from .correspondence import (
    CorrespondenceReport,
    ModalProperty,
    PropertyTally,
    check_correspondence,
    operator_failure,
    operator_side,
    relation_failure,
    relation_side,
    sweep_correspondence,
)

__version__ = "0.1.0"
__all__ = [
    "CorrespondenceReport",
    "ModalProperty",
    "PropertyTally",
    "check_correspondence",
    "operator_failure",
    "operator_side",
    "relation_failure",
    "relation_side",
    "sweep_correspondence",
]
