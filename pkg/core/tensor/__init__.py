"""
Tensor Module
Finite tensor and box products, omega, pure tensors and tensor implications.
"""

from .tensor import (
    BoxElement,
    BoxMap,
    TensorElement,
    TensorProduct,
    box,
    box_map,
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

__version__ = "0.1.0"
__all__ = [
    "BoxElement",
    "BoxMap",
    "TensorElement",
    "TensorProduct",
    "box",
    "box_map",
    "generators",
    "horizontal_upper",
    "limp",
    "omega",
    "omega_inverse",
    "pure_tensor",
    "rimp",
    "tensor_of_homs",
    "tensor_power",
]
