"""
Finite-Duality Custom Exceptions
Provides structured error handling across all modules.
"""

from typing import Any, Dict, Optional


class DualityError(Exception):
    """Base exception for all finite-duality errors."""

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        """
        Initialize duality exception.

        Args:
            message: Human-readable error message
            error_code: Machine-readable error code
            details: Additional error context, usually a witness
        """
        self.message = message
        self.error_code = error_code or "DUALITY_UNKNOWN_ERROR"
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> dict:
        """Convert exception to dictionary for logging/serialization."""
        return {
            "error_type": self.__class__.__name__,
            "message": self.message,
            "error_code": self.error_code,
            "details": self.details,
        }


# Order Exceptions
class OrderError(DualityError):
    """Base exception for poset and order-relation errors."""

    pass


class InvalidPosetError(OrderError):
    """Order matrix is not reflexive, antisymmetric and transitive."""

    pass


class IndexOutOfRangeError(OrderError):
    """Element index outside the carrier."""

    pass


class PosetMismatchError(OrderError):
    """Operands live over different posets."""

    pass


class StabilityError(OrderError):
    """Relation is not stable under the order on either side."""

    pass


# Lattice Exceptions
class LatticeError(DualityError):
    """Base exception for lattice errors."""

    pass


class NotALatticeError(LatticeError):
    """Order lacks a binary join or meet."""

    pass


class NotDistributiveError(LatticeError):
    """Lattice violates the distributive law."""

    pass


class HomomorphismError(LatticeError):
    """Map fails to preserve the lattice operations."""

    pass


class AdjointError(LatticeError):
    """Adjoint requested for a map that does not preserve the needed operations."""

    pass


# Tensor Exceptions
class TensorError(DualityError):
    """Base exception for tensor product errors."""

    pass


class ArityError(TensorError):
    """Operation applied at the wrong arity."""

    pass


class LatticeMismatchError(TensorError):
    """Operands come from different lattices."""

    pass


# Operator Exceptions
class OperatorError(DualityError):
    """Base exception for operator errors."""

    pass


class InvalidOperatorError(OperatorError):
    """Prime table is malformed or not monotone."""

    pass


# Residuation Exceptions
class ResiduationError(DualityError):
    """Base exception for residuation algebra errors."""

    pass


class ResiduationPropertyError(ResiduationError):
    """Residual tables violate a residuation law."""

    pass


class NotADerivationAlgebraError(ResiduationError):
    """Algebra is not pure, associative and prime-unital."""

    pass


# Monoid Exceptions
class MonoidError(DualityError):
    """Base exception for monoid errors."""

    pass


class InvalidMonoidError(MonoidError):
    """Multiplication table violates a monoid law."""

    pass


class NotAHomomorphismError(MonoidError):
    """Map does not preserve multiplication, unit or order."""

    pass


class InvalidRelationalMorphismError(MonoidError):
    """Relational morphism has the wrong shape."""

    pass


# Automaton Exceptions
class AutomatonError(DualityError):
    """Base exception for automata and language errors."""

    pass


class InvalidDFAError(AutomatonError):
    """Transition table is not a total function."""

    pass


class RegexSyntaxError(AutomatonError):
    """Regular expression cannot be parsed."""

    pass


class MonoidMismatchError(AutomatonError):
    """Languages are recognized by different monoids."""

    pass


# Category Exceptions
class CategoryError(DualityError):
    """Base exception for categories and relational monoids."""

    pass


class InvalidCategoryError(CategoryError):
    """Composition table violates a category axiom."""

    pass


class NotLocalPartialError(CategoryError):
    """Relational monoid is not local and partial."""

    pass


class NotFunctorialError(CategoryError):
    """Map between relational monoids is not functorial."""

    pass


# Consistency Exceptions
class ConsistencyError(DualityError):
    """Two independent characterizations of one property disagree."""

    pass


class ClassificationMismatchError(ConsistencyError):
    """Equivalent classification criteria returned different verdicts."""

    pass


class CorrespondenceMismatchError(ConsistencyError):
    """Operator side and relation side of a correspondence disagree."""

    pass


class DualityCheckError(ConsistencyError):
    """Dual computation differs from the direct one."""

    pass


# Configuration Exceptions
class ConfigurationError(DualityError):
    """Invalid configuration value or file."""

    pass


class SchemaError(DualityError):
    """Structure file does not match its schema."""

    pass
