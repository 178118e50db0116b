#!/usr/bin/env python3
"""
Residuation Algebras
Finite distributive lattices with a left residual x\\z and a right residual z/y,
and the translations to the multiplication mu and the comultiplication gamma.

Residuals are evaluated lazily and memoized, so an algebra over a large lattice
can be used through its join-primes without enumerating every element.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from core.exceptions import DualityCheckError, ResiduationPropertyError
from core.lattice import TWO, FiniteDistLattice, LatticeMap, is_adjunction
from core.operators import Operator
from core.order import is_subset, iter_bits
from core.tensor import TensorProduct, limp, rimp, tensor_power

logger = logging.getLogger(__name__)

Residual = Callable[[int, int], int]


def _meet_irreducible(d: FiniteDistLattice, p: int) -> int:
    return d.top & ~d.base.up[p]


class ResiduationAlgebra:
    """
    Finite residuation algebra on a downset lattice.

    The main attributes are:
        - lattice: the carrier
        - ldiv(x, z): left residual x\\z
        - rdiv(z, y): right residual z/y
        - unit: the element e with e\\z = z = z/e, or None

    mu on join-primes comes from multiplication or prime_product when given,
    otherwise it is recovered from the left residual. With validate=True the
    residuation property and meet preservation in the dividend are checked
    exhaustively on construction.
    """

    def __init__(
        self,
        lattice: FiniteDistLattice,
        ldiv: Residual,
        rdiv: Residual,
        unit: Optional[int] = None,
        multiplication: Optional[Operator] = None,
        prime_product: Optional[Callable[[int, int], int]] = None,
        validate: bool = True,
    ):
        self.lattice = lattice
        self._ldiv = ldiv
        self._rdiv = rdiv
        self._lcache: Dict[Tuple[int, int], int] = {}
        self._rcache: Dict[Tuple[int, int], int] = {}
        self._mcache: Dict[Tuple[int, int], int] = {}
        self._given_unit = unit
        self.multiplication = multiplication
        self._prime_product = prime_product
        if validate:
            self.validate()
            if unit is not None:
                self._check_unit(unit)
        logger.debug(f"Residuation algebra over {lattice.base.n} join-primes initialized")

    def __repr__(self) -> str:
        return f"ResiduationAlgebra(primes={self.lattice.base.n})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ResiduationAlgebra):
            return NotImplemented
        return self.lattice == other.lattice and self.tables() == other.tables()

    def __hash__(self) -> int:
        return hash(("residuation", self.lattice))

    def ldiv(self, x: int, z: int) -> int:
        key = (x, z)
        if key not in self._lcache:
            self._lcache[key] = self._ldiv(x, z)
        return self._lcache[key]

    def rdiv(self, z: int, y: int) -> int:
        key = (z, y)
        if key not in self._rcache:
            self._rcache[key] = self._rdiv(z, y)
        return self._rcache[key]

    def tables(self) -> Tuple[Tuple[Tuple[int, ...], ...], Tuple[Tuple[int, ...], ...]]:
        """(lres, rres) with lres[i][j] = x_i\\x_j and rres[j][i] = x_j/x_i, in element order."""
        elements = self.lattice.elements
        lres = tuple(tuple(self.ldiv(x, z) for z in elements) for x in elements)
        rres = tuple(tuple(self.rdiv(z, y) for y in elements) for z in elements)
        return lres, rres

    def validate(self) -> None:
        d = self.lattice
        elements = d.elements
        for x in elements:
            for z in elements:
                d.check_element(self.ldiv(x, z))
                d.check_element(self.rdiv(z, x))
        for x in elements:
            if self.ldiv(x, d.top) != d.top or self.rdiv(d.top, x) != d.top:
                raise ResiduationPropertyError(
                    "Residuals must send top to top",
                    error_code="RESIDUAL_NOT_MEET_PRESERVING",
                    details={"witness": [x, d.top]},
                )
            for z1 in elements:
                for z2 in elements:
                    if self.ldiv(x, z1 & z2) != self.ldiv(x, z1) & self.ldiv(x, z2):
                        raise ResiduationPropertyError(
                            f"x\\(-) does not preserve meets at x={x}",
                            error_code="RESIDUAL_NOT_MEET_PRESERVING",
                            details={"witness": [x, z1, z2]},
                        )
                    if self.rdiv(z1 & z2, x) != self.rdiv(z1, x) & self.rdiv(z2, x):
                        raise ResiduationPropertyError(
                            f"(-)/y does not preserve meets at y={x}",
                            error_code="RESIDUAL_NOT_MEET_PRESERVING",
                            details={"witness": [x, z1, z2]},
                        )
        for a in elements:
            for b in elements:
                for c in elements:
                    if is_subset(b, self.ldiv(a, c)) != is_subset(a, self.rdiv(c, b)):
                        raise ResiduationPropertyError(
                            "Residuation property fails: b <= a\\c differs from a <= c/b",
                            error_code="RESIDUATION_PROPERTY",
                            details={"witness": [a, b, c]},
                        )

    def _check_unit(self, e: int) -> None:
        witness = self._unit_failure(e)
        if witness is not None:
            raise ResiduationPropertyError(
                f"{e} is not a unit",
                error_code="RESIDUATION_BAD_UNIT",
                details={"unit": e, "witness": witness},
            )

    def _unit_failure(self, e: int) -> Optional[int]:
        # both sides preserve meets, so meet-irreducibles suffice
        d = self.lattice
        for p in range(d.base.n):
            z = _meet_irreducible(d, p)
            if self.ldiv(e, z) != z or self.rdiv(z, e) != z:
                return z
        return None

    @cached_property
    def unit(self) -> Optional[int]:
        if self._given_unit is not None:
            return self._given_unit
        units = [e for e in self.lattice.elements if self._unit_failure(e) is None]
        if len(units) > 1:
            raise ResiduationPropertyError(
                "Found more than one unit",
                error_code="RESIDUATION_UNITS_NOT_UNIQUE",
                details={"units": units},
            )
        return units[0] if units else None

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    @property
    def is_prime_unital(self) -> bool:
        return self.unit is not None and self.lattice.is_join_prime(self.unit)

    def mu_prime(self, p: int, q: int) -> int:
        """
        Product of the join-primes of base elements p and q.

        The least z with down[q] <= down[p]\\z; {z | ...} is a filter, so greedy
        descent through lower covers reaches its minimum.
        """
        key = (p, q)
        if key in self._mcache:
            return self._mcache[key]
        d = self.lattice
        if self.multiplication is not None:
            z = self.multiplication.value((p, q))
        elif self._prime_product is not None:
            z = self._prime_product(p, q)
        else:
            z = d.top
            target = d.primes[q]
            lowered = True
            while lowered:
                lowered = False
                for m in d.base.maximal(z):
                    candidate = z & ~(1 << m)
                    if is_subset(target, self.ldiv(d.primes[p], candidate)):
                        z = candidate
                        lowered = True
                        break
        self._mcache[key] = z
        return z

    def mu(self, x: int, y: int) -> int:
        """mu(x (x) y): join of mu over the prime pairs below."""
        out = 0
        for p in self.lattice.base.maximal(x):
            for q in self.lattice.base.maximal(y):
                out |= self.mu_prime(p, q)
        return out


def from_multiplication(
    d: FiniteDistLattice,
    table: Union[Operator, Sequence[int]],
    unit: Optional[int] = None,
    validate: bool = True,
) -> ResiduationAlgebra:
    """
    Residuals of a join-bilinear multiplication given on prime pairs.

    table[p * n + q] is mu(down p, down q); it must be monotone, which the
    (2, 1)-operator check enforces.
    """
    op = table if isinstance(table, Operator) else Operator(d, 2, 1, tuple(table))
    n = d.base.n

    def ldiv(x: int, z: int) -> int:
        return sum(
            1 << q
            for q in range(n)
            if all(is_subset(op.table[p * n + q], z) for p in iter_bits(x))
        )

    def rdiv(z: int, y: int) -> int:
        return sum(
            1 << p
            for p in range(n)
            if all(is_subset(op.table[p * n + q], z) for q in iter_bits(y))
        )

    return ResiduationAlgebra(d, ldiv, rdiv, unit=unit, multiplication=op, validate=validate)


def heyting_algebra(d: FiniteDistLattice) -> ResiduationAlgebra:
    """a\\c = a -> c = c/a; the unit is top."""
    return ResiduationAlgebra(d, d.heyting, lambda c, a: d.heyting(a, c))


def boolean_negation_algebra(d: FiniteDistLattice) -> ResiduationAlgebra:
    """x\\top = top and x\\z = not x otherwise; symmetric on the right."""
    if not d.is_boolean:
        raise ResiduationPropertyError(
            "Negation algebra needs a Boolean lattice", error_code="RESIDUATION_NOT_BOOLEAN"
        )

    def ldiv(x: int, z: int) -> int:
        return d.top if z == d.top else d.complement(x)

    def rdiv(z: int, y: int) -> int:
        return d.top if z == d.top else d.complement(y)

    return ResiduationAlgebra(d, ldiv, rdiv)


def multiplication_operator(r: ResiduationAlgebra) -> Operator:
    """The (2, 1)-operator mu on prime pairs."""
    if r.multiplication is not None:
        return r.multiplication
    return Operator.from_function(r.lattice, 2, 1, lambda b: r.mu_prime(b[0], b[1]))


@dataclass(frozen=True)
class Comonoid:
    """
    Meet-preserving comultiplication into the tensor square.

    gamma[i] is the tensor-form image of lattice.elements[i]; counit is the
    meet-preserving map to the two-element lattice, when one exists.
    """

    lattice: FiniteDistLattice
    gamma: Tuple[int, ...]
    counit: Optional[LatticeMap] = None

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(int(v) for v in self.gamma))
        square = self.square
        if len(self.gamma) != self.lattice.size:
            raise ResiduationPropertyError(
                f"Comultiplication has {len(self.gamma)} values for {self.lattice.size} elements",
                error_code="COMONOID_BAD_TABLE",
            )
        for value in self.gamma:
            square.check_element(value)
        if self(self.lattice.top) != square.top:
            raise ResiduationPropertyError(
                "Comultiplication must preserve top", error_code="COMONOID_NOT_MEET_PRESERVING"
            )
        for x, y in self.lattice.pairs():
            if self(x & y) != self(x) & self(y):
                raise ResiduationPropertyError(
                    "Comultiplication must preserve binary meets",
                    error_code="COMONOID_NOT_MEET_PRESERVING",
                    details={"witness": [x, y]},
                )

    @cached_property
    def square(self) -> TensorProduct:
        return tensor_power(self.lattice, 2)

    def __call__(self, z: int) -> int:
        return self.gamma[self.lattice.index[z]]

    def as_map(self) -> LatticeMap:
        return LatticeMap(self.lattice, self.square, self.gamma)

    def barred(self, z: int) -> int:
        """Box-form image: the upset of prime pairs excluded by gamma(z)."""
        return self.square.top & ~self(z)

    def is_pure(self) -> bool:
        return self.as_map().is_join_preserving()

    def counit_unit(self) -> Optional[int]:
        """Left adjoint of the counit at top: the least x with counit(x) = top."""
        if self.counit is None:
            return None
        return self.lattice.meet_all(
            x for x in self.lattice.elements if self.counit(x) == TWO.top
        )


def counit_of(d: FiniteDistLattice, e: int) -> LatticeMap:
    """Right adjoint of e: 2 -> D, x -> [e <= x]."""
    return LatticeMap.from_function(d, TWO, lambda x: TWO.top if is_subset(e, x) else TWO.bottom)


def gamma_from_residuals(r: ResiduationAlgebra) -> Comonoid:
    """
    gamma(z) = join over primes p of down p (x) (down p \\ z).

    Cross-checked against the right adjoint of mu, {(p, q) | mu(p, q) <= z}.
    """
    d = r.lattice
    square = tensor_power(d, 2)
    n = d.base.n
    table: List[int] = []
    for z in d.elements:
        formula = 0
        for p, prime in enumerate(d.primes):
            formula |= square.pure((prime, r.ldiv(prime, z)))
        adjoint = sum(
            1 << (p * n + q)
            for p in range(n)
            for q in range(n)
            if is_subset(r.mu_prime(p, q), z)
        )
        if formula != adjoint:
            raise DualityCheckError(
                "Comultiplication formula disagrees with the adjoint of mu",
                error_code="GAMMA_MISMATCH",
                details={"element": z, "formula": formula, "adjoint": adjoint},
            )
        table.append(formula)
    counit = counit_of(d, r.unit) if r.unit is not None else None
    return Comonoid(d, tuple(table), counit)


def residuals_from_gamma(c: Comonoid) -> ResiduationAlgebra:
    """x\\z = x -o gamma(z) and z/y = gamma(z) o- y."""
    square = c.square
    return ResiduationAlgebra(
        c.lattice,
        lambda x, z: limp(square, x, c(z)),
        lambda z, y: rimp(square, c(z), y),
        unit=c.counit_unit(),
    )


def mu_from_residuals(r: ResiduationAlgebra) -> LatticeMap:
    """mu on the tensor square, checked to be left adjoint to gamma."""
    d = r.lattice
    square = tensor_power(d, 2)
    n = d.base.n

    def apply(t: int) -> int:
        out = 0
        for index in iter_bits(t):
            p, q = divmod(index, n)
            out |= r.mu_prime(p, q)
        return out

    mu = LatticeMap.from_function(square, d, apply)
    gamma = gamma_from_residuals(r).as_map()
    if not is_adjunction(mu, gamma):
        raise DualityCheckError(
            "Multiplication is not left adjoint to the comultiplication",
            error_code="MU_GAMMA_NOT_ADJOINT",
        )
    return mu
