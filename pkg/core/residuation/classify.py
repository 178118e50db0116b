"""
Structural classification of finite residuation algebras.

Every flag with more than one known characterization is computed each way and
the verdicts are compared; a disagreement raises ClassificationMismatchError.
"""

import logging
from dataclasses import asdict, dataclass
from typing import Dict, Optional, Tuple

from core.exceptions import ClassificationMismatchError
from core.order import is_subset
from core.tensor import BoxMap, box_map

from .algebra import ResiduationAlgebra, gamma_from_residuals

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResiduationFlags:
    pure: bool
    associative: bool
    unital: bool
    prime_unital: bool
    derivation: bool
    join_preserving_at_primes: bool

    def to_dict(self) -> Dict[str, bool]:
        return asdict(self)


def _agree(name: str, verdicts: Dict[str, bool]) -> bool:
    values = set(verdicts.values())
    if len(values) != 1:
        raise ClassificationMismatchError(
            f"Equivalent characterizations of '{name}' disagree",
            error_code="RESIDUATION_CLASSIFICATION_MISMATCH",
            details={"property": name, "verdicts": verdicts},
        )
    return values.pop()


# Purity


def gamma_is_pure(r: ResiduationAlgebra) -> bool:
    """The comultiplication preserves bottom and binary joins."""
    return gamma_from_residuals(r).is_pure()


def residuals_pure_at_primes(r: ResiduationAlgebra) -> bool:
    """p\\(-) and (-)/p preserve bottom and binary joins for every join-prime p."""
    d = r.lattice
    for p in d.primes:
        if r.ldiv(p, d.bottom) != d.bottom or r.rdiv(d.bottom, p) != d.bottom:
            return False
        for x, y in d.pairs():
            if r.ldiv(p, x | y) != r.ldiv(p, x) | r.ldiv(p, y):
                return False
            if r.rdiv(x | y, p) != r.rdiv(x, p) | r.rdiv(y, p):
                return False
    return True


def mu_preserves_primes(r: ResiduationAlgebra) -> bool:
    """mu sends every pair of join-primes to a join-prime."""
    d = r.lattice
    n = d.base.n
    return all(d.is_join_prime(r.mu_prime(p, q)) for p in range(n) for q in range(n))


def is_pure(r: ResiduationAlgebra) -> bool:
    return _agree(
        "pure",
        {
            "gamma": gamma_is_pure(r),
            "residuals": residuals_pure_at_primes(r),
            "mu": mu_preserves_primes(r),
        },
    )


# Associativity


def residuals_associative(r: ResiduationAlgebra) -> bool:
    """x\\(z/y) = (x\\z)/y for all x, y, z."""
    elements = r.lattice.elements
    return all(
        r.ldiv(x, r.rdiv(z, y)) == r.rdiv(r.ldiv(x, z), y)
        for x in elements
        for y in elements
        for z in elements
    )


def gamma_coassociative(r: ResiduationAlgebra) -> bool:
    """(gamma [x] id) gamma = (id [x] gamma) gamma in box form."""
    d = r.lattice
    c = gamma_from_residuals(r)
    barred = BoxMap.from_function(d, (d.base, d.base), c.barred)
    ident = BoxMap.identity(d)
    for z in d.elements:
        upset = c.barred(z)
        if box_map([barred, ident], upset) != box_map([ident, barred], upset):
            return False
    return True


def mu_associative(r: ResiduationAlgebra) -> bool:
    """mu(mu(p, q), s) = mu(p, mu(q, s)) on join-primes."""
    d = r.lattice
    n = d.base.n
    for p in range(n):
        for q in range(n):
            for s in range(n):
                left = r.mu(r.mu_prime(p, q), d.primes[s])
                right = r.mu(d.primes[p], r.mu_prime(q, s))
                if left != right:
                    return False
    return True


def is_associative(r: ResiduationAlgebra) -> bool:
    return _agree(
        "associative",
        {
            "residuals": residuals_associative(r),
            "gamma": gamma_coassociative(r),
            "mu": mu_associative(r),
        },
    )


def join_preserving_at_primes(r: ResiduationAlgebra) -> Optional[Tuple[int, int, int, int]]:
    """
    First (p, a, b, c) breaking join preservation at primes, or None.

    For every prime filter F (the upset of a join-prime p), a in F and b, c:
    some a' in F has a\\(b \\/ c) <= (a'\\b) \\/ (a'\\c).
    """
    d = r.lattice
    for p, prime in enumerate(d.primes):
        filter_ = [a for a in d.elements if is_subset(prime, a)]
        for a in filter_:
            for b, c in d.pairs():
                lhs = r.ldiv(a, b | c)
                if not any(
                    is_subset(lhs, r.ldiv(a2, b) | r.ldiv(a2, c)) for a2 in filter_
                ):
                    return p, a, b, c
    return None


def classify(r: ResiduationAlgebra) -> ResiduationFlags:
    pure = is_pure(r)
    associative = is_associative(r)
    prime_unital = r.is_prime_unital
    flags = ResiduationFlags(
        pure=pure,
        associative=associative,
        unital=r.is_unital,
        prime_unital=prime_unital,
        derivation=pure and associative and prime_unital,
        join_preserving_at_primes=join_preserving_at_primes(r) is None,
    )
    logger.debug(f"Classified {r!r}: {flags}")
    return flags
