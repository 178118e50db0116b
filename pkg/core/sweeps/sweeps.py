#!/usr/bin/env python3
"""
Exhaustive Sweeps
Each suite walks every structure up to a size bound and checks that the two
sides of a duality agree. Cross-check failures are collected with their
witnesses instead of stopping the sweep.
"""

import logging
import time
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Any, Callable, Dict, Iterable, List, Tuple

import numpy as np

from core.catdual import (
    categories_isomorphic,
    category_to_relmon,
    check_functor_correspondence,
    check_functor_duality,
    check_relmon_duality,
    dualize_functor,
    enumerate_categories,
    enumerate_relational_structures,
    enumerate_relmon_morphisms,
    enumerate_relmons,
    is_functorial,
    relmon_to_category,
    validate_relmon,
)
from core.config import DualityConfig
from core.correspondence import ModalProperty, check_correspondence
from core.exceptions import DualityError
from core.lattice import (
    AbstractLattice,
    FiniteDistLattice,
    canonicalize,
    dual_poset,
    enumerate_homs,
)
from core.monoids import (
    RelationalMonoidMorphism,
    check_relational_morphism,
    derivation_to_monoid,
    dualize_relational_morphism,
    enumerate_ordered_monoids,
)
from core.monoids import is_isomorphic as monoids_isomorphic
from core.monoids import monoid_to_derivation
from core.operators import (
    Operator,
    check_hom_duality,
    classify,
    dualize_operator,
    dualize_relation,
    enumerate_operators,
    enumerate_unary_operators,
)
from core.order import (
    enumerate_order_relations,
    enumerate_posets,
    enumerate_posets_by_downsets,
    enumerate_posets_up_to,
)
from core.order import is_isomorphic as posets_isomorphic
from core.order import is_subset, iter_bits
from core.reglang import (
    LANGUAGE_CORPUS,
    gamma_of_language,
    is_minimal,
    recognition_failure,
    residual_failure,
    residuation_ideal_of,
    saturation_failure,
    syntactic_monoid,
)
from core.residuation import (
    check_corelational,
    check_pure_morphism,
    enumerate_residuation_algebras,
    gamma_from_residuals,
    mu_from_residuals,
    residuals_from_gamma,
)
from core.residuation import classify as classify_residuation
from core.tensor import omega, omega_inverse, tensor_power

logger = logging.getLogger(__name__)

# Lattices of the residuation suite have at most this many elements.
RESIDUATION_LATTICE_BOUND = 4
# Birkhoff round trips run two sizes past the general bound.
BIRKHOFF_EXTRA = 2
# Every distributive lattice up to this size is canonicalized, whatever max_size is.
ABSTRACT_LATTICE_BOUND = 8
EXHAUSTIVE_BINARY_BOUND = 2
RELATIONAL_MORPHISM_BOUND = 2
STRUCTURE_BOUND = 2
FUNCTOR_MORPHISM_BOUND = 4


@dataclass
class SweepResult:
    """Outcome of one suite; failures hold the first witness of each failed case."""

    name: str
    checked: int = 0
    passed: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures and self.passed == self.checked

    def to_dict(self, timings: bool = True) -> Dict[str, Any]:
        out = asdict(self)
        out["ok"] = self.ok
        if not timings:
            out.pop("seconds")
        return out


class _Suite:
    """Counts checks and turns False verdicts and DualityErrors into failures."""

    def __init__(self, name: str):
        self.result = SweepResult(name)
        self._started = time.perf_counter()

    def check(self, case: str, fn: Callable[[], bool]) -> None:
        self.result.checked += 1
        try:
            verdict = fn()
        except DualityError as e:
            self.result.failures.append({"case": case, **e.to_dict()})
            return
        if verdict:
            self.result.passed += 1
        else:
            self.result.failures.append(
                {"case": case, "error_code": "CHECK_FAILED", "message": "check returned False"}
            )

    def finish(self) -> SweepResult:
        self.result.seconds = time.perf_counter() - self._started
        r = self.result
        logger.info(
            f"Sweep {r.name}: {r.passed}/{r.checked} passed, "
            f"{len(r.failures)} failures in {r.seconds:.2f}s"
        )
        return r


def _completes(fn: Callable[..., Any], *args: Any) -> bool:
    """Run a cross-check whose only failure mode is raising."""
    fn(*args)
    return True


def _lattices(max_size: int) -> Iterable[Tuple[int, FiniteDistLattice]]:
    for i, base in enumerate(enumerate_posets_up_to(max_size)):
        yield i, FiniteDistLattice(base)


# Birkhoff


def _shuffled_abstract(d: FiniteDistLattice, rng: np.random.Generator) -> AbstractLattice:
    elements = d.elements
    order = rng.permutation(len(elements))
    leq = np.array(
        [[is_subset(elements[i], elements[j]) for j in order] for i in order], dtype=bool
    )
    return AbstractLattice(leq)


def _birkhoff_round_trip(d: FiniteDistLattice, rng: np.random.Generator) -> bool:
    """Rebuild the poset from the join-primes of a relabelled copy of its lattice."""
    a = _shuffled_abstract(d, rng)
    lattice, iso = canonicalize(a)
    if len(set(iso)) != a.n:
        return False
    preserved = all(
        a.order.le(x, y) == is_subset(iso[x], iso[y]) for x in range(a.n) for y in range(a.n)
    )
    return preserved and posets_isomorphic(dual_poset(lattice), d.base)


def sweep_birkhoff(config: DualityConfig) -> SweepResult:
    suite = _Suite("birkhoff")
    rng = np.random.default_rng(config.seed)
    covered = config.max_size + BIRKHOFF_EXTRA
    for n in range(covered + 1):
        for i, base in enumerate(enumerate_posets(n)):
            d = FiniteDistLattice(base)
            suite.check(f"poset n={n} #{i}", lambda d=d: _birkhoff_round_trip(d, rng))
    for i, base in enumerate(enumerate_posets_by_downsets(ABSTRACT_LATTICE_BOUND)):
        if base.n > covered:
            d = FiniteDistLattice(base)
            suite.check(f"lattice size={d.size} #{i}", lambda d=d: _birkhoff_round_trip(d, rng))
    return suite.finish()


# Tensor


def _omega_round_trip(d: FiniteDistLattice, limit: int) -> bool:
    square = tensor_power(d, 2)
    return all(omega_inverse(omega(square, t, limit), limit) == t for t in square.elements)


def sweep_tensor(config: DualityConfig) -> SweepResult:
    suite = _Suite("tensor")
    for i, d in _lattices(min(config.max_size, EXHAUSTIVE_BINARY_BOUND)):
        suite.check(f"lattice #{i}", lambda d=d: _omega_round_trip(d, config.omega_formula_limit))
    return suite.finish()


# Operators


def _operator_round_trip(op: Operator) -> bool:
    classify(op)
    return dualize_relation(dualize_operator(op)) == op


def _random_operator(d: FiniteDistLattice, k: int, n: int, rng: np.random.Generator) -> Operator:
    """Random values on prime tuples, closed downward so the table is monotone."""
    shape = Operator(d, k, n, (0,) * (d.base.n**k))
    domain = shape.domain.base
    values = shape.codomain.elements
    raw = [values[rng.integers(len(values))] for _ in range(domain.n)]
    table = []
    for i in range(domain.n):
        entry = 0
        for j in iter_bits(domain.down[i]):
            entry |= raw[j]
        table.append(entry)
    return Operator(d, k, n, tuple(table))


def sweep_operators(config: DualityConfig) -> SweepResult:
    suite = _Suite("operators")
    rng = np.random.default_rng(config.seed)
    for i, d in _lattices(config.max_size):
        for j, op in enumerate(enumerate_unary_operators(d)):
            suite.check(f"lattice #{i} unary #{j}", lambda op=op: _operator_round_trip(op))
        if d.base.n <= EXHAUSTIVE_BINARY_BOUND:
            binary = enumerate_operators(d, 2, 1)
        else:
            binary = (_random_operator(d, 2, 1, rng) for _ in range(config.sample_size))
        for j, op in enumerate(binary):
            suite.check(f"lattice #{i} binary #{j}", lambda op=op: _operator_round_trip(op))
    small = list(_lattices(min(config.max_size, EXHAUSTIVE_BINARY_BOUND)))
    for (i, d), (j, e) in product(small, small):
        ops_d = list(enumerate_unary_operators(d))
        ops_e = list(enumerate_unary_operators(e))
        for f in enumerate_homs(d, e):
            for a, b in product(ops_d, ops_e):
                suite.check(
                    f"hom #{i}->#{j}", lambda f=f, a=a, b=b: _completes(check_hom_duality, f, a, b)
                )
    return suite.finish()


# Correspondence


def sweep_correspondence_suite(config: DualityConfig) -> SweepResult:
    suite = _Suite("correspondence")
    for i, d in _lattices(config.max_size):
        for j, h in enumerate(enumerate_unary_operators(d)):
            for prop in ModalProperty:
                suite.check(
                    f"lattice #{i} operator #{j} {prop.value}",
                    lambda h=h, prop=prop: check_correspondence(h, prop).agree,
                )
    return suite.finish()


# Residuation


def _residuation_round_trips(r) -> bool:
    classify_residuation(r)
    mu_from_residuals(r)
    return residuals_from_gamma(gamma_from_residuals(r)) == r


def sweep_residuation(config: DualityConfig) -> SweepResult:
    suite = _Suite("residuation")
    for i, d in _lattices(config.max_size):
        if d.size > RESIDUATION_LATTICE_BOUND:
            continue
        for j, r in enumerate(enumerate_residuation_algebras(d)):
            suite.check(f"lattice #{i} algebra #{j}", lambda r=r: _residuation_round_trips(r))
    unital = [
        (f"lattice #{i} algebra #{j}", r)
        for i, d in _lattices(min(config.max_size, STRUCTURE_BOUND))
        for j, r in enumerate(enumerate_residuation_algebras(d))
        if r.unit is not None
    ]
    for (source, r), (target, s) in product(unital, unital):
        for k, f in enumerate(enumerate_homs(r.lattice, s.lattice)):
            suite.check(
                f"pure {source} -> {target} hom #{k}",
                lambda f=f, r=r, s=s: _completes(check_pure_morphism, f, r, s),
            )
    return suite.finish()


# Monoids


def _relational_agrees(rho: RelationalMonoidMorphism, r, s) -> bool:
    relational = check_relational_morphism(rho)
    dual = dualize_relational_morphism(rho, strict=False)
    corelational = dual.preserves_top() and check_corelational(dual, r, s)
    return relational == corelational


def sweep_monoids(config: DualityConfig) -> SweepResult:
    suite = _Suite("monoids")
    for n in range(1, config.max_size + 1):
        for i, m in enumerate(enumerate_ordered_monoids(n)):
            suite.check(
                f"monoid n={n} #{i}",
                lambda m=m: monoids_isomorphic(derivation_to_monoid(monoid_to_derivation(m)), m),
            )
    small = [
        m for n in range(1, RELATIONAL_MORPHISM_BOUND + 1) for m in enumerate_ordered_monoids(n)
    ]
    algebras = [monoid_to_derivation(m) for m in small]
    for (i, m), (j, k) in product(enumerate(small), enumerate(small)):
        for rel in enumerate_order_relations(m.carrier, k.carrier):
            rho = RelationalMonoidMorphism(m, k, rel)
            suite.check(
                f"relational #{i}->#{j} {list(rel.images)}",
                lambda rho=rho, r=algebras[j], s=algebras[i]: _relational_agrees(rho, r, s),
            )
    return suite.finish()


# Regular languages


def _language_checks(s, word_bound: int) -> bool:
    gamma_of_language(s)
    gamma_of_language(s, ordered=True)
    return (
        recognition_failure(s, word_bound) is None
        and residual_failure(s, word_bound) is None
        and saturation_failure(s, word_bound) is None
        and is_minimal(s)
    )


def _ideal_checks(s, max_size: int) -> bool:
    for ordered in (False, True):
        ideal = residuation_ideal_of(s, ordered=ordered)
        if not ideal.is_whole:
            return False
        if s.n <= max_size and not monoids_isomorphic(
            ideal.dual_monoid(), s.to_ordered_monoid(ordered)
        ):
            return False
    return True


def sweep_reglang(config: DualityConfig) -> SweepResult:
    suite = _Suite("reglang")
    for lang in LANGUAGE_CORPUS:
        s = syntactic_monoid(lang.compile())
        suite.check(f"{lang.name} words", lambda s=s: _language_checks(s, config.word_bound))
        suite.check(f"{lang.name} ideal", lambda s=s: _ideal_checks(s, config.max_size))
    return suite.finish()


# Categories


def _category_round_trip(c) -> bool:
    return categories_isomorphic(relmon_to_category(category_to_relmon(c)), c)


def _relmon_round_trip(m) -> bool:
    check_relmon_duality(m)
    if validate_relmon(m).is_category:
        return category_to_relmon(relmon_to_category(m)) == m
    return True


def _functor_duality(f) -> bool:
    functorial = check_functor_duality(f)
    if functorial:
        dualize_functor(f)
    return functorial == is_functorial(f)


def sweep_catdual(config: DualityConfig) -> SweepResult:
    suite = _Suite("catdual")
    for n in range(1, STRUCTURE_BOUND + 1):
        for i, m in enumerate(enumerate_relational_structures(n)):
            suite.check(f"structure n={n} #{i}", lambda m=m: _completes(check_relmon_duality, m))
    for n in range(1, config.max_size + 1):
        for i, m in enumerate(enumerate_relmons(n)):
            suite.check(f"relmon n={n} #{i}", lambda m=m: _relmon_round_trip(m))
    categories = enumerate_categories()
    for i, c in enumerate(categories):
        suite.check(f"category #{i}", lambda c=c: _category_round_trip(c))
    small = [c for c in categories if c.n_morphisms <= FUNCTOR_MORPHISM_BOUND]
    for (i, c), (j, c2) in product(enumerate(small), enumerate(small)):
        for mapping in product(range(c2.n_morphisms), repeat=c.n_morphisms):
            suite.check(
                f"functor #{i}->#{j} {list(mapping)}",
                lambda c=c, c2=c2, mapping=mapping: _completes(
                    check_functor_correspondence, c, c2, mapping
                ),
            )
        for f in enumerate_relmon_morphisms(category_to_relmon(c), category_to_relmon(c2)):
            suite.check(f"dual #{i}->#{j} {list(f.table)}", lambda f=f: _functor_duality(f))
    return suite.finish()


SUITES: Dict[str, Callable[[DualityConfig], SweepResult]] = {
    "birkhoff": sweep_birkhoff,
    "tensor": sweep_tensor,
    "operators": sweep_operators,
    "correspondence": sweep_correspondence_suite,
    "residuation": sweep_residuation,
    "monoids": sweep_monoids,
    "reglang": sweep_reglang,
    "catdual": sweep_catdual,
}


def run_all(config: DualityConfig, names: Iterable[str] = ()) -> List[SweepResult]:
    """Run the named suites, or all of them, in the fixed SUITES order."""
    wanted = list(names) or list(SUITES)
    unknown = [name for name in wanted if name not in SUITES]
    if unknown:
        raise DualityError(
            f"Unknown sweep suites: {', '.join(unknown)}",
            error_code="SWEEP_UNKNOWN_SUITE",
            details={"known": list(SUITES)},
        )
    results = [SUITES[name](config) for name in SUITES if name in wanted]
    failed = sum(len(r.failures) for r in results)
    logger.info(f"Ran {len(results)} sweeps with {failed} failures")
    return results
