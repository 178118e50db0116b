#!/usr/bin/env python3
"""
Structure File Schema
One document per file, JSON or YAML, discriminated by its `kind` field.
Index ranges are checked here; algebraic laws are checked when the
structure is built.
"""

import logging
from pathlib import Path
from typing import Annotated, Any, Dict, List, Literal, Optional, Tuple, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError, model_validator

from core.exceptions import SchemaError

logger = logging.getLogger(__name__)


class _Spec(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


def _in_range(values, bound: int, what: str) -> None:
    for v in values:
        if not 0 <= v < bound:
            raise ValueError(f"{what} {v} out of range 0..{bound - 1}")


class PosetSpec(_Spec):
    """leq lists generating pairs [i, j] meaning i <= j; closure is implicit."""

    kind: Literal["poset"] = "poset"
    n: int = Field(ge=0)
    leq: List[Tuple[int, int]] = []
    labels: Optional[List[str]] = None

    @model_validator(mode="after")
    def _check(self) -> "PosetSpec":
        _in_range((v for pair in self.leq for v in pair), self.n, "element")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError(f"expected {self.n} labels")
        return self


class LatticeSpec(_Spec):
    kind: Literal["lattice"]
    base: PosetSpec


class AbstractLatticeSpec(_Spec):
    """Order of the lattice elements themselves, as generating pairs."""

    kind: Literal["abstract-lattice"]
    n: int = Field(ge=1)
    leq: List[Tuple[int, int]] = []

    @model_validator(mode="after")
    def _check(self) -> "AbstractLatticeSpec":
        _in_range((v for pair in self.leq for v in pair), self.n, "element")
        return self


class OperatorEntry(_Spec):
    input: List[int]
    output: List[List[int]]


class OperatorSpec(_Spec):
    """
    Join-operator by its values on prime k-tuples. Each output lists prime
    n-tuples whose downset closure is the value; every input appears once.
    """

    kind: Literal["operator"]
    base: PosetSpec
    k: int = Field(ge=0)
    n: int = Field(ge=0)
    table: List[OperatorEntry]

    @model_validator(mode="after")
    def _check(self) -> "OperatorSpec":
        primes = self.base.n
        if len(self.table) != primes**self.k:
            raise ValueError(f"table needs {primes ** self.k} entries")
        seen = set()
        for entry in self.table:
            if len(entry.input) != self.k or any(len(t) != self.n for t in entry.output):
                raise ValueError("tuple arity does not match (k, n)")
            _in_range(entry.input, primes, "prime")
            _in_range((v for t in entry.output for v in t), primes, "prime")
            seen.add(tuple(entry.input))
        if len(seen) != len(self.table):
            raise ValueError("duplicate input tuples")
        return self


class RelationSpec(_Spec):
    """Pairs [a, b] of a prime n-tuple and a prime k-tuple."""

    kind: Literal["relation"]
    base: PosetSpec
    k: int = Field(ge=0)
    n: int = Field(ge=0)
    pairs: List[Tuple[List[int], List[int]]] = []

    @model_validator(mode="after")
    def _check(self) -> "RelationSpec":
        for a, b in self.pairs:
            if len(a) != self.n or len(b) != self.k:
                raise ValueError("tuple arity does not match (k, n)")
            _in_range(list(a) + list(b), self.base.n, "prime")
        return self


class MonoidSpec(_Spec):
    """mult[x][y] is x.y; leq orders the carrier, discrete when omitted."""

    kind: Literal["monoid"] = "monoid"
    n: int = Field(ge=1)
    mult: List[List[int]]
    unit: int
    leq: List[Tuple[int, int]] = []
    labels: Optional[List[str]] = None

    @model_validator(mode="after")
    def _check(self) -> "MonoidSpec":
        if len(self.mult) != self.n or any(len(row) != self.n for row in self.mult):
            raise ValueError(f"mult must be {self.n} x {self.n}")
        _in_range((v for row in self.mult for v in row), self.n, "element")
        _in_range([self.unit], self.n, "unit")
        _in_range((v for pair in self.leq for v in pair), self.n, "element")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError(f"expected {self.n} labels")
        return self


class MonoidHomSpec(_Spec):
    kind: Literal["monoid-hom"]
    dom: MonoidSpec
    cod: MonoidSpec
    table: List[int]

    @model_validator(mode="after")
    def _check(self) -> "MonoidHomSpec":
        if len(self.table) != self.dom.n:
            raise ValueError(f"table needs {self.dom.n} entries")
        _in_range(self.table, self.cod.n, "element")
        return self


class RelationalMorphismSpec(_Spec):
    """images[m] generates rho(m) upward in the codomain."""

    kind: Literal["relational-morphism"]
    dom: MonoidSpec
    cod: MonoidSpec
    images: List[List[int]]

    @model_validator(mode="after")
    def _check(self) -> "RelationalMorphismSpec":
        if len(self.images) != self.dom.n:
            raise ValueError(f"images needs {self.dom.n} entries")
        _in_range((v for image in self.images for v in image), self.cod.n, "element")
        return self


class MonotoneMapSpec(_Spec):
    kind: Literal["monotone-map"]
    dom: PosetSpec
    cod: PosetSpec
    table: List[int]

    @model_validator(mode="after")
    def _check(self) -> "MonotoneMapSpec":
        if len(self.table) != self.dom.n:
            raise ValueError(f"table needs {self.dom.n} entries")
        _in_range(self.table, self.cod.n, "element")
        return self


class LatticeHomSpec(_Spec):
    """primes[p] lists generators of the image of the join-prime of dom element p."""

    kind: Literal["lattice-hom"]
    dom: PosetSpec
    cod: PosetSpec
    primes: List[List[int]]

    @model_validator(mode="after")
    def _check(self) -> "LatticeHomSpec":
        if len(self.primes) != self.dom.n:
            raise ValueError(f"primes needs {self.dom.n} entries")
        _in_range((v for image in self.primes for v in image), self.cod.n, "element")
        return self


class DFASpec(_Spec):
    """delta[state][i] is the target on the i-th alphabet symbol."""

    kind: Literal["dfa"]
    states: int = Field(ge=1)
    alphabet: Union[str, List[str]]
    delta: List[List[int]]
    initial: int = 0
    accepting: List[int] = []

    @model_validator(mode="after")
    def _check(self) -> "DFASpec":
        width = len(self.alphabet)
        if len(self.delta) != self.states or any(len(row) != width for row in self.delta):
            raise ValueError(f"delta must be {self.states} x {width}")
        _in_range((v for row in self.delta for v in row), self.states, "state")
        _in_range([self.initial] + list(self.accepting), self.states, "state")
        return self


class RegexSpec(_Spec):
    kind: Literal["regex"]
    pattern: str
    alphabet: Union[str, List[str]] = "ab"


class MorphismEntry(_Spec):
    id: str
    dom: str
    cod: str


class CategorySpec(_Spec):
    """compose lists [f, g, h] meaning f then g is h, by morphism id."""

    kind: Literal["category"]
    objects: List[str]
    morphisms: List[MorphismEntry]
    compose: List[Tuple[str, str, str]] = []
    identities: List[str]

    @model_validator(mode="after")
    def _check(self) -> "CategorySpec":
        objects = set(self.objects)
        ids = [m.id for m in self.morphisms]
        if len(set(ids)) != len(ids) or len(objects) != len(self.objects):
            raise ValueError("duplicate object or morphism names")
        for m in self.morphisms:
            if m.dom not in objects or m.cod not in objects:
                raise ValueError(f"morphism {m.id} has an unknown endpoint")
        known = set(ids)
        for name in [v for triple in self.compose for v in triple] + list(self.identities):
            if name not in known:
                raise ValueError(f"unknown morphism {name}")
        if len(self.identities) != len(self.objects):
            raise ValueError("one identity per object is required")
        return self


class RelmonSpec(_Spec):
    """comp[x][y] lists the elements of x o y; E lists the identities."""

    kind: Literal["relmon", "relational-monoid"]
    n: int = Field(ge=1)
    comp: List[List[List[int]]]
    identities: List[int] = Field(alias="E")
    labels: Optional[List[str]] = None

    @model_validator(mode="after")
    def _check(self) -> "RelmonSpec":
        if len(self.comp) != self.n or any(len(row) != self.n for row in self.comp):
            raise ValueError(f"comp must be {self.n} x {self.n}")
        _in_range((v for row in self.comp for cell in row for v in cell), self.n, "element")
        _in_range(self.identities, self.n, "element")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError(f"expected {self.n} labels")
        return self


class ResiduationAlgebraSpec(_Spec):
    """mu[p * n + q] generates the product of the join-primes of p and q."""

    kind: Literal["residuation-algebra"]
    base: PosetSpec
    mu: List[List[int]]
    unit: Optional[List[int]] = None

    @model_validator(mode="after")
    def _check(self) -> "ResiduationAlgebraSpec":
        n = self.base.n
        if len(self.mu) != n * n:
            raise ValueError(f"mu needs {n * n} entries")
        _in_range((v for value in self.mu for v in value), n, "element")
        _in_range(self.unit or [], n, "element")
        return self


StructureFile = Annotated[
    Union[
        PosetSpec,
        LatticeSpec,
        AbstractLatticeSpec,
        OperatorSpec,
        RelationSpec,
        MonoidSpec,
        MonoidHomSpec,
        RelationalMorphismSpec,
        MonotoneMapSpec,
        LatticeHomSpec,
        DFASpec,
        RegexSpec,
        CategorySpec,
        RelmonSpec,
        ResiduationAlgebraSpec,
    ],
    Field(discriminator="kind"),
]

_ADAPTER: TypeAdapter = TypeAdapter(StructureFile)


def parse_structure(data: Any) -> BaseModel:
    """Validate a decoded document against the schema."""
    try:
        return _ADAPTER.validate_python(data)
    except ValidationError as e:
        raise SchemaError(
            "Structure file does not match the schema",
            error_code="SCHEMA_INVALID",
            details={
                "errors": [
                    {"field": ".".join(str(p) for p in err["loc"]), "message": err["msg"]}
                    for err in e.errors()
                ]
            },
        ) from e


def load_structure(path: Union[str, Path]) -> BaseModel:
    """Read a JSON or YAML structure file; JSON goes through the YAML loader."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data: Dict[str, Any] = yaml.safe_load(handle)
    except OSError as e:
        raise SchemaError(
            f"Cannot read {path}: {e.strerror}",
            error_code="INPUT_UNREADABLE",
            details={"path": str(path)},
        ) from e
    except (yaml.YAMLError, UnicodeDecodeError) as e:
        raise SchemaError(
            f"{path} is neither JSON nor YAML",
            error_code="INPUT_NOT_PARSEABLE",
            details={"path": str(path), "error": str(e)},
        ) from e
    spec = parse_structure(data)
    logger.debug(f"Loaded {spec.kind} structure from {path}")
    return spec
