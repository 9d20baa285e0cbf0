"""
Literals, clauses, formulas and hypergraphs.

Literals are identified with the labels 1..2n of the point sets: the literal x_i has label 2i-1, its negation has label
2i. The negation of a label therefore is label+1 for odd and label-1 for even labels. In DIMACS files x_i is written
as i and its negation as -i.

A Formula stores its clauses as an (m x k) integer array of literal labels (sorted within each row) plus an (m x k)
array with the indices of the points the clause was generated from. Clause objects are views that are created on
request only.
"""

# pylint: disable=too-few-public-methods, unused-argument
from typing import Iterable, Optional, Sequence, Tuple

import attrs
import numpy as np
import numpy.typing as npt
from marshmallow import Schema, fields, post_load
from marshmallow_enum import EnumField  # type:ignore[import-untyped]

from geosat.models.analytic_values import ModelParams
from geosat.models.enums import BoundaryMode, Metric, ModelKind, Sign

NO_PROVENANCE = -1  #: provenance entry of clauses that were not generated from points (e.g. read from DIMACS)


def negate_labels(labels: npt.ArrayLike) -> np.ndarray:
    """
    maps literal labels to the labels of their negations (vectorized)
    """
    label_array = np.asarray(labels, dtype=np.int64)
    return np.where(label_array % 2 == 1, label_array + 1, label_array - 1)


def variables_of_labels(labels: npt.ArrayLike) -> np.ndarray:
    """
    maps literal labels to their (1-based) variable indices (vectorized)
    """
    return (np.asarray(labels, dtype=np.int64) + 1) // 2


@attrs.frozen(kw_only=True)
class LiteralId:
    """
    A variable x_i or its negation.
    """

    variable: int = attrs.field(validator=[attrs.validators.instance_of(int), attrs.validators.ge(1)])
    sign: Sign = attrs.field(default=Sign.POSITIVE, validator=attrs.validators.instance_of(Sign))

    @property
    def label(self) -> int:
        """the label in 1..2n (x_i -> 2i-1, not x_i -> 2i)"""
        return 2 * self.variable - 1 if self.sign == Sign.POSITIVE else 2 * self.variable

    @classmethod
    def from_label(cls, label: int) -> "LiteralId":
        """inverse of the label property"""
        if label < 1:
            raise ValueError(f"Literal labels start at 1 but got {label}")
        return cls(variable=(int(label) + 1) // 2, sign=Sign.POSITIVE if label % 2 == 1 else Sign.NEGATIVE)

    def negation(self) -> "LiteralId":
        """returns the complementary literal"""
        return LiteralId(variable=self.variable, sign=Sign.NEGATIVE if self.sign == Sign.POSITIVE else Sign.POSITIVE)

    @property
    def dimacs(self) -> int:
        """the DIMACS integer, i for x_i and -i for its negation"""
        return self.variable if self.sign == Sign.POSITIVE else -self.variable

    @classmethod
    def from_dimacs(cls, value: int) -> "LiteralId":
        """inverse of the dimacs property"""
        if value == 0:
            raise ValueError("0 terminates a DIMACS clause and is not a literal")
        return cls(variable=abs(int(value)), sign=Sign.POSITIVE if value > 0 else Sign.NEGATIVE)

    def __str__(self) -> str:
        return f"x{self.variable}" if self.sign == Sign.POSITIVE else f"-x{self.variable}"


@attrs.frozen(kw_only=True)
class Clause:
    """
    A disjunction of k literals in canonical (sorted) order together with the indices of the points it stems from.
    Duplicate and complementary literals are allowed.
    """

    literals: Tuple[LiteralId, ...] = attrs.field(
        converter=lambda lits: tuple(sorted(lits, key=lambda literal: literal.label)),
        validator=attrs.validators.min_len(2),
    )
    provenance: Tuple[int, ...] = attrs.field(converter=tuple, factory=tuple)

    @property
    def labels(self) -> Tuple[int, ...]:
        """the sorted literal labels"""
        return tuple(literal.label for literal in self.literals)

    def is_tautology(self) -> bool:
        """true iff the clause contains a literal and its negation"""
        labels = set(self.labels)
        return any(int(negate_labels(label)) in labels for label in labels)


def _sorted_rows(rows: np.ndarray) -> np.ndarray:
    if rows.shape[0] == 0:
        return rows
    return rows[np.lexsort(rows.T[::-1])]


def _label_matrix(value, width: int) -> np.ndarray:
    array = np.array(value, dtype=np.int64, copy=True)
    if array.size == 0:
        array = np.empty((0, width), dtype=np.int64)
    array.setflags(write=False)
    return array


@attrs.frozen(kw_only=True)
class GeneratorRecord:
    """
    Everything needed to regenerate a random object: the model, its parameters and the integer seed of the stream.
    A record without seed describes an object that was drawn from a caller supplied stream; it cannot be regenerated.
    """

    model: ModelKind = attrs.field(validator=attrs.validators.instance_of(ModelKind))
    n: int = attrs.field(validator=attrs.validators.instance_of(int))
    k: int = attrs.field(validator=attrs.validators.instance_of(int))
    d: int = attrs.field(validator=attrs.validators.instance_of(int))
    param: float = attrs.field(converter=float)  #: gamma, mu or r, see ModelParams
    metric: Metric = attrs.field(default=Metric.LINF, validator=attrs.validators.instance_of(Metric))
    boundary: BoundaryMode = attrs.field(
        default=BoundaryMode.CUBE, validator=attrs.validators.instance_of(BoundaryMode)
    )
    seed: Optional[int] = attrs.field(
        default=None, validator=attrs.validators.optional(attrs.validators.instance_of(int))
    )
    radius: Optional[float] = attrs.field(default=None, converter=attrs.converters.optional(float))

    def to_model_params(self) -> ModelParams:
        """converts the record into the parameter record used by the closed forms and the experiments"""
        return ModelParams(
            model=self.model,
            n=self.n,
            k=self.k,
            d=self.d,
            param=self.param,
            metric=self.metric,
            boundary_mode=self.boundary,
            radius=self.radius,
        )

    @classmethod
    def from_model_params(cls, params: ModelParams, seed: Optional[int]) -> "GeneratorRecord":
        """creates a record for the given parameters and seed"""
        return cls(
            model=params.model,
            n=params.n,
            k=params.k,
            d=params.d,
            param=params.param,
            metric=params.metric,
            boundary=params.boundary_mode,
            seed=seed,
            radius=params.radius,
        )


class GeneratorRecordSchema(Schema):
    """
    A schema to (de-)serialize GeneratorRecords. This is the JSON sidecar written next to generated files.
    """

    model = EnumField(ModelKind)
    n = fields.Integer()
    k = fields.Integer()
    d = fields.Integer()
    param = fields.Float()
    metric = EnumField(Metric, load_default=Metric.LINF)
    boundary = EnumField(BoundaryMode, load_default=BoundaryMode.CUBE)
    seed = fields.Integer(allow_none=True, load_default=None)
    radius = fields.Float(allow_none=True, load_default=None)

    @post_load
    def deserialize(self, data, **kwargs) -> GeneratorRecord:
        """
        Converts the barely typed data dictionary into an actual GeneratorRecord
        """
        return GeneratorRecord(**data)


@attrs.frozen(kw_only=True)
class Formula:
    """
    A multiset of k-clauses over the variables x_1..x_{n_vars}.
    Two clauses with the same literals but different provenance are two distinct clauses.
    """

    n_vars: int = attrs.field(validator=[attrs.validators.instance_of(int), attrs.validators.ge(0)])
    k: int = attrs.field(validator=[attrs.validators.instance_of(int), attrs.validators.ge(2)])
    #: shape (m, k), each row sorted ascending
    literal_labels: np.ndarray = attrs.field(eq=attrs.cmp_using(eq=np.array_equal))
    #: shape (m, k), the point indices each clause was generated from (NO_PROVENANCE if unknown)
    provenance: np.ndarray = attrs.field(eq=attrs.cmp_using(eq=np.array_equal))
    generator_record: Optional[GeneratorRecord] = attrs.field(default=None, eq=False)

    @classmethod
    def from_label_rows(
        cls,
        n_vars: int,
        k: int,
        rows: npt.ArrayLike,
        provenance: Optional[npt.ArrayLike] = None,
        generator_record: Optional[GeneratorRecord] = None,
    ) -> "Formula":
        """
        Creates a formula from literal label rows. The rows are sorted; the provenance is permuted along.
        :param n_vars: number of variables n (literal labels range over 1..2n)
        :param k: clause width
        :param rows: (m, k) literal labels in any order within a row
        :param provenance: (m, k) point indices aligned with rows; defaults to NO_PROVENANCE everywhere
        :param generator_record: how the formula was generated (if it was)
        """
        label_rows = np.array(rows, dtype=np.int64).reshape(-1, k)
        if provenance is None:
            provenance_rows = np.full(label_rows.shape, NO_PROVENANCE, dtype=np.int64)
        else:
            provenance_rows = np.array(provenance, dtype=np.int64).reshape(-1, k)
        order = np.argsort(label_rows, axis=1, kind="stable")
        return cls(
            n_vars=n_vars,
            k=k,
            literal_labels=np.take_along_axis(label_rows, order, axis=1),
            provenance=np.take_along_axis(provenance_rows, order, axis=1),
            generator_record=generator_record,
        )

    @classmethod
    def from_clauses(
        cls, n_vars: int, k: int, clauses: Iterable[Sequence[int]], generator_record: Optional[GeneratorRecord] = None
    ) -> "Formula":
        """
        Creates a formula from DIMACS style clauses (i for x_i, -i for the negation of x_i).
        """
        rows = [[LiteralId.from_dimacs(value).label for value in clause] for clause in clauses]
        if any(len(row) != k for row in rows):
            raise ValueError(f"All clauses have to have width {k}")
        return cls.from_label_rows(n_vars, k, np.array(rows, dtype=np.int64).reshape(-1, k), None, generator_record)

    def __attrs_post_init__(self) -> None:
        object.__setattr__(self, "literal_labels", _label_matrix(self.literal_labels, self.k))
        object.__setattr__(self, "provenance", _label_matrix(self.provenance, self.k))
        if self.literal_labels.ndim != 2 or self.literal_labels.shape[1] != self.k:
            raise ValueError(f"Expected clauses of width {self.k} but got shape {self.literal_labels.shape}")
        if self.provenance.shape != self.literal_labels.shape:
            raise ValueError("The provenance has to be aligned with the clauses")
        if self.literal_labels.size and (
            self.literal_labels.min() < 1 or self.literal_labels.max() > 2 * self.n_vars
        ):
            raise ValueError(f"All literals have to refer to variables 1..{self.n_vars}")

    @property
    def clause_count(self) -> int:
        """the number m of clauses (with multiplicities)"""
        return int(self.literal_labels.shape[0])

    def __len__(self) -> int:
        return self.clause_count

    @property
    def clauses(self) -> Tuple[Clause, ...]:
        """the clauses as Clause objects (created on every access)"""
        return tuple(
            Clause(
                literals=[LiteralId.from_label(int(label)) for label in row],
                provenance=[int(index) for index in provenance_row],
            )
            for row, provenance_row in zip(self.literal_labels, self.provenance)
        )

    def dimacs_rows(self) -> np.ndarray:
        """the clauses as (m, k) DIMACS integers"""
        variables = variables_of_labels(self.literal_labels)
        return np.where(self.literal_labels % 2 == 1, variables, -variables)

    def unique_label_rows(self) -> np.ndarray:
        """the distinct clauses (as sorted label rows); solvers work on these"""
        if self.clause_count == 0:
            return self.literal_labels
        return np.unique(self.literal_labels, axis=0)

    def has_same_clauses(self, other: "Formula") -> bool:
        """
        true iff both formulas have the same width and the same clause multiset (the provenance is ignored)
        """
        if self.k != other.k or self.clause_count != other.clause_count:
            return False
        return bool(np.array_equal(_sorted_rows(self.literal_labels), _sorted_rows(other.literal_labels)))

    def with_clauses(self, rows: npt.ArrayLike, provenance: npt.ArrayLike, k: Optional[int] = None) -> "Formula":
        """returns a formula over the same variables (and with the same record) but different clauses"""
        return Formula.from_label_rows(
            self.n_vars, k or self.k, rows, provenance, generator_record=self.generator_record
        )


@attrs.frozen(kw_only=True)
class Hypergraph:
    """
    A k-uniform multi-hypergraph whose vertices are the indices 0..vertex_count-1 of a PointSet.
    """

    vertex_count: int = attrs.field(validator=[attrs.validators.instance_of(int), attrs.validators.ge(0)])
    k: int = attrs.field(validator=[attrs.validators.instance_of(int), attrs.validators.ge(2)])
    #: shape (m, k), each row a sorted tuple of vertex indices
    edges: np.ndarray = attrs.field(eq=attrs.cmp_using(eq=np.array_equal))
    generator_record: Optional[GeneratorRecord] = attrs.field(default=None, eq=False)

    def __attrs_post_init__(self) -> None:
        object.__setattr__(self, "edges", _label_matrix(self.edges, self.k))
        if self.edges.ndim != 2 or self.edges.shape[1] != self.k:
            raise ValueError(f"Expected edges of arity {self.k} but got shape {self.edges.shape}")
        if self.edges.size and (self.edges.min() < 0 or self.edges.max() >= self.vertex_count):
            raise ValueError(f"All edges have to connect vertices 0..{self.vertex_count - 1}")

    @property
    def edge_count(self) -> int:
        """number of hyperedges (with multiplicities)"""
        return int(self.edges.shape[0])
