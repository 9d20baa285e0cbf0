"""
Result classes of the discrete grid coupling: a continuous formula next to its grid counterpart.
"""

# pylint: disable=too-few-public-methods, unused-argument
import attrs
from marshmallow import Schema, fields, post_load

from geosat.models.formula import Formula


@attrs.frozen(kw_only=True)
class CollisionReport:
    """
    Counts of the three ways in which the grid formula can differ from the continuous one.
    Reports of several trials are aggregated with +.
    """

    extra_heads: int = attrs.field(default=0, validator=attrs.validators.ge(0))  #: labeled gridpoints without a point
    #: pairs of points with the same label that snap into the same grid cell
    same_cell_duplicates: int = attrs.field(default=0, validator=attrs.validators.ge(0))
    #: pairs whose "within radius" verdict differs between the true and the snapped coordinates
    boundary_flip_pairs: int = attrs.field(default=0, validator=attrs.validators.ge(0))

    def __add__(self, other: "CollisionReport") -> "CollisionReport":
        return CollisionReport(
            extra_heads=self.extra_heads + other.extra_heads,
            same_cell_duplicates=self.same_cell_duplicates + other.same_cell_duplicates,
            boundary_flip_pairs=self.boundary_flip_pairs + other.boundary_flip_pairs,
        )

    @property
    def is_clean(self) -> bool:
        """true iff no collision of any kind happened"""
        return self.extra_heads == 0 and self.same_cell_duplicates == 0 and self.boundary_flip_pairs == 0


class CollisionReportSchema(Schema):
    """
    A schema to (de-)serialize CollisionReports
    """

    extra_heads = fields.Integer()
    same_cell_duplicates = fields.Integer()
    boundary_flip_pairs = fields.Integer()

    @post_load
    def deserialize(self, data, **kwargs) -> CollisionReport:
        """
        Converts the barely typed data dictionary into an actual CollisionReport
        """
        return CollisionReport(**data)


@attrs.frozen(kw_only=True)
class CoupledPair:
    """
    A continuous F_k(n, mu) realization and the formula generated from the same points on the grid.
    identical is true iff both clause multisets are equal.
    """

    continuous: Formula
    discrete: Formula
    identical: bool = attrs.field(validator=attrs.validators.instance_of(bool))
    collision_report: CollisionReport
    heads_count: int = attrs.field(default=0, validator=attrs.validators.ge(0))  #: the sampled number of heads

    def __attrs_post_init__(self) -> None:
        if self.identical != self.continuous.has_same_clauses(self.discrete):
            raise ValueError("The identical flag has to reflect whether the clause multisets are equal")
