"""
This module contains the classes for the outcome of the solvers and the combinatorial patterns they search for.
"""

# pylint: disable=too-few-public-methods
from typing import Optional, Tuple

import attrs

from geosat.models.enums import CertificateKind, SatStatus
from geosat.models.formula import Clause, LiteralId


@attrs.frozen(kw_only=True)
class SatCertificate:
    """
    The evidence for an UNSAT verdict.
    """

    kind: CertificateKind = attrs.field(validator=attrs.validators.instance_of(CertificateKind))
    #: for CONTRADICTORY_SCC: the variable whose two literals share a strongly connected component
    variable: Optional[int] = attrs.field(
        default=None, validator=attrs.validators.optional(attrs.validators.instance_of(int))
    )


@attrs.frozen(kw_only=True)
class SatResult:
    """
    The verdict of a solver. A SAT result carries a witness, an UNSAT result carries a certificate.
    """

    status: SatStatus = attrs.field(validator=attrs.validators.instance_of(SatStatus))
    #: witness[i] is the value of x_{i+1}; only present for SAT
    witness: Optional[Tuple[bool, ...]] = attrs.field(
        default=None, converter=attrs.converters.optional(lambda values: tuple(bool(v) for v in values))
    )
    certificate: Optional[SatCertificate] = attrs.field(
        default=None, validator=attrs.validators.optional(attrs.validators.instance_of(SatCertificate))
    )

    def __attrs_post_init__(self) -> None:
        if self.status == SatStatus.SAT and self.witness is None:
            raise ValueError("A SAT result requires a witness")
        if self.status == SatStatus.UNSAT and self.witness is not None:
            raise ValueError("An UNSAT result must not have a witness")

    @property
    def is_satisfiable(self) -> bool:
        """true iff status is SAT"""
        return self.status == SatStatus.SAT


def _check_distinct_variables(instance, attribute, value: Tuple[LiteralId, ...]) -> None:
    # pylint:disable=unused-argument
    variables = [literal.variable for literal in value]
    if len(set(variables)) != len(variables):
        raise ValueError(f"The literals of {attribute.name} have to belong to distinct variables: {variables}")


@attrs.frozen(kw_only=True)
class Bicycle:
    """
    The clauses (u, w_1), (-w_1, w_2), ..., (-w_{L-1}, w_L), (-w_L, v) where w_1..w_L are literals of distinct
    variables and u, v are drawn from {w_1, ..., w_L} and their negations.
    A formula without bicycles is satisfiable.
    """

    w: Tuple[LiteralId, ...] = attrs.field(
        converter=tuple, validator=[attrs.validators.min_len(1), _check_distinct_variables]
    )
    u: LiteralId = attrs.field(validator=attrs.validators.instance_of(LiteralId))
    v: LiteralId = attrs.field(validator=attrs.validators.instance_of(LiteralId))

    def __attrs_post_init__(self) -> None:
        variables = {literal.variable for literal in self.w}
        if self.u.variable not in variables or self.v.variable not in variables:
            raise ValueError("The endpoints u and v have to be one of the w literals or their negations")

    @property
    def length(self) -> int:
        """L, the number of w literals"""
        return len(self.w)

    @property
    def clauses(self) -> Tuple[Clause, ...]:
        """the L+1 clauses of the pattern"""
        result = [Clause(literals=[self.u, self.w[0]])]
        for previous, current in zip(self.w, self.w[1:]):
            result.append(Clause(literals=[previous.negation(), current]))
        result.append(Clause(literals=[self.w[-1].negation(), self.v]))
        return tuple(result)


@attrs.frozen(kw_only=True)
class Snake:
    """
    The clauses (w_t, w_1), (-w_1, w_2), ..., (-w_{s-1}, w_s), (-w_s, -w_t) for an odd length s = 2t-1 and literals of
    distinct variables. Every snake is unsatisfiable: w_1 implies w_t implies -w_1 and -w_1 implies w_t implies w_1.
    """

    w: Tuple[LiteralId, ...] = attrs.field(
        converter=tuple, validator=[attrs.validators.min_len(1), _check_distinct_variables]
    )

    def __attrs_post_init__(self) -> None:
        if len(self.w) % 2 == 0:
            raise ValueError(f"A snake has odd length but got {len(self.w)}")

    @property
    def length(self) -> int:
        """s"""
        return len(self.w)

    @property
    def middle(self) -> LiteralId:
        """w_t with t = (s+1)/2"""
        return self.w[(len(self.w) - 1) // 2]

    @property
    def clauses(self) -> Tuple[Clause, ...]:
        """the s+1 clauses of the pattern"""
        result = [Clause(literals=[self.middle, self.w[0]])]
        for previous, current in zip(self.w, self.w[1:]):
            result.append(Clause(literals=[previous.negation(), current]))
        result.append(Clause(literals=[self.w[-1].negation(), self.middle.negation()]))
        return tuple(result)
