"""
This module reads and writes formulas in the DIMACS CNF format using the parsing library lark:
https://lark-parser.readthedocs.io/en/latest/

    c any comment
    p cnf <variables> <clauses>
    1 -2 0
    2 3 0

Comments may appear anywhere; a '%' ends the input (as in the SATLIB benchmark files). Clauses may span lines.
The writer puts the generator record of a formula into a comment line "c geosat-record {json}" so that a read formula
still knows where it came from.
"""

import io
import json
from pathlib import Path
from typing import List, Optional, TextIO, Tuple, Union

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from geosat.generators import DimacsFormatError, generator_logger
from geosat.models.formula import Formula, GeneratorRecord, GeneratorRecordSchema

RECORD_COMMENT_PREFIX = "c geosat-record "

GRAMMAR = r"""
start: HEADER clause*
clause: LITERAL* ZERO
HEADER: /p[ \t]+cnf[ \t]+[0-9]+[ \t]+[0-9]+/ // the problem line
LITERAL: /-?[1-9][0-9]*/ // i for x_i, -i for its negation
ZERO: "0" // terminates a clause
COMMENT: /c[^\n]*/
TRAILER: /%[\s\S]*/
%import common.WS
%ignore WS
%ignore COMMENT
%ignore TRAILER
"""
_parser = Lark(GRAMMAR, start="start", parser="lalr")


@v_args(inline=True)  # Children are provided as *args instead of a list argument
class DimacsTransformer(Transformer):
    """
    Transforms the parse tree into (declared variables, declared clauses, clauses as lists of DIMACS integers)
    """

    def start(self, header: Token, *clauses: List[int]) -> Tuple[int, int, List[List[int]]]:
        """the whole file"""
        _, _, variables, clause_count = header.value.split()
        return int(variables), int(clause_count), list(clauses)

    def clause(self, *tokens: Token) -> List[int]:
        """one 0 terminated clause"""
        return [int(token.value) for token in tokens if token.type == "LITERAL"]


def _extract_record(text: str) -> Optional[GeneratorRecord]:
    for line in text.splitlines():
        if line.startswith(RECORD_COMMENT_PREFIX):
            return GeneratorRecordSchema().load(json.loads(line[len(RECORD_COMMENT_PREFIX) :]))
    return None


def read_dimacs(text: str, k: Optional[int] = None) -> Formula:
    """
    parses a DIMACS CNF text
    :param text: the file content
    :param k: the expected clause width; if omitted, it is taken from the clauses (2 for a formula without clauses)
    :raises DimacsFormatError: if the text is malformed, the header disagrees with the content or the clauses have
        different widths
    """
    try:
        variables, declared_clauses, clauses = DimacsTransformer().transform(_parser.parse(text))
    except UnexpectedInput as unexpected:
        generator_logger.warning("The DIMACS input is syntactically incorrect", exc_info=unexpected)
        message = (str(unexpected).strip().splitlines() or [unexpected.__class__.__name__])[0]
        raise DimacsFormatError(message, line=unexpected.line) from unexpected
    except VisitError as visit_error:
        raise DimacsFormatError(str(visit_error.orig_exc)) from visit_error
    if len(clauses) != declared_clauses:
        raise DimacsFormatError(f"The header declares {declared_clauses} clauses but {len(clauses)} were found")
    widths = {len(clause) for clause in clauses}
    if len(widths) > 1:
        raise DimacsFormatError(f"All clauses have to have the same width but found widths {sorted(widths)}")
    width = widths.pop() if widths else (k or 2)
    if k is not None and width != k:
        raise DimacsFormatError(f"Expected clauses of width {k} but found width {width}")
    if width < 2:
        raise DimacsFormatError(f"Only clauses of width >= 2 are supported but found width {width}")
    too_large = [value for clause in clauses for value in clause if abs(value) > variables]
    if too_large:
        raise DimacsFormatError(f"The literal {too_large[0]} refers to a variable above the declared {variables}")
    return Formula.from_clauses(variables, width, clauses, generator_record=_extract_record(text))


def read_dimacs_file(path: Path, k: Optional[int] = None) -> Formula:
    """reads a DIMACS CNF file"""
    with open(path, "r", encoding="utf-8") as dimacs_file:
        return read_dimacs(dimacs_file.read(), k)


def write_dimacs(formula: Formula, target: Union[Path, TextIO]) -> None:
    """
    writes the formula in DIMACS CNF format; tautologies and repeated clauses are written as they are
    """
    if isinstance(target, Path):
        with open(target, "w", encoding="utf-8") as dimacs_file:
            write_dimacs(formula, dimacs_file)
        return
    target.write("c generated by geosat\n")
    if formula.generator_record is not None:
        record = GeneratorRecordSchema().dumps(formula.generator_record, separators=(",", ":"))
        target.write(f"{RECORD_COMMENT_PREFIX}{record}\n")
    target.write(f"p cnf {formula.n_vars} {formula.clause_count}\n")
    for row in formula.dimacs_rows():
        target.write(" ".join(str(int(value)) for value in row) + " 0\n")


def dimacs_text(formula: Formula) -> str:
    """the DIMACS CNF representation as string"""
    buffer = io.StringIO()
    write_dimacs(formula, buffer)
    return buffer.getvalue()
