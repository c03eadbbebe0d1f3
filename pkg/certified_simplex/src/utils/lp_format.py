"""
Text formats of the command-line tool.

LP file::

    lp m n
    c q1 ... qn
    q1 ... qn >= q        # m constraint lines, "<=" and "=" are rewritten

Certificate file::

    status optimal|infeasible|unbounded|not-applicable
    x q1 ... qn
    u q1 ... qm
    d q1 ...

Point-cloud file::

    points n p
    q1 ... qn             # p lines, one point each

Lines starting with ``#`` and blank lines are ignored everywhere.
"""

import re
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from ..errors import ParseError, RationalSyntaxError
from ..polyhedron import LinearProgram
from ..ratlin import Matrix, format_rational, parse_rational, vector

STATUSES = ('optimal', 'infeasible', 'unbounded', 'not-applicable')
_REQUIRED = {
    'optimal': ('x', 'u'),
    'infeasible': ('d',),
    'unbounded': ('x', 'd'),
    'not-applicable': (),
}
_RELATIONS = ('>=', '<=', '=')
_TOKEN_RE = re.compile(r'\S+')


def _lines(text: str) -> Iterator[Tuple[int, List[Tuple[str, int]]]]:
    """Yield ``(line number, [(token, column), ...])`` for each meaningful line."""
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        yield number, [(m.group(), m.start() + 1) for m in _TOKEN_RE.finditer(line)]


def _rational(token: str, line: int, column: int):
    try:
        return parse_rational(token)
    except RationalSyntaxError as e:
        raise RationalSyntaxError(e.message, line, column) from None


def _count(token: str, line: int, column: int) -> int:
    if not token.isdigit():
        raise ParseError(f'"{token}" is not a nonnegative integer', line, column)
    return int(token)


def _header(lines, keyword: str) -> Tuple[int, int, int]:
    try:
        number, tokens = next(lines)
    except StopIteration:
        raise ParseError(f'missing "{keyword}" header') from None
    if len(tokens) != 3 or tokens[0][0] != keyword:
        raise ParseError(f'expected header "{keyword} <rows> <cols>"', number, tokens[0][1])
    return number, _count(tokens[1][0], number, tokens[1][1]), _count(tokens[2][0], number, tokens[2][1])


def _row(number: int, tokens, n: int, first_column: int) -> List:
    if len(tokens) != n:
        raise ParseError(f'expected {n} coefficients, got {len(tokens)}', number, first_column)
    return [_rational(token, number, column) for token, column in tokens]


def parse_vector(text: str, n: Optional[int] = None) -> Matrix:
    """Column vector from space-separated rationals, e.g. ``"4 3/2"``."""
    tokens = [(m.group(), m.start() + 1) for m in _TOKEN_RE.finditer(text)]
    if n is not None and len(tokens) != n:
        raise ParseError(f'expected {n} coordinates, got {len(tokens)}')
    return vector(_rational(token, 1, column) for token, column in tokens)


def parse_lp(text: str) -> LinearProgram:
    """
    Parse an LP file.

    The header counts constraint lines; an ``=`` line becomes two rows and a
    ``<=`` line one negated row.

    :raises ParseError: With the line and column of the offending token.
    """
    lines = _lines(text)
    number, m, n = _header(lines, 'lp')

    try:
        number, tokens = next(lines)
    except StopIteration:
        raise ParseError('missing objective line "c ..."', number + 1) from None
    if tokens[0][0] != 'c':
        raise ParseError('expected objective line "c ..."', number, tokens[0][1])
    c = vector(_row(number, tokens[1:], n, tokens[0][1]))

    rows, rhs = [], []
    count = 0
    for number, tokens in lines:
        if count == m:
            raise ParseError(f'more than the {m} declared constraint lines', number, tokens[0][1])
        count += 1
        relation = next((k for k, (token, _) in enumerate(tokens) if token in _RELATIONS), None)
        if relation is None or relation != len(tokens) - 2:
            raise ParseError('expected "q1 ... qn >= q"', number, tokens[0][1])
        coefficients = _row(number, tokens[:relation], n, tokens[0][1])
        bound = _rational(tokens[-1][0], number, tokens[-1][1])
        op = tokens[relation][0]
        if op in ('>=', '='):
            rows.append(coefficients)
            rhs.append(bound)
        if op in ('<=', '='):
            rows.append([-a for a in coefficients])
            rhs.append(-bound)
    if count < m:
        raise ParseError(f'expected {m} constraint lines, found {count}')

    return LinearProgram(Matrix.from_rows(rows, cols=n), vector(rhs), c)


def _format_values(values) -> str:
    return ' '.join(format_rational(v) for v in values)


def format_lp(lp: LinearProgram) -> str:
    lines = [f'lp {lp.m} {lp.n}', f'c {_format_values(lp.c.entries)}'.rstrip()]
    for i in range(lp.m):
        lines.append(f'{_format_values(lp.A.row(i))} >= {format_rational(lp.b[i, 0])}'.lstrip())
    return '\n'.join(lines) + '\n'


@dataclass(frozen=True)
class Certificate:
    """Parsed certificate file; vectors absent from the file are None."""
    status: str
    x: Optional[Matrix] = None
    u: Optional[Matrix] = None
    d: Optional[Matrix] = None


def parse_cert(text: str) -> Certificate:
    """
    :raises ParseError: On an unknown status, a repeated or unknown label, or
        a vector missing for the status.
    """
    lines = _lines(text)
    try:
        number, tokens = next(lines)
    except StopIteration:
        raise ParseError('missing "status" line') from None
    if len(tokens) != 2 or tokens[0][0] != 'status' or tokens[1][0] not in STATUSES:
        raise ParseError(f'expected "status {"|".join(STATUSES)}"', number, tokens[0][1])
    status = tokens[1][0]

    vectors = {}
    for number, tokens in lines:
        label, column = tokens[0]
        if label not in ('x', 'u', 'd'):
            raise ParseError(f'unknown label "{label}"', number, column)
        if label in vectors:
            raise ParseError(f'vector "{label}" given twice', number, column)
        vectors[label] = vector(_rational(token, number, col) for token, col in tokens[1:])

    for label in _REQUIRED[status]:
        if label not in vectors:
            raise ParseError(f'status {status} requires a "{label}" vector')
    return Certificate(status, **vectors)


def format_cert(cert: Certificate) -> str:
    lines = [f'status {cert.status}']
    for label in ('x', 'u', 'd'):
        value = getattr(cert, label)
        if value is not None:
            lines.append(f'{label} {_format_values(value.entries)}'.rstrip())
    return '\n'.join(lines) + '\n'


def parse_points(text: str) -> Matrix:
    """Point-cloud file to the n x p matrix whose columns are the points."""
    lines = _lines(text)
    number, n, p = _header(lines, 'points')
    points = []
    for number, tokens in lines:
        if len(points) == p:
            raise ParseError(f'more than the {p} declared points', number, tokens[0][1])
        points.append(_row(number, tokens, n, tokens[0][1]))
    if len(points) < p:
        raise ParseError(f'expected {p} points, found {len(points)}')
    return Matrix.from_columns([vector(point) for point in points], n)


def format_points(V: Matrix, comments: Optional[List[str]] = None) -> str:
    """
    :param comments: One comment per column, written as ``# <comment>`` before the point.
    """
    lines = [f'points {V.rows} {V.cols}']
    for j in range(V.cols):
        if comments:
            lines.append(f'# {comments[j]}')
        lines.append(_format_values(V.column(j)))
    return '\n'.join(lines) + '\n'
