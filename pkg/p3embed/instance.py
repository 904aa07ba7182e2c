"""
Text formats for instances and mappings.

Instance files are line oriented, one record per line, '#' starts a comment:

    n 4
    outer 0 1 2
    edge 0 1
    point 0 0
    expected embeddable
    planted 3 3 3

Mapping files hold one 'vertex_id x y' line per vertex, or the JSON document
{"mapping": [{"vertex": 0, "x": 0, "y": 0}, ...]}.
"""
import enum
import json
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from p3embed.errors import InstanceFormatError, CoordinateBoundError, GraphError
from p3embed.geometry import Point
from p3embed.plane3tree import PlaneGraphInput

logger = logging.getLogger(__name__)


class Expected(enum.Enum):
    EMBEDDABLE = 'embeddable'
    NOT_EMBEDDABLE = 'not-embeddable'
    UNKNOWN = 'unknown'


@dataclass
class InstanceFile:
    graph: PlaneGraphInput
    points: List[Point]
    expected: Expected = Expected.UNKNOWN
    planted: Optional[List[Point]] = None
    comment: Optional[str] = field(default=None, compare=False)


def _ints(tokens, count, lineno, what):
    if len(tokens) != count:
        raise InstanceFormatError(f'"{what}" takes {count} integers, got {len(tokens)}', lineno)
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise InstanceFormatError(f'"{what}" arguments must be integers, got {" ".join(tokens)}', lineno)


def _point(x, y, lineno):
    try:
        return Point(x, y)
    except CoordinateBoundError as e:
        raise InstanceFormatError(str(e), lineno) from e


def parse_instance(text) -> InstanceFile:
    """
    :raises InstanceFormatError: with the number of the offending line
    """
    n = None
    outer, outer_line = None, None
    expected = Expected.UNKNOWN
    edges, edge_lines = [], []
    points, point_lines = [], {}
    planted = {}

    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        keyword, *tokens = line.split()

        if keyword == 'n':
            if n is not None:
                raise InstanceFormatError('vertex count given twice', lineno)
            n, = _ints(tokens, 1, lineno, keyword)
            if n < 3:
                raise InstanceFormatError(f'a plane 3-tree needs at least 3 vertices, got {n}', lineno)
        elif keyword == 'outer':
            if outer is not None:
                raise InstanceFormatError('outer face given twice', lineno)
            outer = tuple(_ints(tokens, 3, lineno, keyword))
            outer_line = lineno
        elif keyword == 'edge':
            edges.append(tuple(_ints(tokens, 2, lineno, keyword)))
            edge_lines.append(lineno)
        elif keyword == 'point':
            p = _point(*_ints(tokens, 2, lineno, keyword), lineno)
            if p in point_lines:
                raise InstanceFormatError(f'duplicate point {p}, first given on line {point_lines[p]}', lineno)
            point_lines[p] = lineno
            points.append(p)
        elif keyword == 'expected':
            try:
                expected = Expected(' '.join(tokens))
            except ValueError:
                raise InstanceFormatError(f'unknown expectation "{" ".join(tokens)}"', lineno)
        elif keyword == 'planted':
            v, x, y = _ints(tokens, 3, lineno, keyword)
            if v in planted:
                raise InstanceFormatError(f'vertex {v} planted twice', lineno)
            planted[v] = (_point(x, y, lineno), lineno)
        else:
            raise InstanceFormatError(f'unknown record "{keyword}"', lineno)

    last = len(text.splitlines())
    if n is None:
        raise InstanceFormatError('missing vertex count "n"', last)
    if outer is None:
        raise InstanceFormatError('missing "outer" face', last)

    seen = {}
    for (u, v), lineno in zip(edges, edge_lines):
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise InstanceFormatError(f'edge ({u}, {v}) is not a pair of distinct vertices in 0..{n - 1}', lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InstanceFormatError(f'duplicate edge ({u}, {v}), first given on line {seen[key]}', lineno)
        seen[key] = lineno

    graph = PlaneGraphInput(n=n, edges=edges, outer=outer)
    try:
        graph.check()
    except GraphError as e:
        # edge records were checked above, what remains concerns the outer face
        raise InstanceFormatError(str(e), outer_line) from e

    planted_points = None
    if planted:
        for v, (_, lineno) in planted.items():
            if not 0 <= v < n:
                raise InstanceFormatError(f'planted vertex {v} outside 0..{n - 1}', lineno)
        if len(planted) != n:
            raise InstanceFormatError(f'planted mapping covers {len(planted)} of {n} vertices', last)
        planted_points = [planted[v][0] for v in range(n)]

    return InstanceFile(graph=graph, points=points, expected=expected, planted=planted_points)


def serialize_instance(instance: InstanceFile) -> str:
    graph = instance.graph
    lines = []
    if instance.comment:
        lines.extend(f'# {line}' for line in instance.comment.splitlines())
    lines.append(f'n {graph.n}')
    lines.append('outer {} {} {}'.format(*graph.outer))
    lines.extend(f'edge {u} {v}' for u, v in graph.edges)
    lines.extend(f'point {x} {y}' for x, y in instance.points)
    lines.append(f'expected {instance.expected.value}')
    if instance.planted is not None:
        lines.extend(f'planted {v} {x} {y}' for v, (x, y) in enumerate(instance.planted))
    return '\n'.join(lines) + '\n'


def load_instance(path) -> InstanceFile:
    with open(path, 'r') as f:
        return parse_instance(f.read())


def save_instance(path, instance: InstanceFile):
    with open(path, 'w') as f:
        f.write(serialize_instance(instance))
    logger.info(f'Instance with {instance.graph.n} vertices written to {path}')


def format_mapping(mapping) -> str:
    return ''.join(f'{v} {p[0]} {p[1]}\n' for v, p in enumerate(mapping))


def mapping_to_json(mapping) -> str:
    return json.dumps({'mapping': [{'vertex': v, 'x': p[0], 'y': p[1]} for v, p in enumerate(mapping)]}, indent=1)


def _assemble_mapping(entries):
    """
    :param entries: list of (vertex, x, y, lineno)
    """
    assignment = {}
    for v, x, y, lineno in entries:
        if v in assignment:
            raise InstanceFormatError(f'vertex {v} mapped twice', lineno)
        assignment[v] = _point(x, y, lineno)
    if sorted(assignment) != list(range(len(assignment))):
        missing = sorted(set(range(max(assignment, default=-1) + 1)) - assignment.keys())
        raise InstanceFormatError(f'mapping must cover vertices 0..{len(assignment) - 1}, missing {missing[:5]}')
    return [assignment[v] for v in range(len(assignment))]


def parse_mapping(text) -> List[Point]:
    """
    Parses either mapping format.
    :returns list of Points indexed by vertex
    :raises InstanceFormatError
    """
    if text.lstrip().startswith('{'):
        try:
            document = json.loads(text)
            entries = [(int(e['vertex']), int(e['x']), int(e['y']), None) for e in document['mapping']]
        except (ValueError, KeyError, TypeError) as e:
            raise InstanceFormatError(f'malformed mapping document: {e}') from e
        return _assemble_mapping(entries)

    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if line:
            entries.append((*_ints(line.split(), 3, lineno, 'mapping'), lineno))
    return _assemble_mapping(entries)


def load_mapping(path) -> List[Point]:
    with open(path, 'r') as f:
        return parse_mapping(f.read())


def save_mapping(path, mapping, as_json=False):
    with open(path, 'w') as f:
        f.write(mapping_to_json(mapping) + '\n' if as_json else format_mapping(mapping))
