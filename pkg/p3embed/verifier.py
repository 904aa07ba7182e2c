"""
Independent checker for straight-line drawings of plane 3-trees on point sets.

Only the exact predicates of p3embed.geometry and the tree construction of p3embed.plane3tree are
shared with the embedders; everything else is checked directly on the drawing.
"""
import enum
import itertools
import logging
from dataclasses import dataclass, field
from typing import List, Tuple

from p3embed.errors import InputSizeError, DegenerateInputError
from p3embed.geometry import Triangle, INTERIOR, convex_hull, locate_in_triangle, orient_sign, \
    segments_properly_cross, strictly_between
from p3embed.plane3tree import PlaneGraphInput, validate_and_build

logger = logging.getLogger(__name__)


class VerifyMode(enum.Enum):
    EXACT = 'exact'
    GENERALIZED = 'generalized'


class ViolationKind(enum.Enum):
    NOT_IN_POINT_SET = 'not-in-point-set'
    NOT_INJECTIVE = 'not-injective'
    NOT_SURJECTIVE = 'not-surjective'
    EDGE_CROSSING = 'edge-crossing'
    VERTEX_ON_EDGE = 'vertex-on-edge'
    OUTER_FACE_WRONG = 'outer-face-wrong'
    FACE_STRUCTURE_CHANGED = 'face-structure-changed'


@dataclass
class Violation:
    kind: ViolationKind
    vertices: Tuple = ()
    edges: Tuple = ()
    message: str = ''

    def __str__(self):
        return f'{self.kind.value}: {self.message}'


@dataclass
class VerifierReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def valid(self):
        return not self.violations

    def kinds(self):
        return {violation.kind for violation in self.violations}

    def add(self, kind, message, vertices=(), edges=()):
        self.violations.append(Violation(kind, tuple(vertices), tuple(edges), message))


def _check_assignment(points, assignment, mode, report):
    point_set = set(points)
    owner = {}
    for v, p in enumerate(assignment):
        if p is None or p not in point_set:
            report.add(ViolationKind.NOT_IN_POINT_SET, f'vertex {v} is mapped to {p}, not a given point', vertices=(v,))
            continue
        if p in owner:
            report.add(ViolationKind.NOT_INJECTIVE, f'vertices {owner[p]} and {v} share {p}', vertices=(owner[p], v))
            continue
        owner[p] = v
    if mode == VerifyMode.EXACT:
        unused = sorted(point_set - owner.keys())
        if unused:
            report.add(ViolationKind.NOT_SURJECTIVE, f'{len(unused)} points unused, first {unused[0]}')
    return owner


def _drawn_edges(graph, assignment):
    segments = []
    for u, v in graph.edges:
        p, q = assignment[u], assignment[v]
        if p is not None and q is not None and p != q:
            segments.append(((u, v), (p, q)))
    return segments


def _check_crossings(segments, report):
    # sweep over x extents; only pairs with overlapping extents can meet
    ordered = sorted(segments, key=lambda s: min(s[1][0][0], s[1][1][0]))
    for i, (edge, segment) in enumerate(ordered):
        right = max(segment[0][0], segment[1][0])
        for other_edge, other in ordered[i + 1:]:
            if min(other[0][0], other[1][0]) > right:
                break
            if segments_properly_cross(segment, other):
                report.add(ViolationKind.EDGE_CROSSING, f'edges {edge} and {other_edge} cross',
                           edges=(edge, other_edge))


def _check_points_on_edges(segments, probes, report):
    """
    :param probes: list of (vertex or None, point) to test against every non-incident edge
    """
    for edge, (p, q) in segments:
        low_x, high_x = sorted((p[0], q[0]))
        low_y, high_y = sorted((p[1], q[1]))
        for vertex, r in probes:
            if r == p or r == q or not (low_x <= r[0] <= high_x and low_y <= r[1] <= high_y):
                continue
            if orient_sign(p, q, r) == 0 and strictly_between(p, q, r):
                name = f'vertex {vertex}' if vertex is not None else 'unused point'
                report.add(ViolationKind.VERTEX_ON_EDGE, f'{name} at {r} lies on edge {edge}',
                           vertices=(vertex,), edges=(edge,))


def _check_outer_face(graph, assignment, report):
    used = [p for p in assignment if p is not None]
    outer_points = [assignment[v] for v in graph.outer]
    try:
        hull = convex_hull(used)
    except DegenerateInputError:
        report.add(ViolationKind.OUTER_FACE_WRONG, 'the drawing is degenerate')
        return
    if len(hull) != 3 or set(hull) != set(outer_points):
        report.add(ViolationKind.OUTER_FACE_WRONG, f'outer vertices are drawn at {outer_points}, hull is {hull}',
                   vertices=graph.outer)
        return
    triangle = Triangle(*outer_points)
    for v, p in enumerate(assignment):
        if v in graph.outer or p is None:
            continue
        if locate_in_triangle(p, triangle) != INTERIOR:
            report.add(ViolationKind.OUTER_FACE_WRONG, f'vertex {v} at {p} is not inside the outer triangle',
                       vertices=(v,))


def _check_regions(graph, assignment, report):
    tree = validate_and_build(graph)
    for node_id, node in tree.internal_nodes():
        corners = [assignment[v] for v in node.region]
        inner = assignment[node.rep_vertex]
        if inner is None or any(p is None for p in corners):
            continue
        if orient_sign(*corners) == 0 or locate_in_triangle(inner, Triangle(*corners)) != INTERIOR:
            report.add(ViolationKind.FACE_STRUCTURE_CHANGED,
                       f'vertex {node.rep_vertex} at {inner} is not inside region {node.region}',
                       vertices=(node.rep_vertex,) + node.region)


def verify(graph: PlaneGraphInput, points, mapping, mode=VerifyMode.EXACT) -> VerifierReport:
    """
    Checks that mapping is a straight-line drawing of graph on points.

    :param mapping: Mapping or sequence, mapping[v] is the point of vertex v
    :param mode: VerifyMode.EXACT requires every point to be used and no point on any drawn edge,
        VerifyMode.GENERALIZED ignores unused points
    :raises InputSizeError: mapping length differs from graph.n, or too few points for the mode
    """
    assignment = list(mapping)
    points = list(points)
    if len(assignment) != graph.n:
        raise InputSizeError(f'Mapping has {len(assignment)} entries for {graph.n} vertices')
    if mode == VerifyMode.EXACT and len(points) != graph.n:
        raise InputSizeError(f'Exact drawing of {graph.n} vertices needs {graph.n} points, got {len(points)}')
    if len(points) < graph.n:
        raise InputSizeError(f'{len(points)} points cannot hold {graph.n} vertices')

    report = VerifierReport()
    owner = _check_assignment(points, assignment, mode, report)
    segments = _drawn_edges(graph, assignment)
    _check_crossings(segments, report)

    probes = [(v, p) for p, v in owner.items()]
    if mode == VerifyMode.EXACT:
        probes += [(None, p) for p in points if p not in owner]
    _check_points_on_edges(segments, probes, report)

    if len(owner) == graph.n:
        _check_outer_face(graph, assignment, report)
        _check_regions(graph, assignment, report)

    if report.valid:
        logger.debug(f'Drawing of {graph.n} vertices is valid')
    else:
        logger.debug(f'Drawing has {len(report.violations)} violations, first: {report.violations[0]}')
    return report


def brute_force_embed(graph: PlaneGraphInput, points, mode=VerifyMode.EXACT):
    """
    Reference search over injective assignments. Outer vertices take every ordered triple of points,
    inner vertices are assigned in tree preorder, each strictly inside its region's triangle, and
    every complete assignment is checked with verify.

    Exponential, meant for n <= 7 and k <= 9.

    :returns list of points indexed by vertex, or None
    """
    points = sorted(points)
    tree = validate_and_build(graph)
    order = list(tree.internal_nodes())

    def extend(assignment, used, depth):
        if depth == len(order):
            if verify(graph, points, assignment, mode).valid:
                return list(assignment)
            return None
        _, node = order[depth]
        triangle = Triangle(*(assignment[v] for v in node.region))
        for p in points:
            if p in used or locate_in_triangle(p, triangle) != INTERIOR:
                continue
            assignment[node.rep_vertex] = p
            used.add(p)
            found = extend(assignment, used, depth + 1)
            used.discard(p)
            assignment[node.rep_vertex] = None
            if found is not None:
                return found
        return None

    for corners in itertools.permutations(points, 3):
        if orient_sign(*corners) == 0:
            continue
        assignment = [None] * graph.n
        for v, p in zip(tree.outer, corners):
            assignment[v] = p
        found = extend(assignment, set(corners), 0)
        if found is not None:
            return found
    return None
