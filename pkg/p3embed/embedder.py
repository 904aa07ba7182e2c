"""
Point-set embedding of a plane 3-tree on exactly n points.

For each of the six assignments of the outer vertices to the three hull corners, the
representative tree is walked top-down. At a node whose region is mapped to the triangle xyz and
whose children hold n1, n2, n3 internal nodes, the representative vertex must go to the point u
with exactly n1, n2, n3 points strictly inside xuy, yuz and zux. Such a point is unique when it
exists, so the walk never backtracks within one outer assignment.

BASELINE tries every point inside xyz as u. IMPROVED slides a point v along yz and uses counting
queries to find where the triangle x v y starts holding more than n1 points (and symmetrically from
z for n3); u can only lie in the thin triangle between the two split points, which holds about
min(n1, n2, n3) + 1 points once the smallest child is rotated into the middle role.
"""
import enum
import itertools
import logging
from dataclasses import dataclass, field, asdict
from fractions import Fraction
from typing import Optional

from p3embed.errors import DuplicatePointError, InputSizeError, DegenerateInputError
from p3embed.geometry import Triangle, RatPoint, INTERIOR, LocationKind, convex_hull, coordinate_extent, \
    interpolate, locate_in_triangle, orient_sign
from p3embed.range_oracle import Backend, RangeOracle

logger = logging.getLogger(__name__)

# count_queries <= QUERY_BUDGET_CONSTANT * n * (log2 n + log2 N_max) on generated suites
QUERY_BUDGET_CONSTANT = 16


class Mode(enum.Enum):
    BASELINE = 'baseline'
    IMPROVED = 'improved'

    @staticmethod
    def from_arg(arg):
        for mode in Mode:
            if arg in (mode.value, mode.name):
                return mode
        raise ValueError(f'Unknown embedding mode "{arg}".')


class NoEmbeddingReason(enum.Enum):
    HULL_NOT_THREE = 'hull-not-three'
    HULL_BOUNDARY_OCCUPIED = 'hull-boundary-occupied'
    NO_VALID_REPRESENTATIVE = 'no-valid-representative'


class Mapping:
    """
    Assignment of graph vertices to points: assignment[v] is the point of vertex v.
    """
    def __init__(self, assignment):
        self.assignment = list(assignment)

    def __getitem__(self, vertex):
        return self.assignment[vertex]

    def __len__(self):
        return len(self.assignment)

    def __iter__(self):
        return iter(self.assignment)

    def __eq__(self, other):
        return isinstance(other, Mapping) and self.assignment == other.assignment

    def __repr__(self):
        return f'Mapping({self.assignment})'

    def is_injective(self):
        return len(set(self.assignment)) == len(self.assignment)


@dataclass
class AlgoStats:
    recursion_nodes: int = 0
    count_queries: int = 0
    report_queries: int = 0
    candidates_checked: int = 0
    binary_search_steps: int = 0
    max_steps_per_node: int = 0
    pinned_splits: int = 0
    candidate_overflow_nodes: int = 0
    outer_mappings_tried: int = 0
    mapping_count_queries: int = 0

    def as_dict(self):
        return asdict(self)


@dataclass
class EmbedResult:
    mapping: Optional[Mapping] = None
    reason: Optional[NoEmbeddingReason] = None
    stats: AlgoStats = field(default_factory=AlgoStats)

    @property
    def found(self):
        return self.mapping is not None


@dataclass
class SplitPoints:
    """
    v1 = y + t1 * (z - y) and v2 = y + t2 * (z - y) with 0 <= t1 <= t2 <= 1.
    pinned is set when a side had to be recovered exactly instead of hit by a bisection midpoint.
    """
    v1: RatPoint
    v2: RatPoint
    t1: Fraction
    t2: Fraction
    pinned: bool = False
    steps: int = 0


def _check_points(points):
    seen = set()
    for p in points:
        if p in seen:
            raise DuplicatePointError(f'Duplicate point {p}')
        seen.add(p)


def bisection_resolution(extent):
    """
    Width below which a bisection bracket is pinned exactly: 1 / (4 N^4) for coordinate extent N.
    """
    extent = max(2, extent)
    return Fraction(1, 4 * extent ** 4)


def cevian_parameter(x, y, z, p):
    """
    :returns t such that the line through x and p meets line yz at y + t * (z - y)
    """
    dx, dy = p[0] - x[0], p[1] - x[1]
    at_y = dx * (y[1] - x[1]) - dy * (y[0] - x[0])
    slope = dx * (z[1] - y[1]) - dy * (z[0] - y[0])
    return Fraction(-at_y, slope)


def _threshold(x, near, far, target, oracle, resolution):
    """
    Bisection for a position t along near -> far where count(x, near + t * (far - near), near) == target.

    Stops early at a midpoint with the target count. Otherwise the bracket is narrowed until it is
    thinner than resolution and the position where the count first exceeds the target is recovered
    from the cevian parameters of the points inside the bracket.

    :returns (t, steps, pinned)
    """
    if target == 0:
        return Fraction(0), 0, False

    lo, hi = Fraction(0), Fraction(1)
    count_lo = 0
    steps = 0
    while hi - lo >= resolution:
        mid = (lo + hi) / 2
        count = oracle.count_interior(Triangle(x, interpolate(near, far, mid), near))
        steps += 1
        if count == target:
            return mid, steps, False
        if count < target:
            lo, count_lo = mid, count
        else:
            hi = mid

    region = Triangle(x, near, far)
    bracket = Triangle(x, interpolate(near, far, lo), interpolate(near, far, hi))
    crossings = sorted(cevian_parameter(x, near, far, p) for p in oracle.report_closed(bracket)
                       if locate_in_triangle(p, region) == INTERIOR)
    count = count_lo
    for t, group in itertools.groupby(crossings):
        if t >= hi:
            break
        count += len(list(group))
        if count > target:
            logger.debug(f'Pinned threshold at t={t} after {steps} steps ({len(crossings)} points in bracket)')
            return t, steps, True
    raise RuntimeError(f'Counts along {near}->{far} are not monotone: reached {count}, target {target}')


def find_split_points(x, y, z, n1, n3, oracle: RangeOracle, total=None):
    """
    Finds v1, v2 on segment yz such that triangle x v1 y holds n1 points and x v2 z holds n3, or, when
    collinear points make the count jump over the target, the exact position where it jumps.

    :param total: number of points strictly inside xyz if already known
    :raises ValueError: if n1 + n3 > total - 1
    """
    if total is None:
        total = oracle.count_interior(Triangle(x, y, z))
    if n1 < 0 or n3 < 0 or n1 + n3 > total - 1:
        raise ValueError(f'Split targets n1={n1}, n3={n3} impossible with {total} interior points')

    resolution = bisection_resolution(max(oracle.extent, coordinate_extent((x, y, z))))
    t1, steps1, pinned1 = _threshold(x, y, z, n1, oracle, resolution)
    s2, steps2, pinned2 = _threshold(x, z, y, n3, oracle, resolution)
    t2 = 1 - s2
    return SplitPoints(v1=interpolate(y, z, t1), v2=interpolate(y, z, t2), t1=t1, t2=t2,
                       pinned=pinned1 or pinned2, steps=steps1 + steps2)


def _passes(u, x, y, z, n1, n2, n3, oracle):
    return oracle.count_interior(Triangle(x, u, y)) == n1 and \
           oracle.count_interior(Triangle(y, u, z)) == n2 and \
           oracle.count_interior(Triangle(z, u, x)) == n3


def _first_passing(candidates, x, y, z, sizes, oracle, stats):
    n1, n2, n3 = sizes
    region = Triangle(x, y, z)
    for u in candidates:
        if u == x or u == y or u == z or locate_in_triangle(u, region) != INTERIOR:
            continue
        stats.candidates_checked += 1
        if _passes(u, x, y, z, n1, n2, n3, oracle):
            return u
    return None


def _rotate_smallest_to_middle(corners, sizes):
    # cyclic rotations keep the triangle orientation and the child to sub-triangle correspondence
    x, y, z = corners
    n1, n2, n3 = sizes
    if n2 <= n1 and n2 <= n3:
        return corners, sizes
    if n3 <= n1:
        return (y, z, x), (n2, n3, n1)
    return (z, x, y), (n3, n1, n2)


def _improved_candidates(x, y, z, sizes, total, oracle, stats):
    n1, n2, n3 = sizes
    split = find_split_points(x, y, z, n1, n3, oracle, total=total)
    stats.binary_search_steps += split.steps
    stats.max_steps_per_node = max(stats.max_steps_per_node, split.steps)
    if split.pinned:
        stats.pinned_splits += 1
    logger.debug(f'Split points t1={split.t1} t2={split.t2} for sizes {sizes}')

    if split.t1 < split.t2:
        return oracle.report_closed(Triangle(x, split.v1, split.v2))
    if split.t1 > split.t2 or split.t1 <= 0 or split.t1 >= 1:
        return []
    # u can only sit on the open segment x v1
    resolution = bisection_resolution(max(oracle.extent, coordinate_extent((x, y, z))))
    sliver = Triangle(x, split.v1, interpolate(y, z, min(Fraction(1), split.t1 + resolution)))
    return [p for p in oracle.report_closed(sliver) if orient_sign(x, split.v1, p) == 0]


def find_representative_point(x, y, z, n1, n2, n3, oracle: RangeOracle, mode=None, stats=None, total=None):
    """
    Finds the point u with n1, n2, n3 points strictly inside xuy, yuz, zux.

    :param mode: Mode.IMPROVED (default) prunes candidates with split points, Mode.BASELINE scans the region
    :param stats: AlgoStats to accumulate into
    :param total: number of points strictly inside xyz if already known
    :returns Point or None
    """
    if mode is None:
        mode = Mode.IMPROVED
    if stats is None:
        stats = AlgoStats()
    if total is None:
        total = n1 + n2 + n3 + 1

    if mode == Mode.BASELINE:
        candidates = oracle.report_interior(Triangle(x, y, z))
        return _first_passing(candidates, x, y, z, (n1, n2, n3), oracle, stats)

    corners, sizes = _rotate_smallest_to_middle((x, y, z), (n1, n2, n3))
    before = stats.candidates_checked
    candidates = _improved_candidates(*corners, sizes, total, oracle, stats)
    u = _first_passing(candidates, *corners, sizes, oracle, stats)
    checked = stats.candidates_checked - before
    if checked > 2 * (sizes[1] + 1):
        stats.candidate_overflow_nodes += 1
        logger.warning(f'Checked {checked} candidates at a node with middle child size {sizes[1]}')
    return u


def check_hull_boundary(points, hull):
    """
    :returns True iff no point other than the three hull corners lies on the hull triangle's boundary
    :raises DegenerateInputError: if hull does not have exactly 3 corners
    """
    if len(hull) != 3:
        raise DegenerateInputError(f'Hull boundary check needs exactly 3 extreme points, got {len(hull)}')
    triangle = Triangle(*hull)
    corners = set(hull)
    return not any(locate_in_triangle(p, triangle).kind in (LocationKind.ON_EDGE, LocationKind.ON_CORNER)
                   for p in points if p not in corners)


def _embed_with_outer(tree, outer_points, oracle, mode, stats):
    assignment = [None] * tree.vertex_count
    for vertex, point in zip(tree.outer, outer_points):
        assignment[vertex] = point

    stack = [(tree.root, tuple(outer_points))]
    while stack:
        node_id, (x, y, z) = stack.pop()
        node = tree[node_id]
        if node.is_leaf():
            continue
        stats.recursion_nodes += 1
        sizes = tree.child_sizes(node_id)
        u = find_representative_point(x, y, z, *sizes, oracle, mode=mode, stats=stats, total=node.size)
        if u is None:
            logger.debug(f'No representative for node {node_id} (sizes {sizes})')
            return None
        assignment[node.rep_vertex] = u
        first, second, third = node.children
        stack.append((third, (z, x, u)))
        stack.append((second, (y, z, u)))
        stack.append((first, (x, y, u)))
    logger.debug(f'Embedded {tree[tree.root].size} interior vertices')
    return Mapping(assignment)


def embed(tree, points, mode=Mode.IMPROVED, backend=Backend.HIERARCHICAL, oracle=None) -> EmbedResult:
    """
    Decides whether the plane 3-tree admits a point-set embedding on the points and returns one if so.

    Outer assignments are tried in a fixed order: hull corners sorted by (x, y), then their six
    permutations in lexicographic order. The first success is returned.

    :param tree: RepTree from plane3tree.validate_and_build
    :param points: list of exactly tree.vertex_count distinct Points
    :param oracle: prebuilt RangeOracle over the same points (built from backend otherwise)
    :raises InputSizeError, DuplicatePointError
    """
    points = list(points)
    if len(points) != tree.vertex_count:
        raise InputSizeError(f'Graph has {tree.vertex_count} vertices but {len(points)} points were given')
    _check_points(points)

    stats = AlgoStats()
    try:
        hull = convex_hull(points)
    except DegenerateInputError:
        return EmbedResult(reason=NoEmbeddingReason.HULL_NOT_THREE, stats=stats)
    if len(hull) != 3:
        logger.info(f'Convex hull has {len(hull)} extreme points, no embedding')
        return EmbedResult(reason=NoEmbeddingReason.HULL_NOT_THREE, stats=stats)
    if not check_hull_boundary(points, hull):
        logger.info('A point lies on the hull boundary, no embedding')
        return EmbedResult(reason=NoEmbeddingReason.HULL_BOUNDARY_OCCUPIED, stats=stats)

    if oracle is None:
        oracle = RangeOracle(points, backend)
    start = oracle.snapshot()

    for outer_points in itertools.permutations(sorted(hull)):
        stats.outer_mappings_tried += 1
        before = oracle.snapshot().count_queries
        mapping = _embed_with_outer(tree, outer_points, oracle, mode, stats)
        if mapping is not None:
            stats.mapping_count_queries = oracle.snapshot().count_queries - before
            logger.info(f'Embedding found with outer corners {outer_points} ({mode.value})')
            _collect(stats, oracle, start)
            return EmbedResult(mapping=mapping, stats=stats)

    _collect(stats, oracle, start)
    return EmbedResult(reason=NoEmbeddingReason.NO_VALID_REPRESENTATIVE, stats=stats)


def _collect(stats, oracle, start):
    end = oracle.snapshot()
    stats.count_queries = end.count_queries - start.count_queries
    stats.report_queries = end.report_queries - start.report_queries


