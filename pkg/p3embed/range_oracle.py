"""
Triangular range counting and reporting over a fixed integer point set.

Query triangles may have rational corners. Each query is turned into three integer half planes
(see geometry.triangle_half_planes), so every point test is a handful of integer products.
"Inside" always means strictly inside; the closed variants add the boundary.
"""
import enum
import logging
import threading
from dataclasses import dataclass, asdict

from p3embed.errors import DuplicatePointError
from p3embed.geometry import coordinate_extent, triangle_half_planes

logger = logging.getLogger(__name__)

# points per kd-tree leaf
LEAF_SIZE = 8

_OUTSIDE = 0
_INSIDE = 1
_CROSSING = 2


class Backend(enum.Enum):
    BRUTE_FORCE = 'brute-force'
    HIERARCHICAL = 'hierarchical'

    @staticmethod
    def from_arg(arg):
        for backend in Backend:
            if arg in (backend.value, backend.name):
                return backend
        raise ValueError(f'Unknown oracle backend "{arg}".')


@dataclass
class QueryStats:
    count_queries: int = 0
    report_queries: int = 0
    reported_points_total: int = 0

    def as_dict(self):
        return asdict(self)


def _contains(planes, x, y, strict):
    (a0, b0, c0), (a1, b1, c1), (a2, b2, c2) = planes
    s0 = a0 * x + b0 * y + c0
    s1 = a1 * x + b1 * y + c1
    s2 = a2 * x + b2 * y + c2
    if strict:
        return s0 > 0 and s1 > 0 and s2 > 0
    return s0 >= 0 and s1 >= 0 and s2 >= 0


class _KdNode:
    __slots__ = ('lo', 'hi', 'min_x', 'min_y', 'max_x', 'max_y', 'left', 'right')

    def __init__(self, lo, hi, min_x, min_y, max_x, max_y):
        self.lo = lo
        self.hi = hi
        self.min_x = min_x
        self.min_y = min_y
        self.max_x = max_x
        self.max_y = max_y
        self.left = None
        self.right = None


class _KdTree:
    """
    Balanced kd-tree splitting alternately at x and y medians. Every node keeps the bounding box of
    its points and a contiguous slice [lo, hi) of the reordered point array, so a node entirely inside
    a query contributes hi - lo to a count and its slice to a report.
    """
    def __init__(self, points):
        self.order = list(range(len(points)))
        self.points = points
        self.root = self._build(0, len(points), 0) if points else None
        self.xs = [points[i][0] for i in self.order]
        self.ys = [points[i][1] for i in self.order]

    def _build(self, lo, hi, depth):
        ids = self.order[lo:hi]
        xs = [self.points[i][0] for i in ids]
        ys = [self.points[i][1] for i in ids]
        node = _KdNode(lo, hi, min(xs), min(ys), max(xs), max(ys))
        if hi - lo <= LEAF_SIZE:
            return node

        axis = depth % 2
        ids.sort(key=lambda i: (self.points[i][axis], self.points[i][1 - axis]))
        self.order[lo:hi] = ids
        mid = (lo + hi) // 2
        node.left = self._build(lo, mid, depth + 1)
        node.right = self._build(mid, hi, depth + 1)
        return node

    @staticmethod
    def _classify(node, planes, strict):
        inside = True
        for a, b, c in planes:
            if a > 0:
                high, low = a * node.max_x, a * node.min_x
            else:
                high, low = a * node.min_x, a * node.max_x
            if b > 0:
                high += b * node.max_y
                low += b * node.min_y
            else:
                high += b * node.min_y
                low += b * node.max_y
            high += c
            low += c
            if strict:
                if high <= 0:
                    return _OUTSIDE
                if low <= 0:
                    inside = False
            else:
                if high < 0:
                    return _OUTSIDE
                if low < 0:
                    inside = False
        return _INSIDE if inside else _CROSSING

    def query(self, planes, strict, report):
        """
        :returns count of matching points, or list of their indices if report is set
        """
        found = [] if report else None
        total = 0
        if self.root is None:
            return found if report else total

        xs, ys = self.xs, self.ys
        stack = [self.root]
        while stack:
            node = stack.pop()
            state = self._classify(node, planes, strict)
            if state == _OUTSIDE:
                continue
            if state == _INSIDE:
                if report:
                    found.extend(self.order[node.lo:node.hi])
                else:
                    total += node.hi - node.lo
            elif node.left is None:
                for k in range(node.lo, node.hi):
                    if _contains(planes, xs[k], ys[k], strict):
                        if report:
                            found.append(self.order[k])
                        else:
                            total += 1
            else:
                stack.append(node.right)
                stack.append(node.left)
        return found if report else total


class RangeOracle:
    """
    Preprocessed point set answering triangular counting and reporting queries.

    The point set is sorted by (x, y) at build time and never mutated afterwards. Every public query
    increments exactly one of the query counters; counters are updated under a lock, so concurrent
    callers see exact totals once they are done.
    """
    def __init__(self, points, backend=Backend.HIERARCHICAL):
        self.points = tuple(sorted(points))
        for p, q in zip(self.points, self.points[1:]):
            if p == q:
                raise DuplicatePointError(f'Duplicate point {p} in the point set')
        self.backend = backend
        self.extent = coordinate_extent(self.points)
        self.index = {p: i for i, p in enumerate(self.points)}
        self.stats = QueryStats()
        self._stats_lock = threading.Lock()
        self._tree = _KdTree(self.points) if backend == Backend.HIERARCHICAL else None
        logger.debug(f'Built {backend.value} oracle over {len(self.points)} points')

    def __len__(self):
        return len(self.points)

    def _run(self, triangle, strict, report):
        # data points have W = 1, so a * x + b * y + c is the plane value
        planes = triangle_half_planes(triangle)
        if self._tree is not None:
            return self._tree.query(planes, strict, report)
        if report:
            return [i for i, (x, y) in enumerate(self.points) if _contains(planes, x, y, strict)]
        return sum(1 for x, y in self.points if _contains(planes, x, y, strict))

    def _counted(self, count_query=False, reported=0):
        with self._stats_lock:
            if count_query:
                self.stats.count_queries += 1
            else:
                self.stats.report_queries += 1
                self.stats.reported_points_total += reported

    def count_interior(self, triangle):
        """
        :returns number of points strictly inside the triangle
        :raises DegenerateTriangleError
        """
        result = self._run(triangle, strict=True, report=False)
        self._counted(count_query=True)
        return result

    def count_on_boundary(self, triangle):
        """
        :returns number of points on the edges or corners of the triangle
        :raises DegenerateTriangleError
        """
        result = self._run(triangle, strict=False, report=False) - self._run(triangle, strict=True, report=False)
        self._counted(count_query=True)
        return result

    def report_interior(self, triangle):
        """
        :returns points strictly inside the triangle, ascending by (x, y)
        :raises DegenerateTriangleError
        """
        found = [self.points[i] for i in sorted(self._run(triangle, strict=True, report=True))]
        self._counted(reported=len(found))
        return found

    def report_closed(self, triangle):
        """
        :returns points inside or on the boundary of the triangle, ascending by (x, y)
        :raises DegenerateTriangleError
        """
        found = [self.points[i] for i in sorted(self._run(triangle, strict=False, report=True))]
        self._counted(reported=len(found))
        return found

    def snapshot(self):
        with self._stats_lock:
            return QueryStats(**self.stats.as_dict())


def build(points, backend=Backend.HIERARCHICAL):
    """
    :param points: pairwise distinct Points
    :param backend: Backend
    :raises DuplicatePointError
    """
    return RangeOracle(points, backend)
