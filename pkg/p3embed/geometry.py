"""
Exact planar predicates over integer input points and rational auxiliary points.

All decisions are taken on Python integers: rational corners are brought to homogeneous integer
coordinates (X, Y, W) with W > 0 before any sign is computed, so nothing here ever rounds.
"""
import enum
import logging
import math
import operator
from collections import namedtuple
from fractions import Fraction

from p3embed.errors import CoordinateBoundError, DegenerateInputError, DegenerateTriangleError

logger = logging.getLogger(__name__)

DEFAULT_COORDINATE_BOUND = 2 ** 31 - 1

_coordinate_bound = DEFAULT_COORDINATE_BOUND


def set_coordinate_bound(bound):
    """
    Sets the process wide bound N_max on absolute point coordinates.
    :param bound: positive integer
    """
    global _coordinate_bound
    bound = operator.index(bound)
    if bound < 1:
        raise CoordinateBoundError(f'Coordinate bound must be positive, got {bound}')
    _coordinate_bound = bound


def get_coordinate_bound():
    return _coordinate_bound


class Point(namedtuple('Point', 'x y')):
    """
    Input point with integer coordinates. Points compare and sort by (x, y).
    """
    __slots__ = ()

    def __new__(cls, x, y):
        x = operator.index(x)
        y = operator.index(y)
        if abs(x) > _coordinate_bound or abs(y) > _coordinate_bound:
            raise CoordinateBoundError(f'Point ({x}, {y}) exceeds the coordinate bound {_coordinate_bound}')
        return super().__new__(cls, x, y)

    def __repr__(self):
        return f'Point({self.x}, {self.y})'


class RatPoint(namedtuple('RatPoint', 'x y')):
    """
    Point with exact rational coordinates, stored as reduced fractions.
    A RatPoint equals (and hashes like) the Point with the same value.
    """
    __slots__ = ()

    def __new__(cls, x, y):
        return super().__new__(cls, Fraction(x), Fraction(y))

    @staticmethod
    def from_point(point):
        return RatPoint(point[0], point[1])

    def is_integral(self):
        return self.x.denominator == 1 and self.y.denominator == 1

    def to_point(self):
        if not self.is_integral():
            raise ValueError(f'{self} has no integer representation')
        return Point(self.x.numerator, self.y.numerator)

    def __repr__(self):
        return f'RatPoint({self.x}, {self.y})'


class Triangle(namedtuple('Triangle', 'a b c')):
    """
    Triangle given by three corners, each a Point or a RatPoint.
    Degenerate triangles can be constructed but every query rejects them.
    """
    __slots__ = ()

    def is_degenerate(self):
        return orient_sign(self.a, self.b, self.c) == 0

    def orientation(self):
        return orient(self.a, self.b, self.c)


class Orientation(enum.Enum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTER_CLOCKWISE = 1

    def reverse(self):
        return Orientation(-self.value)


class LocationKind(enum.Enum):
    INTERIOR = 0
    ON_EDGE = 1
    ON_CORNER = 2
    OUTSIDE = 3


class PointLocation(namedtuple('PointLocation', 'kind index')):
    """
    Position of a point relative to a triangle (a, b, c).
    Edge i runs from corner i to corner (i + 1) % 3; index is None for INTERIOR and OUTSIDE.
    """
    __slots__ = ()

    @staticmethod
    def on_edge(index):
        return PointLocation(LocationKind.ON_EDGE, index)

    @staticmethod
    def on_corner(index):
        return PointLocation(LocationKind.ON_CORNER, index)


INTERIOR = PointLocation(LocationKind.INTERIOR, None)
OUTSIDE = PointLocation(LocationKind.OUTSIDE, None)


def homogeneous(point):
    """
    :returns integer triple (X, Y, W), W > 0, with point == (X / W, Y / W)
    """
    x, y = point
    if type(x) is int and type(y) is int:
        return x, y, 1
    x = Fraction(x)
    y = Fraction(y)
    w = x.denominator * y.denominator // math.gcd(x.denominator, y.denominator)
    return x.numerator * (w // x.denominator), y.numerator * (w // y.denominator), w


def line_through(p, q):
    """
    Integer coefficients (a, b, c) of the line through p and q, such that for any point r with
    homogeneous coordinates (X, Y, W) the sign of a*X + b*Y + c*W equals orient_sign(p, q, r).
    """
    x1, y1, w1 = homogeneous(p)
    x2, y2, w2 = homogeneous(q)
    return y1 * w2 - w1 * y2, w1 * x2 - x1 * w2, x1 * y2 - y1 * x2


def orient_sign(p, q, r):
    """
    :returns sign (-1, 0, 1) of the cross product (q - p) x (r - p)
    """
    if type(p[0]) is int and type(p[1]) is int and type(q[0]) is int and type(q[1]) is int \
            and type(r[0]) is int and type(r[1]) is int:
        det = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    else:
        a, b, c = line_through(p, q)
        x, y, w = homogeneous(r)
        det = a * x + b * y + c * w
    return (det > 0) - (det < 0)


def orient(p, q, r):
    return Orientation(orient_sign(p, q, r))


def triangle_half_planes(triangle):
    """
    Half planes of the three directed edges of a triangle, normalised so that the strict interior
    is where all three evaluate positive. Edge i runs from corner i to corner (i + 1) % 3.

    :returns tuple of three integer triples (a, b, c)
    :raises DegenerateTriangleError: if the corners are collinear
    """
    a, b, c = triangle
    planes = (line_through(a, b), line_through(b, c), line_through(c, a))
    x, y, w = homogeneous(c)
    pa, pb, pc = planes[0]
    side = pa * x + pb * y + pc * w
    if side == 0:
        raise DegenerateTriangleError(f'Degenerate triangle {tuple(triangle)}')
    if side < 0:
        planes = tuple((-pa, -pb, -pc) for pa, pb, pc in planes)
    return planes


def locate_in_triangle(point, triangle):
    """
    Exact classification of a point against a non-degenerate triangle.
    :returns INTERIOR, OUTSIDE, PointLocation.on_edge(i) or PointLocation.on_corner(i)
    """
    planes = triangle_half_planes(triangle)
    x, y, w = homogeneous(point)
    zeros = []
    for i, (a, b, c) in enumerate(planes):
        side = a * x + b * y + c * w
        if side < 0:
            return OUTSIDE
        if side == 0:
            zeros.append(i)
    if not zeros:
        return INTERIOR
    if len(zeros) == 1:
        return PointLocation.on_edge(zeros[0])
    # edges i and i + 1 meet in corner i + 1
    return PointLocation.on_corner(0 if zeros == [0, 2] else zeros[1])


def convex_hull(points):
    """
    Extreme points of a point set in counterclockwise order, starting at the smallest (x, y).
    Points in the relative interior of hull edges are not returned.

    :param points: iterable of Point
    :raises DegenerateInputError: fewer than 3 distinct points or all points collinear
    """
    pts = sorted(set(points))
    if len(pts) < 3:
        raise DegenerateInputError(f'Convex hull needs at least 3 distinct points, got {len(pts)}')

    def half_hull(sequence):
        chain = []
        for p in sequence:
            while len(chain) >= 2 and orient_sign(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half_hull(pts)
    upper = half_hull(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInputError('All points are collinear')
    return hull


def _axis_values(a, b, *points):
    # collinear points are ordered along x unless the line is vertical
    axis = 0 if a[0] != b[0] else 1
    return tuple(Fraction(p[axis]) for p in (a, b) + points)


def strictly_between(a, b, p):
    """
    For p collinear with segment ab: True iff p lies in the open segment.
    """
    va, vb, vp = _axis_values(a, b, p)
    return min(va, vb) < vp < max(va, vb)


def segments_properly_cross(s1, s2):
    """
    True iff the segments share a point interior to at least one of them.
    Segments meeting only in a common endpoint do not cross.
    """
    p1, p2 = s1
    q1, q2 = s2
    if p1 == p2 or q1 == q2:
        raise DegenerateInputError('Segments must have distinct endpoints')

    d1 = orient_sign(p1, p2, q1)
    d2 = orient_sign(p1, p2, q2)
    d3 = orient_sign(q1, q2, p1)
    d4 = orient_sign(q1, q2, p2)

    if d1 * d2 < 0 and d3 * d4 < 0:
        return True

    if d1 == 0 and d2 == 0:
        a1, a2, b1, b2 = _axis_values(p1, p2, q1, q2)
        overlap = min(max(a1, a2), max(b1, b2)) - max(min(a1, a2), min(b1, b2))
        return overlap > 0

    return (d1 == 0 and strictly_between(p1, p2, q1)) or \
           (d2 == 0 and strictly_between(p1, p2, q2)) or \
           (d3 == 0 and strictly_between(q1, q2, p1)) or \
           (d4 == 0 and strictly_between(q1, q2, p2))


def interpolate(p, q, t):
    """
    :returns the RatPoint p + t * (q - p) for rational t
    """
    t = Fraction(t)
    return RatPoint(p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))


def coordinate_extent(points):
    """
    :returns largest absolute coordinate among the points, at least 1
    """
    extent = 1
    for x, y in points:
        extent = max(extent, abs(x), abs(y))
    return extent
