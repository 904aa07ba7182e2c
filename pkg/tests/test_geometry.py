import random
from fractions import Fraction

import pytest

from p3embed.errors import CoordinateBoundError, DegenerateInputError, DegenerateTriangleError
from p3embed.geometry import Point, RatPoint, Triangle, Orientation, PointLocation, INTERIOR, OUTSIDE, \
    convex_hull, interpolate, locate_in_triangle, orient, orient_sign, segments_properly_cross, \
    set_coordinate_bound, triangle_half_planes

from conftest import points


def test_orient_cases():
    assert orient((0, 0), (1, 0), (0, 1)) == Orientation.COUNTER_CLOCKWISE
    assert orient((0, 0), (1, 1), (2, 2)) == Orientation.COLLINEAR
    assert orient((0, 0), (0, 1), (1, 0)) == Orientation.CLOCKWISE


def test_orient_rational():
    half = Fraction(1, 2)
    assert orient(RatPoint(half, 0), RatPoint(1, half), RatPoint(0, half)) == Orientation.COUNTER_CLOCKWISE
    # 1/3 of the way along y = x
    assert orient(Point(0, 0), Point(3, 3), RatPoint(Fraction(1, 3), Fraction(1, 3))) == Orientation.COLLINEAR
    assert orient(Point(0, 0), Point(3, 3), RatPoint(Fraction(1, 3), Fraction(1, 3) + Fraction(1, 10 ** 30))) \
        == Orientation.COUNTER_CLOCKWISE


def test_orient_antisymmetric():
    rng = random.Random(3)
    for _ in range(500):
        p, q, r = (Point(rng.randint(-20, 20), rng.randint(-20, 20)) for _ in range(3))
        assert orient_sign(p, q, r) == -orient_sign(p, r, q)
        assert orient_sign(p, q, r) == -orient_sign(q, p, r)
        assert orient(p, q, r) == orient(q, p, r).reverse()


def test_orient_invariant_under_scaling_and_translation():
    rng = random.Random(4)
    for _ in range(300):
        p, q, r = ((rng.randint(-1000, 1000), rng.randint(-1000, 1000)) for _ in range(3))
        scale = rng.randint(1, 10 ** 6)
        dx, dy = rng.randint(-10 ** 6, 10 ** 6), rng.randint(-10 ** 6, 10 ** 6)
        moved = [(x * scale + dx, y * scale + dy) for x, y in (p, q, r)]
        assert orient_sign(p, q, r) == orient_sign(*moved)


def test_convex_hull_cases():
    assert convex_hull(points((0, 0), (4, 0), (0, 4), (1, 1))) == points((0, 0), (4, 0), (0, 4))
    assert convex_hull(points((0, 0), (4, 0), (4, 4), (0, 4))) == points((0, 0), (4, 0), (4, 4), (0, 4))
    assert convex_hull(points((0, 0), (4, 0), (2, 0), (0, 4))) == points((0, 0), (4, 0), (0, 4))


def test_convex_hull_degenerate():
    with pytest.raises(DegenerateInputError):
        convex_hull(points((0, 0), (1, 1)))
    with pytest.raises(DegenerateInputError):
        convex_hull(points((0, 0), (1, 1), (2, 2), (5, 5)))


def test_convex_hull_idempotent():
    rng = random.Random(5)
    for _ in range(50):
        pts = list({Point(rng.randint(0, 30), rng.randint(0, 30)) for _ in range(40)})
        hull = convex_hull(pts)
        assert convex_hull(hull) == hull
        for i in range(len(hull)):
            assert orient_sign(hull[i], hull[(i + 1) % len(hull)], hull[(i + 2) % len(hull)]) > 0


def test_locate_in_triangle_cases():
    t = Triangle(Point(0, 0), Point(6, 0), Point(0, 6))
    assert locate_in_triangle(Point(1, 1), t) == INTERIOR
    assert locate_in_triangle(Point(3, 3), t) == PointLocation.on_edge(1)
    assert locate_in_triangle(Point(7, 0), t) == OUTSIDE
    assert locate_in_triangle(Point(3, 0), t) == PointLocation.on_edge(0)
    assert locate_in_triangle(Point(0, 3), t) == PointLocation.on_edge(2)
    assert locate_in_triangle(Point(0, 0), t) == PointLocation.on_corner(0)
    assert locate_in_triangle(Point(6, 0), t) == PointLocation.on_corner(1)
    assert locate_in_triangle(Point(0, 6), t) == PointLocation.on_corner(2)


def test_locate_ignores_corner_order():
    clockwise = Triangle(Point(0, 0), Point(0, 6), Point(6, 0))
    assert locate_in_triangle(Point(1, 1), clockwise) == INTERIOR
    assert locate_in_triangle(Point(3, 3), clockwise) == PointLocation.on_edge(1)
    assert locate_in_triangle(Point(0, 6), clockwise) == PointLocation.on_corner(1)


def test_locate_random_interior_points_are_left_of_every_edge():
    rng = random.Random(6)
    t = Triangle(Point(-50, -40), Point(60, -10), Point(5, 70))
    for _ in range(500):
        p = Point(rng.randint(-60, 60), rng.randint(-60, 80))
        signs = [orient_sign(t[i], t[(i + 1) % 3], p) for i in range(3)]
        if all(sign > 0 for sign in signs):
            assert locate_in_triangle(p, t) == INTERIOR
        elif locate_in_triangle(p, t) == INTERIOR:
            pytest.fail(f'{p} reported inside')


def test_degenerate_triangle_rejected():
    with pytest.raises(DegenerateTriangleError):
        locate_in_triangle(Point(1, 1), Triangle(Point(0, 0), Point(1, 1), Point(2, 2)))
    with pytest.raises(DegenerateTriangleError):
        triangle_half_planes(Triangle(Point(0, 0), Point(0, 0), Point(2, 5)))


def test_segments_properly_cross_cases():
    assert segments_properly_cross(points((0, 0), (2, 2)), points((0, 2), (2, 0)))
    assert not segments_properly_cross(points((0, 0), (1, 1)), points((1, 1), (2, 0)))
    assert segments_properly_cross(points((0, 0), (4, 0)), points((2, 0), (6, 0)))
    # touching collinear segments only share an endpoint
    assert not segments_properly_cross(points((0, 0), (2, 0)), points((2, 0), (6, 0)))
    # T junction: endpoint in the interior of the other segment
    assert segments_properly_cross(points((0, 0), (4, 0)), points((2, 0), (2, 5)))
    assert not segments_properly_cross(points((0, 0), (1, 0)), points((2, 1), (3, 5)))


def test_segments_vertical_overlap():
    assert segments_properly_cross(points((0, 0), (0, 4)), points((0, 3), (0, 9)))
    assert not segments_properly_cross(points((0, 0), (0, 4)), points((0, 5), (0, 9)))


def test_point_coordinate_bound():
    set_coordinate_bound(100)
    Point(100, -100)
    with pytest.raises(CoordinateBoundError):
        Point(101, 0)
    with pytest.raises(CoordinateBoundError):
        set_coordinate_bound(0)


def test_rat_point_equals_point():
    assert RatPoint(Fraction(6, 2), 3) == Point(3, 3)
    assert hash(RatPoint(Fraction(6, 2), 3)) == hash(Point(3, 3))
    assert RatPoint(Fraction(6, 2), 3).to_point() == Point(3, 3)
    assert not RatPoint(Fraction(1, 2), 3).is_integral()
    assert RatPoint(Fraction(2, 4), 1).x.denominator == 2


def test_interpolate():
    assert interpolate(Point(0, 0), Point(6, 3), Fraction(1, 3)) == RatPoint(2, 1)
    v = interpolate(Point(0, 0), Point(1, 1), Fraction(1, 7))
    assert v == RatPoint(Fraction(1, 7), Fraction(1, 7))
