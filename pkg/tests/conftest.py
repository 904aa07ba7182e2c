import itertools

import pytest

from p3embed.geometry import DEFAULT_COORDINATE_BOUND, Point, RatPoint, orient_sign, set_coordinate_bound
from p3embed.plane3tree import PlaneGraphInput

# faces receiving vertices 3, 4, ... of the 17-vertex test graph, in insertion order
SEVENTEEN_INSERTIONS = [
    (0, 1, 2), (0, 1, 3), (1, 2, 3), (2, 0, 3), (0, 1, 4), (1, 3, 4), (3, 0, 4),
    (1, 2, 5), (2, 3, 5), (2, 0, 6), (0, 3, 6), (3, 2, 6), (0, 1, 7), (1, 4, 7),
]


def stacked_graph(insertions, outer=(0, 1, 2)):
    """
    Plane 3-tree obtained by inserting vertex 3 + i into the face insertions[i].
    """
    edges = [(outer[0], outer[1]), (outer[1], outer[2]), (outer[2], outer[0])]
    for i, face in enumerate(insertions):
        v = 3 + i
        edges.extend((w, v) for w in face)
    return PlaneGraphInput(n=3 + len(insertions), edges=edges, outer=outer)


def points(*coordinates):
    return [Point(x, y) for x, y in coordinates]


def centroid_drawing(insertions, corners=((0, 0), (810, 0), (0, 810))):
    """
    Planted drawing of stacked_graph(insertions): every inserted vertex sits on the centroid of its face.
    The default corners are divisible by 3 ** 4, enough for four levels of nesting.
    """
    coordinates = [RatPoint(x, y) for x, y in corners]
    for face in insertions:
        a, b, c = (coordinates[v] for v in face)
        coordinates.append(RatPoint((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3))
    return [p.to_point() for p in coordinates]


def has_collinear_triple(pts):
    return any(orient_sign(p, q, r) == 0 for p, q, r in itertools.combinations(pts, 3))


@pytest.fixture
def k3():
    return stacked_graph([])


@pytest.fixture
def k4():
    return stacked_graph([(0, 1, 2)])


@pytest.fixture
def five_vertex_graph():
    # 3 in the outer face, 4 in the region (0, 1, 3)
    return stacked_graph([(0, 1, 2), (0, 1, 3)])


@pytest.fixture
def seventeen():
    return stacked_graph(SEVENTEEN_INSERTIONS)


@pytest.fixture
def k4_points():
    return points((0, 0), (10, 0), (0, 10), (3, 3))


@pytest.fixture(autouse=True)
def reset_coordinate_bound():
    yield
    set_coordinate_bound(DEFAULT_COORDINATE_BOUND)
