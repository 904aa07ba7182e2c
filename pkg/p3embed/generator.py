"""
Seeded instance generators.

gen_yes_instance builds the graph and the point set together: it samples the points, then
recursively picks a random point inside the current region as the region's representative and
splits the remaining points over the three sub-regions. The planted drawing is valid by
construction and recorded in the instance.
"""
import logging
import math
import random

from p3embed.errors import GeneratorError
from p3embed.geometry import Point, Triangle, INTERIOR, locate_in_triangle, get_coordinate_bound
from p3embed.instance import InstanceFile, Expected
from p3embed.plane3tree import PlaneGraphInput

logger = logging.getLogger(__name__)

DEFAULT_COORD_BOUND = 10 ** 6


def gen_plane3tree(n, seed) -> PlaneGraphInput:
    """
    Random plane 3-tree on vertices 0..n-1 with outer face (0, 1, 2). Every vertex from 3 on is
    stacked into a uniformly chosen face of the current graph.
    """
    if n < 3:
        raise GeneratorError(f'A plane 3-tree needs at least 3 vertices, got {n}')
    rng = random.Random(seed)
    edges = [(0, 1), (1, 2), (2, 0)]
    faces = [(0, 1, 2)]
    for v in range(3, n):
        i = rng.randrange(len(faces))
        x, y, z = faces[i]
        faces[i] = (x, y, v)
        faces.append((y, z, v))
        faces.append((z, x, v))
        edges.extend(((x, v), (y, v), (z, v)))
    return PlaneGraphInput(n=n, edges=edges, outer=(0, 1, 2))


def _direction(p, q):
    dx, dy = q[0] - p[0], q[1] - p[1]
    g = math.gcd(dx, dy)
    dx, dy = dx // g, dy // g
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    return dx, dy


def _collinear_with_two(p, chosen):
    directions = set()
    for q in chosen:
        d = _direction(p, q)
        if d in directions:
            return True
        directions.add(d)
    return False


class _Sampler:
    """
    Rejection sampler of integer points strictly inside triangles, sharing one resampling budget.
    """
    def __init__(self, rng, budget, step=1):
        self.rng = rng
        self.budget = budget
        self.step = step

    def draw(self, triangle, accept=None):
        """
        :returns Point strictly inside triangle for which accept(point) holds
        :raises GeneratorError: if the budget is exhausted
        """
        xs = [p[0] for p in triangle]
        ys = [p[1] for p in triangle]
        step = self.step
        low_x, high_x = -(-min(xs) // step), max(xs) // step
        low_y, high_y = -(-min(ys) // step), max(ys) // step
        while self.budget > 0:
            self.budget -= 1
            p = Point(self.rng.randint(low_x, high_x) * step, self.rng.randint(low_y, high_y) * step)
            if locate_in_triangle(p, triangle) == INTERIOR and (accept is None or accept(p)):
                return p
        raise GeneratorError('Resampling budget exhausted, increase the coordinate bound')


def _snap(value, step):
    # towards zero, so snapped corners stay within the bound
    return value // step * step if value >= 0 else -(-value // step * step)


def _check_request(n, coord_bound, minimum_bound):
    if n < 3:
        raise GeneratorError(f'A plane 3-tree needs at least 3 vertices, got {n}')
    if coord_bound > get_coordinate_bound():
        raise GeneratorError(f'Coordinate bound {coord_bound} exceeds the configured bound {get_coordinate_bound()}')
    if coord_bound < minimum_bound:
        raise GeneratorError(f'Coordinate bound {coord_bound} too small')


def _outer_corners(rng, bound):
    # counterclockwise: bottom left, bottom right, top
    a = Point(-bound, -bound)
    b = Point(bound, -bound + rng.randint(0, bound // 4))
    c = Point(rng.randint(-(bound // 4), bound // 4), bound)
    return a, b, c


def _plant(rng, sampler, corners, interior):
    """
    Recursive region splitting. Points landing on a chord are redrawn inside a random sub-region.
    :returns edges, planted points indexed by vertex
    """
    planted = list(corners)
    edges = [(0, 1), (1, 2), (2, 0)]
    taken = set(corners) | set(interior)
    stack = [((0, 1, 2), interior)]
    while stack:
        (x, y, z), points = stack.pop()
        if not points:
            continue
        u = points.pop(rng.randrange(len(points)))
        v = len(planted)
        planted.append(u)
        edges.extend(((x, v), (y, v), (z, v)))

        regions = [(x, y, v), (y, z, v), (z, x, v)]
        triangles = [Triangle(*(planted[w] for w in region)) for region in regions]
        parts = [[], [], []]
        for p in points:
            for part, triangle in zip(parts, triangles):
                if locate_in_triangle(p, triangle) == INTERIOR:
                    part.append(p)
                    break
            else:
                logger.debug(f'Point {p} lies on a chord, redrawing it')
                taken.discard(p)
                i = rng.randrange(3)
                q = sampler.draw(triangles[i], accept=lambda s: s not in taken)
                taken.add(q)
                parts[i].append(q)
        for region, part in zip(regions, parts):
            stack.append((region, part))
    return edges, planted


def gen_yes_instance(n, seed, coord_bound=DEFAULT_COORD_BOUND, general_position=True) -> InstanceFile:
    """
    Embeddable instance with its planted drawing.

    :param coord_bound: absolute coordinates stay within this bound; the outer triangle spans it
    :param general_position: if False, points are snapped to a coarse grid so that many triples are
        collinear, without any point on a drawn edge
    :raises GeneratorError: if n < 3 or the points do not fit under coord_bound
    """
    _check_request(n, coord_bound, minimum_bound=4)

    rng = random.Random(seed)
    corners = _outer_corners(rng, coord_bound)
    step = 1
    if not general_position:
        # a grid of roughly 4n nodes inside the outer triangle
        step = max(1, coord_bound // max(2, math.isqrt(2 * n)))
        corners = tuple(Point(_snap(p[0], step), _snap(p[1], step)) for p in corners)
    sampler = _Sampler(rng, budget=100 * n + 1000, step=step)
    outer = Triangle(*corners)

    interior = []
    chosen = set(corners)
    for _ in range(n - 3):
        if general_position:
            p = sampler.draw(outer, accept=lambda s: s not in chosen and not _collinear_with_two(s, chosen))
        else:
            p = sampler.draw(outer, accept=lambda s: s not in chosen)
        chosen.add(p)
        interior.append(p)
    if sampler.budget < 50 * n:
        logger.warning(f'Generator used {100 * n + 1000 - sampler.budget} draws for {n} points')

    # redraws inside sub-regions use the full integer grid
    sampler.step = 1
    edges, planted = _plant(rng, sampler, corners, interior)

    points = list(planted)
    rng.shuffle(points)
    graph = PlaneGraphInput(n=n, edges=edges, outer=(0, 1, 2))
    return InstanceFile(graph=graph, points=points, expected=Expected.EMBEDDABLE, planted=planted,
                        comment=f'yes-instance n={n} seed={seed} coord_bound={coord_bound}'
                                f'{"" if general_position else " collinear"}')


def gen_random_instance(n, seed, coord_bound=DEFAULT_COORD_BOUND) -> InstanceFile:
    """
    Random plane 3-tree with an unrelated random point set. Half of the seeds place all but three
    points inside a triangle so that the hull test passes and the recursion is exercised.

    :raises GeneratorError: if n < 3 or n points do not fit under coord_bound
    """
    _check_request(n, coord_bound, minimum_bound=1)
    if (2 * coord_bound + 1) ** 2 < n:
        raise GeneratorError(f'{n} distinct points do not fit under coordinate bound {coord_bound}')
    rng = random.Random(seed)
    graph = gen_plane3tree(n, rng.randrange(2 ** 32))
    sampler = _Sampler(rng, budget=100 * n + 1000)
    if rng.random() < 0.5:
        corners = _outer_corners(rng, coord_bound)
        chosen = set(corners)
        points = list(corners)
        for _ in range(n - 3):
            p = sampler.draw(Triangle(*corners), accept=lambda s: s not in chosen)
            chosen.add(p)
            points.append(p)
    else:
        chosen = set()
        while len(chosen) < n:
            chosen.add(Point(rng.randint(-coord_bound, coord_bound), rng.randint(-coord_bound, coord_bound)))
        points = sorted(chosen)
    rng.shuffle(points)
    return InstanceFile(graph=graph, points=points, expected=Expected.UNKNOWN,
                        comment=f'random instance n={n} seed={seed} coord_bound={coord_bound}')
