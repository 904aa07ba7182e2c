"""
Recognition of plane 3-trees and construction of their representative tree.

The graph is peeled: interior vertices of degree 3 whose neighbours are pairwise adjacent are
removed one at a time (lowest vertex id first). Replaying the removals backwards stacks every
vertex into a face of the growing triangulation, which builds the representative tree top-down
and at the same time proves that the input is a plane 3-tree with the declared outer face.
"""
import heapq
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from p3embed.errors import MalformedGraphError, DisconnectedGraphError, NotTriangulatedError, BadOuterFaceError

logger = logging.getLogger(__name__)


def _edge_key(u, v):
    return (u, v) if u < v else (v, u)


@dataclass
class PlaneGraphInput:
    """
    Plane 3-tree given combinatorially.
    :param n: vertex count, vertices are 0..n-1
    :param edges: unordered vertex pairs
    :param outer: outer triangle (a, b, c), declared counterclockwise
    """
    n: int
    edges: List[Tuple[int, int]]
    outer: Tuple[int, int, int]

    def check(self):
        """
        Raises MalformedGraphError if the input is not well formed.
        """
        if self.n < 3:
            raise MalformedGraphError(f'A plane 3-tree needs at least 3 vertices, got {self.n}')
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise MalformedGraphError(f'Edge ({u}, {v}) references a vertex outside 0..{self.n - 1}')
            if u == v:
                raise MalformedGraphError(f'Self loop at vertex {u}')
            key = _edge_key(u, v)
            if key in seen:
                raise MalformedGraphError(f'Duplicate edge ({u}, {v})')
            seen.add(key)
        if len(self.outer) != 3 or len(set(self.outer)) != 3:
            raise MalformedGraphError(f'Outer face must be three distinct vertices, got {self.outer}')
        for v in self.outer:
            if not 0 <= v < self.n:
                raise MalformedGraphError(f'Outer vertex {v} outside 0..{self.n - 1}')
        a, b, c = self.outer
        for u, v in ((a, b), (b, c), (c, a)):
            if _edge_key(u, v) not in seen:
                raise BadOuterFaceError(f'Outer edge ({u}, {v}) missing from the edge list')

    def adjacency(self):
        adjacency = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        return adjacency

    def edge_set(self):
        return {_edge_key(u, v) for u, v in self.edges}


@dataclass
class RepNode:
    """
    Node of the representative tree. A leaf is a face of the drawing; an internal node is a region
    (x, y, z) split by its representative vertex into the children (x, y, p), (y, z, p), (z, x, p).
    """
    region: Tuple[int, int, int]
    rep_vertex: Optional[int] = None
    children: Optional[Tuple[int, int, int]] = None
    size: int = 0

    def is_leaf(self):
        return self.rep_vertex is None


@dataclass
class RepTree:
    vertex_count: int
    outer: Tuple[int, int, int]
    nodes: List[RepNode] = field(default_factory=list)
    root: int = 0

    def __getitem__(self, node_id):
        return self.nodes[node_id]

    def internal_count(self):
        return sum(1 for node in self.nodes if not node.is_leaf())

    def internal_nodes(self):
        """
        :returns generator over (node_id, node) of internal nodes in preorder
        """
        stack = [self.root]
        while stack:
            node_id = stack.pop()
            node = self.nodes[node_id]
            if node.is_leaf():
                continue
            yield node_id, node
            stack.extend(reversed(node.children))

    def child_sizes(self, node_id):
        return tuple(self.nodes[child].size for child in self.nodes[node_id].children)

    def depth(self):
        deepest = 0
        stack = [(self.root, 0)]
        while stack:
            node_id, level = stack.pop()
            deepest = max(deepest, level)
            node = self.nodes[node_id]
            if not node.is_leaf():
                stack.extend((child, level + 1) for child in node.children)
        return deepest


def _check_connected(n, adjacency):
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != n:
        raise DisconnectedGraphError(f'Graph is disconnected, {n - len(seen)} vertices unreachable from vertex 0')


def _peel(graph, adjacency):
    """
    Removes interior degree-3 vertices until only the outer triangle is left.
    :returns list of (vertex, neighbour triple) in removal order
    """
    outer = set(graph.outer)
    degree = [len(neighbours) for neighbours in adjacency]
    removed = [False] * graph.n

    heap = [v for v in range(graph.n) if v not in outer and degree[v] == 3]
    heapq.heapify(heap)

    order = []
    while heap:
        v = heapq.heappop(heap)
        if removed[v] or degree[v] != 3:
            continue
        x, y, z = sorted(adjacency[v])
        if y not in adjacency[x] or z not in adjacency[y] or x not in adjacency[z]:
            # neighbours can only lose edges, so v never becomes peelable again at degree 3
            continue

        removed[v] = True
        order.append((v, (x, y, z)))
        for w in (x, y, z):
            adjacency[w].discard(v)
            degree[w] -= 1
            if w not in outer and degree[w] == 3:
                heapq.heappush(heap, w)
        adjacency[v] = set()

    if len(order) != graph.n - 3:
        stuck = sorted(v for v in range(graph.n) if not removed[v] and v not in outer)
        raise NotTriangulatedError(f'Peeling stopped after {len(order)} of {graph.n - 3} vertices, '
                                   f'no interior vertex of degree 3 among {stuck[:10]}')
    return order


def validate_and_build(graph: PlaneGraphInput) -> RepTree:
    """
    Checks that the input is a plane 3-tree with the declared outer triangle and builds its
    representative tree with subtree sizes filled in.

    :raises MalformedGraphError, DisconnectedGraphError, NotTriangulatedError, BadOuterFaceError
    """
    graph.check()
    n = graph.n
    if len(graph.edges) != 3 * n - 6:
        raise NotTriangulatedError(f'A triangulation on {n} vertices has {3 * n - 6} edges, got {len(graph.edges)}')

    adjacency = graph.adjacency()
    _check_connected(n, adjacency)

    order = _peel(graph, adjacency)

    tree = RepTree(vertex_count=n, outer=tuple(graph.outer), nodes=[RepNode(region=tuple(graph.outer))])
    faces = {frozenset(graph.outer): 0}

    for v, neighbours in reversed(order):
        node_id = faces.pop(frozenset(neighbours), None)
        if node_id is None:
            if frozenset(neighbours) == frozenset(graph.outer):
                raise BadOuterFaceError(f'Vertex {v} lies outside the declared outer triangle {graph.outer}')
            raise NotTriangulatedError(f'Vertex {v} is stacked on {neighbours}, which is not a face')

        node = tree.nodes[node_id]
        x, y, z = node.region
        first = len(tree.nodes)
        for region in ((x, y, v), (y, z, v), (z, x, v)):
            faces[frozenset(region)] = len(tree.nodes)
            tree.nodes.append(RepNode(region=region))
        node.rep_vertex = v
        node.children = (first, first + 1, first + 2)

    logger.debug(f'Built representative tree with {len(tree.nodes)} nodes for {n} vertices')
    return subtree_sizes(tree)


def subtree_sizes(tree: RepTree) -> RepTree:
    """
    Fills in every node's size: the number of internal nodes in its subtree, itself included.
    """
    postorder = []
    stack = [tree.root]
    while stack:
        node_id = stack.pop()
        postorder.append(node_id)
        node = tree.nodes[node_id]
        if not node.is_leaf():
            stack.extend(node.children)

    for node_id in reversed(postorder):
        node = tree.nodes[node_id]
        if node.is_leaf():
            node.size = 0
        else:
            node.size = 1 + sum(tree.nodes[child].size for child in node.children)
    return tree


def common_neighbours(graph: PlaneGraphInput, vertices):
    """
    :returns sorted list of vertices adjacent to every given vertex
    """
    adjacency = graph.adjacency()
    common = set(range(graph.n))
    for v in vertices:
        common &= adjacency[v]
    return sorted(common)
