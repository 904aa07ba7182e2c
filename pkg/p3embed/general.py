"""
Generalized point-set embedding: draw a plane 3-tree on n of k >= n given points.

embed(node, a, b, c) is true iff the subtree of node can be drawn with its region on the points
a, b, c. For an internal node it holds iff some point u strictly inside abc makes the three child
entries true. Entries are evaluated top-down and memoized, so only reachable keys are computed.

Point indices refer to the oracle's point order, which is ascending (x, y).
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, NamedTuple, Optional

from p3embed.embedder import Mapping
from p3embed.errors import InputSizeError
from p3embed.geometry import Triangle, orient_sign
from p3embed.range_oracle import Backend, RangeOracle

logger = logging.getLogger(__name__)


class DPKey(NamedTuple):
    node: int
    a: int
    b: int
    c: int


@dataclass
class DPTable:
    """
    memo maps a DPKey to the index of its witness u, or None if the entry is false.
    Leaves are never stored.
    """
    memo: Dict[DPKey, Optional[int]] = field(default_factory=dict)
    entries_evaluated: int = 0

    def __len__(self):
        return len(self.memo)

    def witness(self, key):
        return self.memo.get(key)


def dp_evaluate(key: DPKey, table: DPTable, tree, oracle: RangeOracle) -> bool:
    """
    :returns True iff the subtree at key.node can be drawn on corners (a, b, c), positionally matching
        the node's region
    """
    points = oracle.points
    pa, pb, pc = points[key.a], points[key.b], points[key.c]
    if orient_sign(pa, pb, pc) == 0:
        return False

    node = tree[key.node]
    if node.is_leaf():
        return True
    if key in table.memo:
        return table.memo[key] is not None

    table.entries_evaluated += 1
    witness = None
    candidates = oracle.report_interior(Triangle(pa, pb, pc))
    # the whole subtree has to fit strictly inside abc
    if len(candidates) >= node.size:
        first, second, third = node.children
        for p in candidates:
            u = oracle.index[p]
            if dp_evaluate(DPKey(first, key.a, key.b, u), table, tree, oracle) and \
                    dp_evaluate(DPKey(second, key.b, key.c, u), table, tree, oracle) and \
                    dp_evaluate(DPKey(third, key.c, key.a, u), table, tree, oracle):
                witness = u
                break
    table.memo[key] = witness
    return witness is not None


def _reconstruct(tree, oracle, table, top):
    assignment = [None] * tree.vertex_count
    for vertex, index in zip(tree.outer, top[1:]):
        assignment[vertex] = oracle.points[index]

    stack = [top]
    while stack:
        key = stack.pop()
        node = tree[key.node]
        if node.is_leaf():
            continue
        u = table.witness(key)
        assignment[node.rep_vertex] = oracle.points[u]
        first, second, third = node.children
        stack.append(DPKey(first, key.a, key.b, u))
        stack.append(DPKey(second, key.b, key.c, u))
        stack.append(DPKey(third, key.c, key.a, u))
    return Mapping(assignment)


def embed_general(tree, points, backend=Backend.HIERARCHICAL, table: DPTable = None) -> Optional[Mapping]:
    """
    Draws the plane 3-tree on a subset of the points.

    Outer triples are tried over point indices (ascending (x, y) order) in lexicographic order and
    the first success is reconstructed from the stored witnesses.

    :param tree: RepTree from plane3tree.validate_and_build
    :param points: k >= tree.vertex_count pairwise distinct Points
    :param table: DPTable to fill, pass one in to inspect the memo afterwards
    :returns Mapping or None
    :raises InputSizeError, DuplicatePointError
    """
    points = list(points)
    if len(points) < tree.vertex_count:
        raise InputSizeError(f'Graph has {tree.vertex_count} vertices but only {len(points)} points were given')
    oracle = RangeOracle(points, backend)
    if table is None:
        table = DPTable()

    k = len(points)
    for a, b, c in itertools.permutations(range(k), 3):
        top = DPKey(tree.root, a, b, c)
        if dp_evaluate(top, table, tree, oracle):
            logger.info(f'Generalized embedding found after {table.entries_evaluated} entries')
            return _reconstruct(tree, oracle, table, top)

    logger.info(f'No generalized embedding, {table.entries_evaluated} entries evaluated')
    return None
