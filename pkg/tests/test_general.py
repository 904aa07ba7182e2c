import random

import pytest

from p3embed import generator
from p3embed.embedder import Mapping, embed
from p3embed.errors import InputSizeError
from p3embed.general import DPKey, DPTable, dp_evaluate, embed_general
from p3embed.geometry import Point
from p3embed.plane3tree import validate_and_build
from p3embed.range_oracle import Backend, build
from p3embed.verifier import VerifyMode, brute_force_embed, verify

from conftest import points


def test_k4_exact_point_count(k4, k4_points):
    mapping = embed_general(validate_and_build(k4), k4_points)
    assert mapping == Mapping(points((0, 0), (0, 10), (10, 0), (3, 3)))


def test_k4_with_extra_points(k4, k4_points):
    pts = k4_points + points((20, 20), (-5, 3))
    tree = validate_and_build(k4)
    mapping = embed_general(tree, pts)
    assert mapping is not None
    assert verify(k4, pts, mapping, VerifyMode.GENERALIZED).valid
    # the exact check counts the two unused points
    with pytest.raises(InputSizeError):
        verify(k4, pts, mapping, VerifyMode.EXACT)


def test_square_with_centre(k4):
    pts = points((0, 0), (10, 0), (10, 10), (0, 10), (4, 5))
    mapping = embed_general(validate_and_build(k4), pts)
    assert mapping is not None
    assert mapping[3] == Point(4, 5)
    assert verify(k4, pts, mapping, VerifyMode.GENERALIZED).valid


def test_square_has_no_drawing(k4):
    table = DPTable()
    pts = points((0, 0), (10, 0), (10, 10), (0, 10))
    assert embed_general(validate_and_build(k4), pts, table=table) is None
    assert len(table) == 24
    assert table.entries_evaluated == 24
    assert all(witness is None for witness in table.memo.values())


def test_too_few_points(k4):
    with pytest.raises(InputSizeError):
        embed_general(validate_and_build(k4), points((0, 0), (10, 0), (0, 10)))


def test_dp_evaluate_entries(k4, k4_points):
    tree = validate_and_build(k4)
    oracle = build(k4_points)
    # indices in ascending (x, y) order: (0, 0), (0, 10), (3, 3), (10, 0)
    assert oracle.index[Point(3, 3)] == 2
    table = DPTable()
    key = DPKey(tree.root, 0, 3, 1)
    assert dp_evaluate(key, table, tree, oracle)
    assert table.witness(key) == 2
    # leaves are true on any proper triangle and never stored
    leaf = tree[tree.root].children[0]
    assert dp_evaluate(DPKey(leaf, 0, 3, 2), table, tree, oracle)
    assert DPKey(leaf, 0, 3, 2) not in table.memo
    assert len(table) == 1


def test_dp_evaluate_collinear_corners():
    tree = validate_and_build(generator.gen_plane3tree(3, 0))
    oracle = build(points((0, 0), (1, 1), (2, 2), (5, 0)))
    table = DPTable()
    assert not dp_evaluate(DPKey(tree.root, 0, 1, 2), table, tree, oracle)
    assert dp_evaluate(DPKey(tree.root, 0, 1, 3), table, tree, oracle)
    assert len(table) == 0


def test_memo_holds_only_internal_nodes():
    rng = random.Random(41)
    pts = list({Point(rng.randint(0, 40), rng.randint(0, 40)) for _ in range(22)})
    tree = validate_and_build(generator.gen_plane3tree(7, 5))
    table = DPTable()
    embed_general(tree, pts, table=table)
    assert all(not tree[key.node].is_leaf() for key in table.memo)
    assert table.entries_evaluated == len(table)
    assert table.entries_evaluated <= 7 * len(pts) ** 3


def test_agrees_with_exact_embedder():
    for seed in range(4):
        generated = generator.gen_yes_instance(9, seed)
        tree = validate_and_build(generated.graph)
        mapping = embed_general(tree, generated.points)
        assert mapping is not None
        assert embed(tree, generated.points).found
        assert verify(generated.graph, generated.points, mapping, VerifyMode.EXACT).valid


def test_planted_drawing_plus_noise():
    rng = random.Random(42)
    generated = generator.gen_yes_instance(8, 4, coord_bound=1000)
    taken = set(generated.points)
    while len(taken) < 12:
        taken.add(Point(rng.randint(-1000, 1000), rng.randint(-1000, 1000)))
    pts = sorted(taken)
    tree = validate_and_build(generated.graph)
    for backend in Backend:
        mapping = embed_general(tree, pts, backend=backend)
        assert mapping is not None
        assert verify(generated.graph, pts, mapping, VerifyMode.GENERALIZED).valid


def _check_against_brute_force(graph, pts):
    n, k = graph.n, len(pts)
    tree = validate_and_build(graph)
    table = DPTable()
    mapping = embed_general(tree, pts, table=table)
    assert table.entries_evaluated <= n * k ** 3
    expected = brute_force_embed(graph, pts, VerifyMode.GENERALIZED)
    assert (mapping is None) == (expected is None)
    if mapping is not None:
        assert verify(graph, pts, mapping, VerifyMode.GENERALIZED).valid
    if k == n:
        assert embed(tree, pts).found == (mapping is not None)


def test_matches_brute_force_on_small_instances():
    rng = random.Random(43)
    for _ in range(25):
        n = rng.randint(4, 5)
        k = rng.randint(n, 7)
        graph = generator.gen_plane3tree(n, rng.randrange(10 ** 6))
        chosen = set()
        while len(chosen) < k:
            chosen.add(Point(rng.randint(0, 8), rng.randint(0, 8)))
        pts = sorted(chosen)
        _check_against_brute_force(graph, pts)


@pytest.mark.slow
def test_matches_brute_force_at_scale():
    rng = random.Random(44)
    for _ in range(300):
        n = rng.randint(3, 6)
        k = rng.randint(n, 9)
        graph = generator.gen_plane3tree(n, rng.randrange(10 ** 6))
        chosen = set()
        while len(chosen) < k:
            chosen.add(Point(rng.randint(0, 10), rng.randint(0, 10)))
        _check_against_brute_force(graph, sorted(chosen))
