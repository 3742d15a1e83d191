import pytest

from laminations.errors import NotInternal, Unsupported
from laminations.triangulation import (FlipMove, Triangulation, all_triangulations, fan_triangulation,
                                       flip, flip_graph, flip_path)


@pytest.mark.parametrize("n,count", [(3, 1), (4, 2), (5, 5), (6, 14), (7, 42), (8, 132)])
def test_catalan_counts(n, count):
    assert len(all_triangulations(n)) == count


def test_enumeration_cap():
    with pytest.raises(Unsupported):
        all_triangulations(9)


def test_fan_shape():
    fan = fan_triangulation(5)
    assert fan.sorted_triangles() == [(0, 1, 2), (0, 2, 3), (0, 3, 4)]
    assert fan.diagonals == {(0, 2), (0, 3)}


def test_flip_square_and_involution():
    fan = fan_triangulation(4)
    other = flip(fan, (0, 2))
    assert other.diagonals == {(1, 3)}
    assert flip(other, (1, 3)) == fan


def test_flip_rejects_boundary_edges():
    with pytest.raises(NotInternal):
        flip(fan_triangulation(5), (0, 1))
    with pytest.raises(NotInternal):
        FlipMove.on(fan_triangulation(5), (1, 3))


def test_invalid_triangulations_rejected():
    with pytest.raises(ValueError):
        Triangulation(4, frozenset({(0, 1, 2), (0, 1, 3)}))
    with pytest.raises(ValueError):
        Triangulation(5, frozenset({(0, 1, 2)}))


def test_flips_from_fan_reach_everything_n5():
    graph = flip_graph(5)
    start = fan_triangulation(5)
    seen, todo = {start}, [start]
    while todo:
        for nb in graph[todo.pop()]:
            if nb not in seen:
                seen.add(nb)
                todo.append(nb)
    assert seen == set(all_triangulations(5))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_flip_paths_reach_target(n):
    tris = all_triangulations(n)
    for a in tris:
        for b in tris[::3]:
            cur = a
            for d in flip_path(a, b):
                cur = flip(cur, d)
            assert cur == b


def test_quadrilateral_orientation():
    a, b, c, d = fan_triangulation(5).quadrilateral((0, 3))
    assert (a, c) == (0, 3) and a < b < c and not a < d < c


def test_flip_path_is_shortest_and_empty_on_equal_input():
    a, b = all_triangulations(4)
    assert flip_path(a, a) == []
    assert len(flip_path(a, b)) == 1


def test_flip_path_beyond_enumeration_cap():
    start = fan_triangulation(10)
    target = fan_triangulation(10, apex=5)
    cur = start
    for d in flip_path(start, target):
        cur = flip(cur, d)
    assert cur == target
