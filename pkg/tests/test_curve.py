"""Turtle geometry of curve words: walks, endpoints, self-avoidance."""

import pytest

from dragonbound.curve import (
    EAST,
    ab_alternation_check,
    check_self_avoiding,
    dragon_path,
    path_edges,
    path_endpoint,
    turn_left,
    turn_right,
)
from dragonbound.lsystem import DRAGON, AlphabetError, iterate

# endpoint(n+1) = endpoint(n) * (1 - i) in complex coordinates; hand-expanded
ENDPOINTS = [(1, 0), (1, -1), (0, -2), (-2, -2), (-4, 0)]


def test_turn_helpers():
    h = EAST
    assert turn_left(turn_right(h)) == h
    for _ in range(4):
        h = turn_right(h)
    assert h == EAST
    assert turn_right(EAST) == (0, -1)
    assert turn_left(EAST) == (0, 1)


def test_single_moves():
    assert dragon_path("A") == [(0, 0), (1, 0)]
    assert dragon_path("") == [(0, 0)]
    assert dragon_path("A+B") == [(0, 0), (1, 0), (1, -1)]


def test_vertex_count_is_edges_plus_one():
    for n in range(13):
        path = dragon_path(iterate(DRAGON, n))
        assert len(path) == 2 ** n + 1


def test_frozen_endpoints():
    for n, expected in enumerate(ENDPOINTS):
        assert path_endpoint(dragon_path(iterate(DRAGON, n))) == expected


def test_endpoint_rotation_rule():
    # each generation appends a rotated copy: e(n+1) = e(n) * (1 - i)
    prev = (1, 0)
    for n in range(1, 14):
        x, y = prev
        expected = (x + y, y - x)
        assert path_endpoint(dragon_path(iterate(DRAGON, n))) == expected
        prev = expected


def test_edges_are_unit_steps():
    path = dragon_path(iterate(DRAGON, 8))
    for (ux, uy), (vx, vy) in path_edges(path):
        assert abs(ux - vx) + abs(uy - vy) == 1


def test_self_avoiding_through_generation_12():
    for n in range(13):
        assert check_self_avoiding(dragon_path(iterate(DRAGON, n)))


def test_vertices_do_repeat_but_edges_do_not():
    # the curve touches itself at corners from generation 4 on
    path = dragon_path(iterate(DRAGON, 4))
    assert len(set(path)) < len(path)
    assert check_self_avoiding(path)


def test_retraced_edge_is_rejected():
    assert not check_self_avoiding([(0, 0), (1, 0), (0, 0)])
    assert not check_self_avoiding([(0, 0), (1, 0), (1, 1), (1, 0)])


def test_moves_alternate_horizontal_vertical():
    for n in range(11):
        word = iterate(DRAGON, n)
        assert ab_alternation_check(word, dragon_path(word))


def test_alternation_check_requires_matching_path():
    word = iterate(DRAGON, 3)
    other = dragon_path(iterate(DRAGON, 2))
    with pytest.raises(ValueError):
        ab_alternation_check(word, other)


def test_unknown_symbol_rejected():
    with pytest.raises(AlphabetError):
        dragon_path("AXB")
    with pytest.raises(AlphabetError):
        ab_alternation_check("AXB", [(0, 0), (1, 0), (2, 0)])
