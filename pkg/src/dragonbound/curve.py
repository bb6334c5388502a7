"""Turtle realization of curve words on the unit lattice."""

from __future__ import annotations

from .lsystem import AlphabetError

EAST = (1, 0)


def turn_right(heading):
    x, y = heading
    return (y, -x)


def turn_left(heading):
    x, y = heading
    return (-y, x)


def dragon_path(word: str) -> list:
    """Vertices visited by the turtle: start at the origin, head east.

    'A' and 'B' each advance one unit, '+' turns clockwise, '-'
    counterclockwise.  Returns one vertex per move plus the start.
    """
    x, y = 0, 0
    hx, hy = EAST
    vertices = [(0, 0)]
    for c in word:
        if c == "A" or c == "B":
            x += hx
            y += hy
            vertices.append((x, y))
        elif c == "+":
            hx, hy = hy, -hx
        elif c == "-":
            hx, hy = -hy, hx
        else:
            raise AlphabetError(f"symbol {c!r} is not a curve symbol")
    return vertices


def path_edges(path):
    """Consecutive vertex pairs of a path."""
    return list(zip(path, path[1:]))


def path_endpoint(path):
    return path[-1]


def check_self_avoiding(path) -> bool:
    """True when no undirected unit edge of the path repeats.

    Vertices may repeat; the curve touches itself at corners but never
    retraces or crosses a segment.
    """
    seen = set()
    for u, v in zip(path, path[1:]):
        edge = (u, v) if u <= v else (v, u)
        if edge in seen:
            return False
        seen.add(edge)
    return True


def ab_alternation_check(word: str, path) -> bool:
    """True when every 'A' step of the walk is horizontal and every 'B' vertical.

    ``path`` must be the turtle walk of ``word``; raises otherwise.
    """
    x, y = 0, 0
    hx, hy = EAST
    i = 0
    if path[0] != (0, 0):
        raise ValueError("path does not start at the origin")
    for c in word:
        if c == "A" or c == "B":
            x += hx
            y += hy
            i += 1
            if i >= len(path) or path[i] != (x, y):
                raise ValueError("path does not match the word's turtle walk")
            if c == "A" and hy != 0:
                return False
            if c == "B" and hx != 0:
                return False
        elif c == "+":
            hx, hy = hy, -hx
        elif c == "-":
            hx, hy = -hy, hx
        else:
            raise AlphabetError(f"symbol {c!r} is not a curve symbol")
    if i != len(path) - 1:
        raise ValueError("path does not match the word's turtle walk")
    return True
