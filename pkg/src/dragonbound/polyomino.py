"""Diagonal-cell polyomino of a curve path, and its traced boundary word.

The curve lives on the unit lattice with diagonal symmetry axes.  Mapping
every vertex through

    phi(x, y) = (x + y, y - x)

rotates the picture 45 degrees and scales it by sqrt(2), so each unit edge
of the curve becomes the diagonal of an axis-aligned unit cell.  All
coordinates stay integral, which keeps every comparison exact.  The union
of those cells is the polyomino whose outline we trace.

Cells are named by their lower-left corner.  A vertex of the cell grid is
the image of a curve vertex exactly when its coordinates have equal parity;
such "element" vertices alternate along the outline with cell-edge midpoints,
which is why the outline is read two steps at a time: half edge, turn, half
edge.  Each two-step element is encoded by its middle turn (R right, L left,
S straight) and the parity of its starting vertex (uppercase even, lowercase
odd), matching the boundary alphabet of lsystem.py.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .curve import dragon_path
from .lsystem import DRAGON, iterate


class GeometryError(ValueError):
    """The cell set or cycle violates a geometric precondition."""


def phi(x: int, y: int):
    """Rotate-and-scale map sending curve vertices onto even cell-grid vertices."""
    return (x + y, y - x)


def phi_inverse(a: int, b: int):
    if (a - b) % 2:
        raise GeometryError(f"vertex {(a, b)} has no preimage on the curve lattice")
    return ((a - b) // 2, (a + b) // 2)


def cells_from_curve(path) -> frozenset:
    """Cells whose diagonals are the (mapped) edges of ``path``.

    Each unit edge u-v maps to the two opposite corners phi(u), phi(v) of
    one cell.  A repeated cell would mean a repeated curve edge, which is
    rejected.
    """
    cells = set()
    for u, v in zip(path, path[1:]):
        if abs(u[0] - v[0]) + abs(u[1] - v[1]) != 1:
            raise GeometryError(f"path step {u}-{v} is not a unit edge")
        pa, pb = phi(*u), phi(*v)
        cell = (min(pa[0], pb[0]), min(pa[1], pb[1]))
        if cell in cells:
            raise GeometryError(f"curve edge {u}-{v} repeats cell {cell}")
        cells.add(cell)
    if not cells:
        raise GeometryError("empty path has no cells")
    return frozenset(cells)


def is_edge_connected(cells) -> bool:
    """True when the cells form one component under side adjacency."""
    start = min(cells)
    seen = {start}
    queue = deque([start])
    while queue:
        a, b = queue.popleft()
        for nb in ((a + 1, b), (a - 1, b), (a, b + 1), (a, b - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return len(seen) == len(cells)


def is_simply_connected(cells) -> bool:
    """True when the complement has no pocket: flood from outside the
    bounding box reaches every non-cell inside it."""
    amin = min(a for a, _ in cells) - 1
    amax = max(a for a, _ in cells) + 1
    bmin = min(b for _, b in cells) - 1
    bmax = max(b for _, b in cells) + 1
    start = (amin, bmin)
    seen = {start}
    queue = deque([start])
    while queue:
        a, b = queue.popleft()
        for nb in ((a + 1, b), (a - 1, b), (a, b + 1), (a, b - 1)):
            na, nbb = nb
            if amin <= na <= amax and bmin <= nbb <= bmax:
                if nb not in cells and nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
    box_area = (amax - amin + 1) * (bmax - bmin + 1)
    return len(seen) == box_area - len(cells)


def trace_boundary(cells) -> list:
    """Walk the outline of ``cells`` starting from the origin.

    Returns the closed vertex cycle (first vertex repeated at the end).
    The walk keeps the interior on its right, so the cycle runs clockwise
    around the cells and its turn at any convex corner is a right turn.

    Requires the cells to be edge-connected and hole-free, with the
    origin on the outline.  For a hole-free polyomino the outline never
    pinches through a vertex, which the walk also verifies.
    """
    if not cells:
        raise GeometryError("empty cell set")
    if not is_edge_connected(cells):
        raise GeometryError("cell set is not edge-connected")
    if not is_simply_connected(cells):
        raise GeometryError("cell set encloses a hole")

    # Directed outline edges with the interior on the right of travel.
    outgoing = {}
    for a, b in cells:
        if (a, b - 1) not in cells:
            outgoing.setdefault((a + 1, b), []).append((a, b))
        if (a, b + 1) not in cells:
            outgoing.setdefault((a, b + 1), []).append((a + 1, b + 1))
        if (a - 1, b) not in cells:
            outgoing.setdefault((a, b), []).append((a, b + 1))
        if (a + 1, b) not in cells:
            outgoing.setdefault((a + 1, b + 1), []).append((a + 1, b))

    start = (0, 0)
    if start not in outgoing:
        raise GeometryError("origin is not on the outline")
    total_edges = sum(len(targets) for targets in outgoing.values())

    cycle = [start]
    current = start
    while True:
        targets = outgoing[current]
        if len(targets) != 1:
            raise GeometryError(f"outline touches itself at vertex {current}")
        current = targets[0]
        cycle.append(current)
        if current == start:
            break
    if len(cycle) - 1 != total_edges:
        raise GeometryError("outline is not a single closed walk")
    return cycle


# (middle-turn cross product, start parity) -> boundary symbol
_SYMBOL = {
    (-1, 0): "R",
    (-1, 1): "r",
    (1, 0): "L",
    (1, 1): "l",
    (0, 0): "S",
    (0, 1): "s",
}


@dataclass(frozen=True)
class BoundaryWord:
    """A boundary word with the recorded start parity of each element."""

    word: str
    parities: str

    def __post_init__(self):
        if len(self.word) != len(self.parities):
            raise ValueError("one parity bit per symbol required")
        for sym, bit in zip(self.word, self.parities):
            expected = "0" if sym.isupper() else "1"
            if bit != expected:
                raise ValueError(
                    f"symbol {sym!r} contradicts recorded start parity {bit}"
                )

    def __len__(self):
        return len(self.word)


def word_from_cycle(cycle) -> BoundaryWord:
    """Decode a closed outline cycle into its boundary word.

    Steps are consumed in pairs; the vertex between the two steps of an
    element is a cell-edge midpoint and the turn taken there is the
    element's middle turn.  Element start vertices must sit on the image
    of the curve lattice (equal coordinate parity); the cycle must have
    even length and start at an even-parity vertex.
    """
    if cycle[0] != cycle[-1]:
        raise GeometryError("cycle is not closed")
    steps = len(cycle) - 1
    if steps % 2:
        raise GeometryError("cycle length is odd; elements are two steps each")
    a0, b0 = cycle[0]
    if a0 % 2 or (a0 - b0) % 2:
        raise GeometryError("cycle must start at an even curve-lattice vertex")

    letters = []
    bits = []
    for k in range(steps // 2):
        p, q, r = cycle[2 * k], cycle[2 * k + 1], cycle[2 * k + 2]
        if (p[0] - p[1]) % 2:
            raise GeometryError(f"element start {p} is off the curve lattice")
        ux, uy = q[0] - p[0], q[1] - p[1]
        vx, vy = r[0] - q[0], r[1] - q[1]
        cross = ux * vy - uy * vx
        if cross == 0 and ux * vx + uy * vy <= 0:
            raise GeometryError(f"outline backtracks at vertex {q}")
        parity = p[0] % 2
        letters.append(_SYMBOL[(cross, parity)])
        bits.append(str(parity))
    return BoundaryWord("".join(letters), "".join(bits))


def split_boundary(cycle, endpoint) -> tuple:
    """Split the decoded outline at the curve's far endpoint.

    ``endpoint`` is the final vertex of the generating curve (in curve
    coordinates); its image must be the start of some element of the
    cycle.  Elements before it form the boundary left of the start-end
    diagonal, the rest the right.
    """
    full = word_from_cycle(cycle)
    target = phi(*endpoint)
    steps = len(cycle) - 1
    for k in range(1, steps // 2):
        if cycle[2 * k] == target:
            left = BoundaryWord(full.word[:k], full.parities[:k])
            right = BoundaryWord(full.word[k:], full.parities[k:])
            return left, right
    raise GeometryError(f"endpoint image {target} is not an element start")


def perimeter_counts(cells, endpoint) -> tuple:
    """(full, left, right) element counts of the outline of ``cells``."""
    cycle = trace_boundary(cells)
    left, right = split_boundary(cycle, endpoint)
    return len(left) + len(right), len(left), len(right)


def dragon_boundary(n: int) -> tuple:
    """Cells, outline cycle and curve endpoint of generation ``n``.

    Convenience pipeline: generation word, turtle walk, diagonal cells,
    traced outline.
    """
    path = dragon_path(iterate(DRAGON, n))
    cells = cells_from_curve(path)
    cycle = trace_boundary(cells)
    return cells, cycle, path[-1]


def dragon_cells(n: int) -> frozenset:
    return cells_from_curve(dragon_path(iterate(DRAGON, n)))


def full_boundary_word(n: int) -> BoundaryWord:
    _, cycle, _ = dragon_boundary(n)
    return word_from_cycle(cycle)


def boundary_split(n: int) -> tuple:
    _, cycle, end = dragon_boundary(n)
    return split_boundary(cycle, end)
