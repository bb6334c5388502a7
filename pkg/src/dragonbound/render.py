"""Hand-rolled SVG output.

Every coordinate is an integer computed from the lattice data, so the
byte stream is a pure function of the input; nothing here depends on a
plotting library or float formatting.
"""

from __future__ import annotations

from .polyomino import phi

CURVE_COLOR = "gray"
LEFT_COLOR = "blue"
RIGHT_COLOR = "red"


def _bounds(point_lists):
    xs = [x for pts in point_lists for x, _ in pts]
    ys = [y for pts in point_lists for _, y in pts]
    return min(xs), max(xs), min(ys), max(ys)


def render_layers(layers, scale: int = 10) -> str:
    """SVG document from [(points, color, stroke-width)] layers.

    y grows upward in lattice coordinates and downward in SVG, so the
    vertical axis is flipped.  Margin is 5 percent of the larger extent,
    at least one cell.
    """
    if scale < 1:
        raise ValueError("scale must be a positive integer")
    xmin, xmax, ymin, ymax = _bounds([pts for pts, _, _ in layers])
    extent = max(xmax - xmin, ymax - ymin)
    margin = max(scale, extent * scale // 20)
    width = (xmax - xmin) * scale + 2 * margin
    height = (ymax - ymin) * scale + 2 * margin

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">'
    ]
    for points, color, stroke in layers:
        coords = " ".join(
            f"{(x - xmin) * scale + margin},{(ymax - y) * scale + margin}"
            for x, y in points
        )
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="{stroke}" '
            f'stroke-linejoin="round" stroke-linecap="round" points="{coords}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def curve_svg(path, scale: int = 10) -> str:
    """The curve alone, in its own lattice frame."""
    return render_layers([(path, CURVE_COLOR, max(1, scale // 5))], scale)


def boundary_svg(path, cycle, split_index: int, side: str = "full",
                 scale: int = 10) -> str:
    """Boundary outline over the curve, in the rotated cell frame.

    The curve is drawn gray through the cell diagonals; the outline half
    left of the start-end diagonal is blue, the right half red.
    ``split_index`` is the element index where the right half begins.
    """
    if side not in ("left", "right", "full"):
        raise ValueError("side must be left, right or full")
    mapped = [phi(x, y) for x, y in path]
    thin = max(1, scale // 5)
    thick = max(2, scale // 3)
    layers = [(mapped, CURVE_COLOR, thin)]
    if side in ("left", "full"):
        layers.append((cycle[: 2 * split_index + 1], LEFT_COLOR, thick))
    if side in ("right", "full"):
        layers.append((cycle[2 * split_index:], RIGHT_COLOR, thick))
    return render_layers(layers, scale)
