# Copyright: (c) 2024, Jordan Borean (@jborean93) <jborean93@gmail.com>
# MIT License (see LICENSE or https://opensource.org/licenses/MIT)

"""Text and SVG drawings of a principal Newton polygon.

The SVG drawing needs the optional matplotlib package, check :data:`HAS_MATPLOTLIB` first.
"""

import io
import typing

from montes_lite.polygon import NewtonPolygon, lattice_points

HAS_MATPLOTLIB = False
try:
    import matplotlib
    from matplotlib.figure import Figure
    from matplotlib.ticker import MaxNLocator

    HAS_MATPLOTLIB = True
except ImportError:  # pragma: nocover
    pass

#: Widest polygon, in abscissa units, that is drawn as text.
MAX_ASCII_WIDTH = 100

#: Inches per lattice unit in the SVG figure, the figure is clamped to MAX_FIGURE_SIZE.
FIGURE_SCALE = 0.5
MAX_FIGURE_SIZE = (12.0, 9.0)


def _extent(polygon: NewtonPolygon) -> typing.Tuple[int, int]:
    width = max((pt.abscissa for pt in polygon.points), default=0)
    height = max((int(pt.ordinate) for pt in polygon.points), default=0)
    return width, height


def render_ascii(polygon: NewtonPolygon) -> str:
    """Draws the polygon on a character grid.

    ``O`` marks a vertex, ``#`` a point counted by the index, ``+`` another point of the cloud.
    Polygons wider than :data:`MAX_ASCII_WIDTH` are only summarized.
    """
    width, height = _extent(polygon)
    if width > MAX_ASCII_WIDTH:
        return "polygon of length %d is too wide to draw, vertices %s" % (
            width,
            ", ".join("(%d,%d)" % v for v in polygon.vertices),
        )

    vertices = set(polygon.vertices)
    counted = set(lattice_points(polygon))
    cloud = {(pt.abscissa, int(pt.ordinate)) for pt in polygon.points}

    lines = []
    for y in range(height, -1, -1):
        row = []
        for i in range(width + 1):
            point = (i, y)
            if point in vertices:
                row.append("O")
            elif point in counted:
                row.append("#")
            elif point in cloud:
                row.append("+")
            else:
                row.append(".")

        lines.append("%3d | %s" % (y, " ".join(row)))

    lines.append("    +" + "--" * (width + 1))
    return "\n".join(lines)


def render_svg(polygon: NewtonPolygon) -> str:
    """Draws the polygon as an SVG document with matplotlib.

    Points of the cloud are hollow, counted lattice points are filled and vertices carry their coordinates. The
    artists get the SVG ids ``cloud``, ``counted`` and ``polygon``.

    Args:
        polygon: The polygon to draw.

    Returns:
        str: The SVG document.
    """
    if not HAS_MATPLOTLIB:
        raise ImportError("render_svg requires the matplotlib package")

    width, height = _extent(polygon)
    figure = Figure(
        figsize=(
            min(MAX_FIGURE_SIZE[0], 2 + FIGURE_SCALE * width),
            min(MAX_FIGURE_SIZE[1], 2 + FIGURE_SCALE * height),
        )
    )
    ax = figure.add_subplot()

    if polygon.points:
        ax.scatter(
            [pt.abscissa for pt in polygon.points],
            [int(pt.ordinate) for pt in polygon.points],
            facecolors="none",
            edgecolors="C0",
            gid="cloud",
        )

    counted = lattice_points(polygon)
    if counted:
        ax.scatter([i for i, _ in counted], [y for _, y in counted], color="C3", marker="s", s=12, gid="counted")

    if polygon.vertices:
        ax.plot(
            [v[0] for v in polygon.vertices],
            [v[1] for v in polygon.vertices],
            "-o",
            markersize=3,
            color="C1",
            gid="polygon",
        )
        for vertex in polygon.vertices:
            ax.annotate("(%d,%d)" % vertex, vertex, textcoords="offset points", xytext=(4, 4), fontsize=8)

    ax.set_xlabel("i")
    ax.set_ylabel("v_%d(a_i)" % polygon.p)
    ax.set_xlim(-0.5, width + 0.5)
    ax.set_ylim(-0.5, height + 0.5)
    ax.xaxis.set_major_locator(MaxNLocator(integer=True))
    ax.yaxis.set_major_locator(MaxNLocator(integer=True))
    ax.grid(True, linewidth=0.3)

    buffer = io.BytesIO()
    # Text stays text and element ids do not depend on the process so the output is reproducible.
    with matplotlib.rc_context({"svg.fonttype": "none", "svg.hashsalt": "montes-lite"}):
        figure.savefig(buffer, format="svg", metadata={"Date": None})

    return buffer.getvalue().decode("utf-8")
