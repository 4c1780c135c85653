from typing import Optional
from xml.etree import ElementTree

from glr_drawing.core import config
from glr_drawing.models.drawing import GridDrawing

_MARGIN = 1
_NODE_RADIUS = 0.2
_BEND_SIDE = 0.2


def to_svg(drawing: GridDrawing, scale: Optional[int] = None) -> str:
    """
    Render the drawing as SVG: the column of the root path is shaded, edges are polylines, nodes
    are dots and bends are small squares.

    :param drawing: the drawing.
    :param scale: the size in pixels of a grid unit, defaulting to the configured one.
    :return: the SVG document.
    """
    scale = scale or config.SVG_SCALE
    min_x, min_y, max_x, max_y = drawing.bounding_box()

    def at(value: float, origin: int) -> str:
        return f"{(value - origin + _MARGIN) * scale:g}"

    svg = ElementTree.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=str((max_x - min_x + 2 * _MARGIN) * scale),
        height=str((max_y - min_y + 2 * _MARGIN) * scale),
    )
    spine = drawing.spines.get(0)
    if spine:
        column = drawing.positions[spine[0]][0]
        ElementTree.SubElement(
            svg,
            "rect",
            x=at(column - 0.5, min_x),
            y=at(min_y - 0.5, min_y),
            width=f"{scale:g}",
            height=f"{(max_y - min_y + 1) * scale:g}",
            fill="#fde9c4",
        )
    for edge in sorted(drawing.bends):
        points = " ".join(
            f"{at(x, min_x)},{at(y, min_y)}" for x, y in drawing.polyline(edge)
        )
        ElementTree.SubElement(
            svg,
            "polyline",
            points=points,
            fill="none",
            stroke="#333333",
            **{"stroke-width": "1"},
        )
        for x, y in drawing.bends[edge]:
            ElementTree.SubElement(
                svg,
                "rect",
                x=at(x - _BEND_SIDE / 2, min_x),
                y=at(y - _BEND_SIDE / 2, min_y),
                width=f"{_BEND_SIDE * scale:g}",
                height=f"{_BEND_SIDE * scale:g}",
                fill="#c0392b",
            )
    for node, (x, y) in enumerate(drawing.positions):
        circle = ElementTree.SubElement(
            svg, "circle", cx=at(x, min_x), cy=at(y, min_y), r=f"{_NODE_RADIUS * scale:g}"
        )
        ElementTree.SubElement(circle, "title").text = str(node)
    return ElementTree.tostring(svg, encoding="unicode")
