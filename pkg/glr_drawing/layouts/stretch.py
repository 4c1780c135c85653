import logging
from typing import Dict, List, Tuple

from glr_drawing.core import config
from glr_drawing.core.exceptions import StretchError
from glr_drawing.models.drawing import Edge, GridDrawing, Point

_LOGGER = logging.getLogger(__name__)


def _check_input(drawing: GridDrawing) -> List[Tuple[int, Edge]]:
    """
    Check that every bend sits alone in its row, between its parent and child rows, with the
    child in the row right below it.

    :return: the bent edges with the row of their bend, from the top.
    :raises: StretchError if the drawing cannot be stretched.
    """
    node_rows = {y for _, y in drawing.positions}
    bend_rows: Dict[int, Edge] = {}
    for edge, points in drawing.bends.items():
        if not points:
            continue
        if len(points) > 1:
            raise StretchError(f"Edge {edge} has {len(points)} bends.")
        (x, y), (parent, child) = points[0], edge
        if y in node_rows or y in bend_rows:
            raise StretchError(f"The bend ({x}, {y}) of edge {edge} shares its row.")
        if not drawing.positions[parent][1] < y == drawing.positions[child][1] - 1:
            raise StretchError(f"The bend of edge {edge} is not right above the child.")
        bend_rows[y] = edge
    return sorted(bend_rows.items())


def _rows_needed(points: List[Point], parent: Point, child: Point, bend_row: int) -> int:
    """
    Compute the smallest vertical distance between parent and child such that every point above
    the bend row, horizontally between them, lies strictly on the far side of the segment.
    """
    (parent_x, parent_y), (child_x, child_y) = parent, child
    run = abs(child_x - parent_x)
    needed = child_y - parent_y
    for x, y in points:
        if not parent_y < y < bend_row:
            continue
        if run == 0:
            if x == parent_x:
                raise StretchError(f"Point ({x}, {y}) blocks the vertical edge from {parent}.")
            continue
        offset = (x - parent_x) if child_x > parent_x else (parent_x - x)
        if 0 < offset <= run:
            needed = max(needed, run * (y - parent_y) // offset + 1)
    return needed


def stretch_to_straightline(drawing: GridDrawing) -> GridDrawing:
    """
    Remove every bend of a one bend drawing by inserting empty rows above it until the child is
    in direct line of sight of its parent. Bends are processed from the top one, so that the
    segments already straightened keep both endpoints above the inserted rows. The width does
    not change.

    :param drawing: the drawing, whose bends sit alone in their rows right above their child.
    :return: the straight-line drawing.
    :raises: StretchError if the drawing cannot be stretched.
    """
    bent = _check_input(drawing)
    positions = list(drawing.positions)
    bends = {edge: list(points) for edge, points in drawing.bends.items()}
    inserted = 0
    for bend_row, edge in bent:
        bend_row += inserted
        parent, child = edge
        others = positions + [point for points in bends.values() for point in points]
        needed = _rows_needed(others, positions[parent], positions[child], bend_row)
        extra = needed - (positions[child][1] - positions[parent][1])
        if extra > config.STRETCH_MAX_EXTRA_ROWS:
            raise StretchError(f"Edge {edge} needs {extra} extra rows.")
        if extra:
            positions = [(x, y + extra if y >= bend_row else y) for x, y in positions]
            bends = {
                key: [(x, y + extra if y >= bend_row else y) for x, y in points]
                for key, points in bends.items()
            }
            inserted += extra
        bends[edge] = []
    _LOGGER.debug("Drawing stretched.", extra=dict(n=drawing.n, rows=inserted))
    return GridDrawing(
        positions=tuple(positions),
        bends={edge: tuple(points) for edge, points in bends.items()},
        spines=dict(drawing.spines),
    ).normalized()
