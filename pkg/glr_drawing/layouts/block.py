from __future__ import annotations

from typing import Dict, Optional, Tuple

from glr_drawing.core.exceptions import LayoutInvariantError
from glr_drawing.models.drawing import Edge, GridDrawing, Point


class Block:
    """
    Drawing of a subtree under construction, with its bounding box over nodes and bends.
    Blocks are composed by translating a child block and absorbing it into the parent one.
    """

    def __init__(self, root: int) -> None:
        self.root = root
        self.positions: Dict[int, Point] = {root: (0, 0)}
        self.bends: Dict[Edge, Tuple[Point, ...]] = {}
        self.spines: Dict[int, Tuple[int, ...]] = {}
        self.min_x = self.min_y = self.max_x = self.max_y = 0

    @property
    def width(self) -> int:
        return self.max_x - self.min_x + 1

    @property
    def height(self) -> int:
        return self.max_y - self.min_y + 1

    @property
    def root_position(self) -> Point:
        return self.positions[self.root]

    def _extend(self, point: Point) -> None:
        x, y = point
        self.min_x = min(self.min_x, x)
        self.max_x = max(self.max_x, x)
        self.min_y = min(self.min_y, y)
        self.max_y = max(self.max_y, y)

    def place(self, node: int, point: Point) -> None:
        """
        Place a new node.

        :param node: the node id.
        :param point: the grid point.
        :raises: LayoutInvariantError if the node is already placed.
        """
        if node in self.positions:
            raise LayoutInvariantError(f"Node {node} is placed twice.")
        self.positions[node] = point
        self._extend(point)

    def connect(self, parent: int, child: int, *bends: Point) -> None:
        self.bends[(parent, child)] = tuple(bends)
        for bend in bends:
            self._extend(bend)

    def shift(self, dx: int, dy: int) -> Block:
        """
        Translate the block in place.

        :return: the block itself.
        """
        if dx or dy:
            for node, (x, y) in self.positions.items():
                self.positions[node] = (x + dx, y + dy)
            for edge, points in self.bends.items():
                if points:
                    self.bends[edge] = tuple((x + dx, y + dy) for x, y in points)
            self.min_x += dx
            self.max_x += dx
            self.min_y += dy
            self.max_y += dy
        return self

    def move_to(
        self, left: Optional[int] = None, right: Optional[int] = None, top: Optional[int] = None
    ) -> Block:
        """
        Translate the block so that its bounding box has the given sides.

        :return: the block itself.
        """
        dx = 0
        if left is not None:
            dx = left - self.min_x
        elif right is not None:
            dx = right - self.max_x
        dy = 0 if top is None else top - self.min_y
        return self.shift(dx, dy)

    def absorb(self, other: Block) -> None:
        """
        Merge another block, already translated to its final place, into this one.
        """
        self.positions.update(other.positions)
        self.bends.update(other.bends)
        self.spines.update(other.spines)
        self.min_x = min(self.min_x, other.min_x)
        self.max_x = max(self.max_x, other.max_x)
        self.min_y = min(self.min_y, other.min_y)
        self.max_y = max(self.max_y, other.max_y)

    def reflect(self) -> Block:
        """
        Reflect the block across the vertical axis, in place.

        :return: the block itself.
        """
        for node, (x, y) in self.positions.items():
            self.positions[node] = (-x, y)
        for edge, points in self.bends.items():
            self.bends[edge] = tuple((-x, y) for x, y in points)
        self.min_x, self.max_x = -self.max_x, -self.min_x
        return self

    def to_drawing(self) -> GridDrawing:
        """
        :return: the drawing of the block, translated so that the bounding box starts at (0, 0).
        :raises: LayoutInvariantError if the nodes are not exactly 0..n-1.
        """
        n = len(self.positions)
        if set(self.positions) != set(range(n)):
            raise LayoutInvariantError("The block does not cover a whole tree.")
        return GridDrawing(
            positions=tuple(self.positions[node] for node in range(n)),
            bends=dict(self.bends),
            spines=dict(self.spines),
        ).normalized()
