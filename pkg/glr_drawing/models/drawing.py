from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

Point = Tuple[int, int]
Edge = Tuple[int, int]


@dataclass(frozen=True)
class GridDrawing:
    """
    Grid drawing of a tree. The y coordinate grows downward, so a parent drawn above its child
    has the smaller y. Each edge maps to its interior bend points (at most one for the engines
    here), and each recursion root maps to the vertical path used at its level.
    """

    positions: Tuple[Point, ...]
    bends: Dict[Edge, Tuple[Point, ...]]
    spines: Dict[int, Tuple[int, ...]]

    @property
    def n(self) -> int:
        return len(self.positions)

    @property
    def bend_count(self) -> int:
        return sum(len(points) for points in self.bends.values())

    def polyline(self, edge: Edge) -> List[Point]:
        """
        :param edge: the (parent, child) pair.
        :return: the points of the edge, from the parent to the child.
        """
        parent, child = edge
        return [self.positions[parent], *self.bends[edge], self.positions[child]]

    def segments(self) -> Iterator[Tuple[Edge, Point, Point]]:
        """
        :return: an iterator over the straight pieces of every edge.
        """
        for edge in sorted(self.bends):
            points = self.polyline(edge)
            for start, end in zip(points, points[1:]):
                yield edge, start, end

    def points(self) -> Iterator[Point]:
        """
        :return: an iterator over every node and bend point.
        """
        yield from self.positions
        for points in self.bends.values():
            yield from points

    def bounding_box(self) -> Tuple[int, int, int, int]:
        """
        :return: min x, min y, max x, max y over nodes and bends.
        """
        xs, ys = zip(*self.points())
        return min(xs), min(ys), max(xs), max(ys)

    def translated(self, dx: int, dy: int) -> GridDrawing:
        return GridDrawing(
            positions=tuple((x + dx, y + dy) for x, y in self.positions),
            bends={
                edge: tuple((x + dx, y + dy) for x, y in points)
                for edge, points in self.bends.items()
            },
            spines=dict(self.spines),
        )

    def normalized(self) -> GridDrawing:
        """
        :return: the same drawing translated so that the bounding box starts at (0, 0).
        """
        min_x, min_y, _, _ = self.bounding_box()
        if min_x == 0 and min_y == 0:
            return self
        return self.translated(-min_x, -min_y)
