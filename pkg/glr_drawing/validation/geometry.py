"""
Exact integer predicates on grid points.
"""
from typing import Tuple

from glr_drawing.models.drawing import Point

Vector = Tuple[int, int]


def cross(first: Vector, second: Vector) -> int:
    return first[0] * second[1] - first[1] * second[0]


def dot(first: Vector, second: Vector) -> int:
    return first[0] * second[0] + first[1] * second[1]


def vector(start: Point, end: Point) -> Vector:
    return end[0] - start[0], end[1] - start[1]


def orientation(first: Point, second: Point, third: Point) -> int:
    """
    :return: 1 if the three points turn counter-clockwise in the plane they are given in, -1 if
     they turn clockwise, 0 if they are collinear.
    """
    value = cross(vector(first, second), vector(first, third))
    return (value > 0) - (value < 0)


def on_segment(point: Point, start: Point, end: Point) -> bool:
    """
    :return: True if the point lies on the closed segment.
    """
    return (
        orientation(start, end, point) == 0
        and min(start[0], end[0]) <= point[0] <= max(start[0], end[0])
        and min(start[1], end[1]) <= point[1] <= max(start[1], end[1])
    )


def segments_intersect(first: Tuple[Point, Point], second: Tuple[Point, Point]) -> bool:
    """
    :return: True if the two closed segments share at least one point.
    """
    (a, b), (c, d) = first, second
    o1, o2 = orientation(a, b, c), orientation(a, b, d)
    o3, o4 = orientation(c, d, a), orientation(c, d, b)
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return True
    return any(
        (
            on_segment(c, a, b),
            on_segment(d, a, b),
            on_segment(a, c, d),
            on_segment(b, c, d),
        )
    )


def only_touch_at(point: Point, first_end: Point, second_end: Point) -> bool:
    """
    Check that two segments leaving the same point meet only there.

    :param point: the common endpoint.
    :param first_end: the other endpoint of the first segment.
    :param second_end: the other endpoint of the second segment.
    :return: False if the segments overlap along a common direction.
    """
    first, second = vector(point, first_end), vector(point, second_end)
    return cross(first, second) != 0 or dot(first, second) < 0
