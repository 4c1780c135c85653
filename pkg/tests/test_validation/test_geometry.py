from pytest import mark

from glr_drawing.validation.geometry import (
    on_segment,
    only_touch_at,
    orientation,
    segments_intersect,
)


def test_orientation() -> None:
    assert orientation((0, 0), (2, 0), (1, 1)) == 1
    assert orientation((0, 0), (2, 0), (1, -1)) == -1
    assert orientation((0, 0), (2, 2), (5, 5)) == 0


def test_on_segment() -> None:
    assert on_segment((1, 1), (0, 0), (2, 2))
    assert on_segment((2, 2), (0, 0), (2, 2))
    assert not on_segment((3, 3), (0, 0), (2, 2))
    assert not on_segment((1, 0), (0, 0), (2, 2))


@mark.parametrize(
    "first, second, expected",
    (
        (((0, 0), (2, 2)), ((0, 2), (2, 0)), True),
        (((0, 0), (2, 2)), ((3, 3), (4, 4)), False),
        (((0, 0), (2, 2)), ((2, 2), (4, 0)), True),
        (((0, 0), (4, 0)), ((2, 0), (6, 0)), True),
        (((0, 0), (0, 4)), ((1, 1), (1, 3)), False),
        (((0, 0), (4, 2)), ((2, 1), (2, 5)), True),
        (((0, 0), (4, 2)), ((2, 2), (2, 5)), False),
    ),
)
def test_segments_intersect(first: tuple, second: tuple, expected: bool) -> None:
    assert segments_intersect(first, second) is expected
    assert segments_intersect(second, first) is expected


def test_only_touch_at() -> None:
    assert only_touch_at((0, 0), (1, 1), (1, 2))
    assert only_touch_at((0, 0), (1, 1), (-1, -1))
    assert not only_touch_at((0, 0), (1, 1), (2, 2))
