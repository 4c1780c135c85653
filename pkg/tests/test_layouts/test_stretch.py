from typing import Dict, Tuple

from hypothesis import given, settings
from pytest import mark, raises

from glr_drawing.core.exceptions import StretchError
from glr_drawing.layouts.metrics import measure
from glr_drawing.layouts.one_bend import layout_one_bend
from glr_drawing.layouts.quadratic import layout_quadratic
from glr_drawing.layouts.stretch import stretch_to_straightline
from glr_drawing.models.drawing import Edge, GridDrawing, Point
from glr_drawing.models.enums import Condition
from glr_drawing.models.tree import OrderedTree, parse_tree
from glr_drawing.trees.generators import random_tree
from glr_drawing.validation.report import validate
from tests.fixtures.trees import random_trees

_IDEAL = (Condition.PLANAR, Condition.ORDER, Condition.P6, Condition.P7)


def _assert_stretched(tree: OrderedTree, drawing: GridDrawing) -> GridDrawing:
    stretched = stretch_to_straightline(drawing)
    assert stretched.bend_count == 0
    assert measure(stretched).width == measure(drawing).width
    assert measure(stretched).height >= measure(drawing).height
    report = validate(tree, stretched, _IDEAL)
    assert report.passed, {c.value: report.results[c].witness for c in report.failed}
    return stretched


def test_bend_free_drawing_unchanged() -> None:
    drawing = layout_quadratic(random_tree(40, 3, seed=1))
    assert stretch_to_straightline(drawing) == drawing


def test_star() -> None:
    tree = parse_tree("(()()())")
    stretched = _assert_stretched(tree, layout_one_bend(tree))
    assert stretched.positions == ((0, 0), (0, 4), (1, 3), (1, 1))


def test_rows_are_inserted() -> None:
    tree = parse_tree("(()((())())((())))")
    drawing = layout_one_bend(tree)
    assert drawing.positions == (
        (0, 0), (0, 9), (2, 5), (1, 6), (1, 7), (2, 8), (1, 1), (1, 2), (1, 3),
    )
    assert drawing.bends[(0, 2)] == ((1, 4),)
    stretched = _assert_stretched(tree, drawing)
    assert stretched.positions == (
        (0, 0), (0, 11), (2, 7), (1, 8), (1, 9), (2, 10), (1, 1), (1, 2), (1, 3),
    )


def _drawing(positions: Tuple[Point, ...], bends: Dict[Edge, Tuple[Point, ...]]) -> GridDrawing:
    return GridDrawing(positions=positions, bends=bends, spines={})


@mark.parametrize(
    "drawing",
    (
        _drawing(((0, 0), (0, 3)), {(0, 1): ((1, 1), (1, 2))}),
        _drawing(((0, 0), (0, 3)), {(0, 1): ((1, 1),)}),
        _drawing(((0, 0), (0, 1), (2, 2)), {(0, 1): (), (0, 2): ((1, 1),)}),
        _drawing(((0, 0), (0, 2), (2, 2)), {(0, 1): ((-1, 1),), (0, 2): ((1, 1),)}),
        _drawing(((0, 2), (1, 3)), {(0, 1): ((0, 2),)}),
    ),
)
def test_invalid_input(drawing: GridDrawing) -> None:
    with raises(StretchError):
        stretch_to_straightline(drawing)


@settings(max_examples=40, deadline=None)
@given(tree=random_trees)
def test_random_trees(tree: OrderedTree) -> None:
    _assert_stretched(tree, layout_one_bend(tree))


@mark.slow
@mark.parametrize("seed", range(100))
def test_stretch_acceptance(seed: int) -> None:
    tree = random_tree(2 + seed * 2, 2 + seed % 6, seed)
    _assert_stretched(tree, layout_one_bend(tree))
