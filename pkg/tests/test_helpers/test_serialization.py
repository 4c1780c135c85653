import json

from hypothesis import given, settings
from pytest import mark, raises

from glr_drawing.core.exceptions import DrawingError
from glr_drawing.helpers.serialization import drawing_from_json, drawing_to_dict, drawing_to_json
from glr_drawing.layouts.engine import layout
from glr_drawing.layouts.one_bend import layout_one_bend
from glr_drawing.layouts.quadratic import layout_quadratic
from glr_drawing.models.dataclasses import LayoutKind
from glr_drawing.models.enums import LayoutAlgorithm
from glr_drawing.models.tree import OrderedTree, parse_tree
from tests.fixtures.trees import random_trees


def test_drawing_to_dict(two_leaves: OrderedTree) -> None:
    document = drawing_to_dict(layout_quadratic(two_leaves), two_leaves)
    assert document == {
        "n": 3,
        "nodes": [dict(id=0, x=0, y=0), dict(id=1, x=0, y=2), dict(id=2, x=1, y=1)],
        "edges": [
            {"from": 0, "to": 1, "bends": []},
            {"from": 0, "to": 2, "bends": []},
        ],
        "spines": {"0": [0, 1], "2": [2]},
        "tree": "(()())",
    }


def test_drawing_to_json_is_canonical(two_leaves: OrderedTree) -> None:
    text = drawing_to_json(layout_quadratic(two_leaves))
    assert " " not in text
    assert "tree" not in json.loads(text)
    assert text == json.dumps(json.loads(text), sort_keys=True, separators=(",", ":"))


def test_bends_round_trip() -> None:
    tree = parse_tree("(()()())")
    drawing = layout_one_bend(tree)
    assert drawing.bend_count == 1
    document = drawing_from_json(drawing_to_json(drawing, tree))
    assert document.drawing == drawing
    assert document.tree == tree


@settings(max_examples=25, deadline=None)
@given(tree=random_trees)
def test_round_trip(tree: OrderedTree) -> None:
    drawing = layout(tree, LayoutKind.of(LayoutAlgorithm.UPWARD))
    assert drawing_from_json(drawing_to_json(drawing)).drawing == drawing


@mark.parametrize("text", ("", "{", "[]", '{"n": 1}', '{"n": 1, "nodes": [], "edges": []}'))
def test_drawing_from_json_failure(text: str) -> None:
    with raises(DrawingError):
        drawing_from_json(text)
