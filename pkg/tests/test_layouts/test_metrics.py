from glr_drawing.layouts.metrics import measure, subtree_boxes, width_recurrence_violations
from glr_drawing.layouts.one_bend import layout_one_bend
from glr_drawing.layouts.quadratic import layout_quadratic
from glr_drawing.models.dataclasses import Metrics
from glr_drawing.models.drawing import GridDrawing
from glr_drawing.models.tree import OrderedTree, parse_tree


def test_measure_single_node() -> None:
    drawing = layout_quadratic(parse_tree("()"))
    assert measure(drawing) == Metrics(width=1, height=1, bends=0)
    assert measure(drawing).area == 1


def test_measure_counts_bends() -> None:
    metrics = measure(layout_one_bend(parse_tree("(()()())")))
    assert metrics == Metrics(width=2, height=5, bends=1)


def test_subtree_boxes_include_own_bends() -> None:
    tree = parse_tree("(()()())")
    boxes = subtree_boxes(tree, layout_one_bend(tree))
    assert boxes[0] == (0, 0, 1, 4)
    assert boxes[2] == (1, 3, 1, 3)


def test_width_recurrence(two_leaves: OrderedTree) -> None:
    drawing = layout_quadratic(two_leaves)
    assert width_recurrence_violations(two_leaves, drawing) == []
    wide = GridDrawing(
        positions=((0, 0), (0, 2), (3, 1)),
        bends={(0, 1): (), (0, 2): ()},
        spines={0: (0, 1), 2: (2,)},
    )
    assert width_recurrence_violations(two_leaves, wide) == [
        dict(root=0, width=4, left=0, right=1)
    ]
    assert width_recurrence_violations(two_leaves, wide, relaxed=True) != []
