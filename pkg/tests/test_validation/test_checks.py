from typing import Callable, List

from hypothesis import given, settings
from hypothesis import strategies as st
from pytest import mark, raises

from glr_drawing.core.exceptions import CertificateError, DrawingError
from glr_drawing.layouts.engine import layout
from glr_drawing.layouts.quadratic import layout_quadratic
from glr_drawing.models.dataclasses import LayoutKind
from glr_drawing.models.drawing import GridDrawing
from glr_drawing.models.enums import LayoutAlgorithm
from glr_drawing.models.tree import OrderedTree, parse_tree
from glr_drawing.trees.generators import random_tree
from glr_drawing.validation.checks import (
    check_glr,
    check_order_preserving,
    check_p1,
    check_p2,
    check_p3,
    check_p4,
    check_p5,
    check_p6,
    check_p8,
    check_planar,
    check_upward,
    find_crossing_brute_force,
)


def _moved(drawing: GridDrawing, node: int, x: int, y: int) -> GridDrawing:
    positions = list(drawing.positions)
    positions[node] = (x, y)
    return GridDrawing(positions=tuple(positions), bends=drawing.bends, spines=drawing.spines)


def test_single_node() -> None:
    tree = parse_tree("()")
    drawing = layout_quadratic(tree)
    for check in (check_planar, check_order_preserving, check_upward, check_glr, check_p8):
        assert check(tree, drawing).passed


def test_planar_crossing() -> None:
    tree = parse_tree("(()(()))")
    drawing = GridDrawing(
        positions=((0, 0), (2, 2), (0, 2), (2, 0)),
        bends={(0, 1): (), (0, 2): (), (2, 3): ()},
        spines={},
    )
    result = check_planar(tree, drawing)
    assert not result.passed
    assert sorted(result.witness["edges"]) == [[0, 1], [2, 3]]
    assert find_crossing_brute_force(drawing) is not None


def test_planar_node_on_segment() -> None:
    tree = parse_tree("((())())")
    drawing = GridDrawing(
        positions=((0, 0), (0, 2), (0, 4), (0, 1)),
        bends={(0, 1): (), (0, 3): (), (1, 2): ()},
        spines={},
    )
    assert not check_planar(tree, drawing).passed


def test_planar_duplicate_point(two_leaves: OrderedTree) -> None:
    drawing = _moved(layout_quadratic(two_leaves), 2, 0, 2)
    result = check_planar(two_leaves, drawing)
    assert not result.passed
    assert result.witness == dict(point=[0, 2])


def test_mismatch(two_leaves: OrderedTree) -> None:
    with raises(DrawingError):
        check_planar(parse_tree("(())"), layout_quadratic(two_leaves))
    drawing = layout_quadratic(parse_tree("((()))"))
    with raises(DrawingError):
        check_planar(two_leaves, drawing)


def test_order_preserving_swap(two_leaves: OrderedTree) -> None:
    drawing = layout_quadratic(two_leaves)
    assert check_order_preserving(two_leaves, drawing).passed
    swapped = _moved(_moved(drawing, 1, 1, 1), 2, 0, 2)
    result = check_order_preserving(two_leaves, swapped)
    assert not result.passed
    assert result.witness == dict(node=0, children=[1, 2], found=[2, 1])


def test_order_preserving_zero_length(two_leaves: OrderedTree) -> None:
    drawing = _moved(layout_quadratic(two_leaves), 2, 0, 0)
    with raises(DrawingError):
        check_order_preserving(two_leaves, drawing)


def test_upward() -> None:
    tree = parse_tree("((()))")
    drawing = GridDrawing(
        positions=((0, 0), (0, 1), (1, 1)), bends={(0, 1): (), (1, 2): ()}, spines={}
    )
    assert check_upward(tree, drawing, strict=False).passed
    result = check_upward(tree, drawing)
    assert not result.passed
    assert result.witness == dict(parent=1, child=2)
    chain = _moved(drawing, 2, 0, 2)
    assert check_upward(tree, chain).passed


def test_glr_moved_leaf(two_leaves: OrderedTree) -> None:
    drawing = layout_quadratic(two_leaves)
    assert check_glr(two_leaves, drawing).passed
    moved = _moved(drawing, 2, 0, 1)
    result = check_glr(two_leaves, moved)
    assert not result.passed
    assert result.witness["side"] == "right"


def test_glr_certificate_errors(two_leaves: OrderedTree) -> None:
    drawing = layout_quadratic(two_leaves)
    for spines in ({0: (0, 1)}, {0: (0, 1), 2: (2,), 1: (1,)}, {0: (1,), 2: (2,)}):
        broken = GridDrawing(positions=drawing.positions, bends=drawing.bends, spines=spines)
        with raises(CertificateError):
            check_p1(two_leaves, broken)


@mark.parametrize("check", (check_p1, check_p2, check_p4, check_p5, check_p8))
@mark.parametrize("spines", ({0: (0, 2, 1)}, {0: (0, 1), 2: (2, 7)}, {0: (0, -1), 2: (2,)}))
def test_malformed_certificate(two_leaves: OrderedTree, check: Callable, spines: dict) -> None:
    drawing = layout_quadratic(two_leaves)
    broken = GridDrawing(positions=drawing.positions, bends=drawing.bends, spines=spines)
    with raises(CertificateError):
        check(two_leaves, broken)


def test_p1_bent_path(two_leaves: OrderedTree) -> None:
    drawing = _moved(layout_quadratic(two_leaves), 1, -1, 2)
    assert not check_p1(two_leaves, drawing).passed


def test_strips() -> None:
    tree = parse_tree("((())())")
    # Node 3 sits between node 1 and its child 2.
    drawing = GridDrawing(
        positions=((0, 0), (0, 1), (0, 3), (1, 2)),
        bends={(0, 1): (), (0, 3): (), (1, 2): ()},
        spines={0: (0, 1, 2), 3: (3,)},
    )
    assert not check_p3(tree, drawing).passed
    assert not check_p4(tree, drawing).passed
    assert check_p5(tree, drawing).passed


def test_p5_interleaved_groups() -> None:
    tree = parse_tree("(()()()())")
    spines = {0: (0, 2), 1: (1,), 3: (3,), 4: (4,)}
    drawing = GridDrawing(
        positions=((0, 0), (-1, 3), (0, 4), (1, 1), (2, 2)),
        bends={(0, 1): (), (0, 2): (), (0, 3): (), (0, 4): ()},
        spines=spines,
    )
    assert check_p4(tree, drawing).passed
    assert check_p5(tree, drawing).passed
    # The left leaf is drawn between the two right ones.
    interleaved = _moved(_moved(drawing, 1, -1, 2), 4, 2, 3)
    assert check_p4(tree, interleaved).passed
    assert check_p5(tree, interleaved).witness == dict(spine=0, node=0, side="right")



def test_p6_and_p8_on_bends() -> None:
    tree = parse_tree("(()()())")
    drawing = layout(tree, LayoutKind.of(LayoutAlgorithm.ONE_BEND))
    assert drawing.bend_count == 1
    assert check_p6(tree, drawing).witness == dict(edge=[0, 2], bends=[[1, 2]])
    assert check_p8(tree, drawing).witness == dict(row=2)


def test_p8_distance(two_leaves: OrderedTree) -> None:
    drawing = _moved(layout_quadratic(two_leaves), 2, 2, 1)
    result = check_p8(two_leaves, drawing)
    assert not result.passed
    assert result.witness["subtree"] == 2


@settings(max_examples=150, deadline=None)
@given(data=st.data(), n=st.integers(min_value=2, max_value=10), seed=st.integers(0, 1000))
def test_planar_agrees_with_brute_force(data: st.DataObject, n: int, seed: int) -> None:
    tree = random_tree(n, 3, seed)
    points: List[tuple] = data.draw(
        st.lists(
            st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=n, max_size=n, unique=True
        )
    )
    drawing = GridDrawing(
        positions=tuple(points), bends={edge: () for edge in tree.edges()}, spines={}
    )
    assert check_planar(tree, drawing).passed is (find_crossing_brute_force(drawing) is None)


def test_planar_sweep_on_corpus(corpus: List[OrderedTree]) -> None:
    for tree in corpus[:12]:
        for kind in LayoutKind.every():
            drawing = layout(tree, kind)
            assert check_planar(tree, drawing).passed
            assert find_crossing_brute_force(drawing) is None
