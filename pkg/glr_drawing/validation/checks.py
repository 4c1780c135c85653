from bisect import bisect_left, bisect_right
from functools import cmp_to_key
from typing import Any, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from glr_drawing.core.exceptions import CertificateError, DrawingError
from glr_drawing.layouts.metrics import subtree_boxes
from glr_drawing.models.dataclasses import ConditionResult
from glr_drawing.models.drawing import Edge, GridDrawing, Point
from glr_drawing.models.tree import OrderedTree
from glr_drawing.validation.geometry import (
    Vector,
    cross,
    dot,
    only_touch_at,
    segments_intersect,
    vector,
)

Segment = Tuple[Edge, Point, Point]

PASSED = ConditionResult(passed=True)


def _failed(**witness: Any) -> ConditionResult:
    return ConditionResult(passed=False, witness=witness)


def check_match(tree: OrderedTree, drawing: GridDrawing) -> None:
    """
    Check that the drawing draws the tree: same nodes and same edges.

    :raises: DrawingError on mismatch.
    """
    if drawing.n != tree.n:
        raise DrawingError(f"The drawing has {drawing.n} nodes, the tree {tree.n}.")
    edges = set(tree.edges())
    if set(drawing.bends) != edges:
        missing = sorted(edges.difference(drawing.bends))[:1]
        extra = sorted(set(drawing.bends).difference(edges))[:1]
        raise DrawingError(f"Edges do not match the tree (missing {missing}, extra {extra}).")


def _conflict(first: Segment, second: Segment) -> bool:
    """
    Check whether two segments of the drawing meet anywhere but at a shared endpoint that is
    allowed to be shared: a common node of the two edges, or the bend between two pieces of the
    same edge.
    """
    (first_edge, a, b), (second_edge, c, d) = first, second
    if not segments_intersect((a, b), (c, d)):
        return False
    if first_edge == second_edge or set(first_edge) & set(second_edge):
        for shared, first_end in ((a, b), (b, a)):
            for other, second_end in ((c, d), (d, c)):
                if shared == other:
                    return not only_touch_at(shared, first_end, second_end)
    return True


def _witness(first: Segment, second: Segment) -> Dict[str, Any]:
    return dict(
        edges=[list(first[0]), list(second[0])],
        segments=[[list(first[1]), list(first[2])], [list(second[1]), list(second[2])]],
    )


def _duplicate_point(drawing: GridDrawing) -> Optional[Point]:
    seen: Set[Point] = set()
    for point in drawing.points():
        if point in seen:
            return point
        seen.add(point)
    return None


def find_crossing_brute_force(drawing: GridDrawing) -> Optional[Dict[str, Any]]:
    """
    Compare every pair of segments.

    :return: the witness of the first conflicting pair, if any.
    """
    segments = list(drawing.segments())
    for index, first in enumerate(segments):
        for second in segments[index + 1 :]:
            if _conflict(first, second):
                return _witness(first, second)
    return None


def check_planar(tree: OrderedTree, drawing: GridDrawing) -> ConditionResult:
    """
    Check that no two segments meet except at a shared node, and that nodes and bends are
    pairwise distinct. Segments are swept by their top row, so only pairs whose row ranges
    overlap are compared.

    :raises: DrawingError if the drawing does not draw the tree.
    """
    check_match(tree, drawing)
    duplicate = _duplicate_point(drawing)
    if duplicate is not None:
        return _failed(point=list(duplicate))
    segments = sorted(drawing.segments(), key=lambda segment: min(segment[1][1], segment[2][1]))
    active: List[Segment] = []
    for segment in segments:
        top = min(segment[1][1], segment[2][1])
        left, right = sorted((segment[1][0], segment[2][0]))
        active = [other for other in active if max(other[1][1], other[2][1]) >= top]
        for other in active:
            if max(other[1][0], other[2][0]) < left or min(other[1][0], other[2][0]) > right:
                continue
            if _conflict(other, segment):
                return _failed(**_witness(other, segment))
        active.append(segment)
    return PASSED


def _direction(start: Point, end: Point) -> Vector:
    """
    :return: the direction from start to end with the y axis pointing up.
    :raises: DrawingError on zero length segments.
    """
    if start == end:
        raise DrawingError(f"Zero length segment at {list(start)}.")
    dx, dy = vector(start, end)
    return dx, -dy


def _sweep_order(reference: Vector, directions: Dict[int, Vector]) -> Optional[List[int]]:
    """
    Sort the children by the counter-clockwise angle of their direction from the reference one,
    which on screen runs from the parent to the left, below and then to the right.

    :return: the sorted children, None if a direction coincides with the reference or with
     another direction.
    """

    def half(direction: Vector) -> int:
        turn = cross(reference, direction)
        return 0 if turn > 0 or (turn == 0 and dot(reference, direction) < 0) else 1

    for direction in directions.values():
        if cross(reference, direction) == 0 and dot(reference, direction) > 0:
            return None

    def compare(first: int, second: int) -> int:
        first_direction, second_direction = directions[first], directions[second]
        if half(first_direction) != half(second_direction):
            return half(first_direction) - half(second_direction)
        return -cross(first_direction, second_direction)

    ordered = sorted(directions, key=cmp_to_key(compare))
    for first, second in zip(ordered, ordered[1:]):
        if compare(first, second) == 0:
            return None
    return ordered


def check_order_preserving(tree: OrderedTree, drawing: GridDrawing) -> ConditionResult:
    """
    Check that, sweeping around every node from the direction of its parent (straight up for the
    root) through the left, the bottom and the right, its children come in their given order.

    :raises: DrawingError if the drawing does not draw the tree or has zero length segments.
    """
    check_match(tree, drawing)
    for node in range(tree.n):
        kids = tree.children[node]
        if not kids:
            continue
        here = drawing.positions[node]
        parent = tree.parent(node)
        reference: Vector = (
            (0, 1) if parent is None else _direction(here, drawing.polyline((parent, node))[-2])
        )
        directions = {
            child: _direction(here, drawing.polyline((node, child))[1]) for child in kids
        }
        ordered = _sweep_order(reference, directions)
        if ordered != list(kids):
            return _failed(node=node, children=list(kids), found=ordered)
    return PASSED


def check_upward(tree: OrderedTree, drawing: GridDrawing, strict: bool = True) -> ConditionResult:
    """
    Check that every node is above its children, strictly or not; descendants follow.
    """
    check_match(tree, drawing)
    for parent, child in tree.edges():
        parent_y, child_y = drawing.positions[parent][1], drawing.positions[child][1]
        if parent_y > child_y or (strict and parent_y == child_y):
            return _failed(parent=parent, child=child)
    return PASSED


def _spine_index(tree: OrderedTree, drawing: GridDrawing) -> Dict[int, int]:
    """
    Map every node to the root of the recorded path it lies on.

    :raises: CertificateError if a path is not a downward chain of nodes of the tree, or if a
     node lies on no path or on more than one.
    """
    owner: Dict[int, int] = {}
    for root, spine in sorted(drawing.spines.items()):
        if not spine or spine[0] != root:
            raise CertificateError(f"The path recorded at {root} does not start there.")
        outside = [node for node in spine if not 0 <= node < tree.n]
        if outside:
            raise CertificateError(f"The path recorded at {root} has unknown node {outside[0]}.")
        for node, following in zip(spine, spine[1:]):
            if tree.parent(following) != node:
                raise CertificateError(
                    f"The path recorded at {root} goes from {node} to {following}, not a child."
                )
        for node in spine:
            if node in owner:
                raise CertificateError(f"Node {node} lies on two recorded paths.")
            owner[node] = root
    missing = [node for node in range(tree.n) if node not in owner]
    if missing:
        raise CertificateError(f"No recorded path covers node {missing[0]}.")
    return owner


def _sides(
    tree: OrderedTree, spine: Sequence[int]
) -> Iterable[Tuple[int, List[int], List[int]]]:
    """
    :return: for every node of the path, its left and right children off the path.
    """
    for node, following in zip(spine, spine[1:]):
        kids = tree.children[node]
        index = kids.index(following)
        yield node, list(kids[:index]), list(kids[index + 1 :])


def check_p1(tree: OrderedTree, drawing: GridDrawing) -> ConditionResult:
    """
    Check that every recorded path goes down a single column from its root to a leaf, so that
    every suffix, i.e., the path of every rooted subtree, does too.

    :raises: CertificateError if the certificate does not cover every node.
    """
    check_match(tree, drawing)
    _spine_index(tree, drawing)
    for root, spine in sorted(drawing.spines.items()):
        if not tree.is_leaf(spine[-1]):
            return _failed(spine=root, node=spine[-1], reason="does not end at a leaf")
        column = drawing.positions[root][0]
        for node, following in zip(spine, spine[1:]):
            x, y = drawing.positions[following]
            if x != column or y <= drawing.positions[node][1]:
                return _failed(spine=root, node=following, reason="not below in the column")
    return PASSED


def check_p2(tree: OrderedTree, drawing: GridDrawing) -> ConditionResult:
    """
    Check that the column of every recorded path has the drawings of the left subtrees hanging
    off it strictly on its left and those of the right subtrees strictly on its right.

    :raises: CertificateError if the certificate does not cover every node.
    """
    check_match(tree, drawing)
    _spine_index(tree, drawing)
    boxes = subtree_boxes(tree, drawing)
    for root, spine in sorted(drawing.spines.items()):
        column = drawing.positions[root][0]
        for node, lefts, rights in _sides(tree, spine):
            for child in lefts:
                if boxes[child][2] >= column:
                    return _failed(spine=root, node=node, subtree=child, side="left")
            for child in rights:
                if boxes[child][0] <= column:
                    return _failed(spine=root, node=node, subtree=child, side="right")
    return PASSED


def check_glr(tree: OrderedTree, drawing: GridDrawing) -> ConditionResult:
    """
    Check both conditions of a generalized LR-drawing on every rooted subtree.
    """
    result = check_p1(tree, drawing)
    return result if not result.passed else check_p2(tree, drawing)


class _Strips:
    """
    Node rows of a drawing, for counting the nodes inside horizontal strips.
    """

    def __init__(self, tree: OrderedTree, drawing: GridDrawing) -> None:
        self.rows = sorted(y for _, y in drawing.positions)
        spans = [(y, y) for _, y in drawing.positions]
        for node in range(tree.n - 1, -1, -1):
            for child in tree.children[node]:
                spans[node] = (
                    min(spans[node][0], spans[child][0]),
                    max(spans[node][1], spans[child][1]),
                )
        self.spans = spans
        self.sizes = tree.sizes

    def count(self, low: int, high: int) -> int:
        return bisect_right(self.rows, high) - bisect_left(self.rows, low)

    def exact(self, subtrees: Sequence[int], row: Optional[int] = None) -> bool:
        """
        Check that the strip spanned by the subtrees, and the row if given, holds no other node.
        """
        bounds = [self.spans[child] for child in subtrees]
        if row is not None:
            bounds.append((row, row))
        if not bounds:
            return True
        expected = sum(self.sizes[child] for child in subtrees) + (row is not None)
        low = min(low for low, _ in bounds)
        high = max(high for _, high in bounds)
        return self.count(low, high) == expected


def check_p3(tree: OrderedTree, drawing: GridDrawing) -> ConditionResult:
    """
    Check that the nodes of every rooted subtree fill a horizontal strip with no other node.
    """
    check_match(tree, drawing)
    strips = _Strips(tree, drawing)
    for node in range(tree.n):
        if not strips.exact([node]):
            return _failed(node=node, rows=list(strips.spans[node]))
    return PASSED


def check_p4(tree: OrderedTree, drawing: GridDrawing) -> ConditionResult:
    """
    Check that every path node and its subtrees off the path fill a strip with no other node.
    """
    check_match(tree, drawing)
    _spine_index(tree, drawing)
    strips = _Strips(tree, drawing)
    for root, spine in sorted(drawing.spines.items()):
        for node, lefts, rights in _sides(tree, spine):
            if not strips.exact(lefts + rights, drawing.positions[node][1]):
                return _failed(spine=root, node=node)
    return PASSED


def check_p5(tree: OrderedTree, drawing: GridDrawing) -> ConditionResult:
    """
    Check that, at every path node, its left subtrees fill a strip with no other node, and so do
    its right subtrees.
    """
    check_match(tree, drawing)
    _spine_index(tree, drawing)
    strips = _Strips(tree, drawing)
    for root, spine in sorted(drawing.spines.items()):
        for node, lefts, rights in _sides(tree, spine):
            for side, group in (("left", lefts), ("right", rights)):
                if not strips.exact(group):
                    return _failed(spine=root, node=node, side=side)
    return PASSED


def check_p6(tree: OrderedTree, drawing: GridDrawing) -> ConditionResult:
    """
    Check that every edge is a single straight segment.
    """
    check_match(tree, drawing)
    for edge in sorted(drawing.bends):
        if drawing.bends[edge]:
            return _failed(edge=list(edge), bends=[list(point) for point in drawing.bends[edge]])
    return PASSED


def check_p7(tree: OrderedTree, drawing: GridDrawing) -> ConditionResult:
    return check_upward(tree, drawing, strict=True)


def check_p8(tree: OrderedTree, drawing: GridDrawing) -> ConditionResult:
    """
    Check that the subtrees off every path lie right next to its column, and that every row of
    the drawing holds a node.
    """
    check_match(tree, drawing)
    _spine_index(tree, drawing)
    boxes = subtree_boxes(tree, drawing)
    for root, spine in sorted(drawing.spines.items()):
        column = drawing.positions[root][0]
        for node, lefts, rights in _sides(tree, spine):
            for child in lefts:
                if boxes[child][2] != column - 1:
                    return _failed(spine=root, node=node, subtree=child, side="left")
            for child in rights:
                if boxes[child][0] != column + 1:
                    return _failed(spine=root, node=node, subtree=child, side="right")
    _, top, _, bottom = drawing.bounding_box()
    rows = {y for _, y in drawing.positions}
    for row in range(top, bottom + 1):
        if row not in rows:
            return _failed(row=row)
    return PASSED
