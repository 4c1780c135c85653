from typing import Any, Dict, List, Tuple

from glr_drawing.models.dataclasses import Metrics
from glr_drawing.models.drawing import GridDrawing
from glr_drawing.models.tree import OrderedTree

Box = Tuple[int, int, int, int]


def measure(drawing: GridDrawing) -> Metrics:
    """
    :param drawing: the drawing.
    :return: the size of its bounding box, nodes and bends included, and its bend count.
    """
    min_x, min_y, max_x, max_y = drawing.bounding_box()
    return Metrics(width=max_x - min_x + 1, height=max_y - min_y + 1, bends=drawing.bend_count)


def subtree_boxes(tree: OrderedTree, drawing: GridDrawing) -> List[Box]:
    """
    Compute the bounding box of the induced drawing of every rooted subtree, i.e., of its nodes
    and of the bends of its own edges.

    :return: min x, min y, max x, max y for every node.
    """
    boxes: List[Box] = [(x, y, x, y) for x, y in drawing.positions]
    for node in range(tree.n - 1, -1, -1):
        min_x, min_y, max_x, max_y = boxes[node]
        for child in tree.children[node]:
            child_box = boxes[child]
            points = [(child_box[0], child_box[1]), (child_box[2], child_box[3])]
            points.extend(drawing.bends.get((node, child), ()))
            for x, y in points:
                min_x, max_x = min(min_x, x), max(max_x, x)
                min_y, max_y = min(min_y, y), max(max_y, y)
        boxes[node] = (min_x, min_y, max_x, max_y)
    return boxes


def width_recurrence_violations(
    tree: OrderedTree, drawing: GridDrawing, relaxed: bool = False
) -> List[Dict[str, Any]]:
    """
    Check, at every certified path, that the drawing of its subtree is at most one column wider
    than its widest left subtree and widest right subtree together. The relaxed form also
    accepts twice the widest of the two.

    :param tree: the tree.
    :param drawing: the drawing with its path certificate.
    :param relaxed: whether to accept the relaxed bound.
    :return: one entry per violating path, empty if the recurrence holds everywhere.
    """
    boxes = subtree_boxes(tree, drawing)

    def width(node: int) -> int:
        return boxes[node][2] - boxes[node][0] + 1

    violations = []
    for root, spine in sorted(drawing.spines.items()):
        widest_left = widest_right = 0
        for node, following in zip(spine, spine[1:]):
            kids = tree.children[node]
            index = kids.index(following)
            widest_left = max([widest_left, *(width(kid) for kid in kids[:index])])
            widest_right = max([widest_right, *(width(kid) for kid in kids[index + 1 :])])
        bound = 1 + widest_left + widest_right
        if relaxed:
            bound = max(bound, 2 * max(widest_left, widest_right))
        if width(root) > bound:
            violations.append(
                dict(root=root, width=width(root), left=widest_left, right=widest_right)
            )
    return violations
