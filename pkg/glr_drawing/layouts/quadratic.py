import logging

from glr_drawing.helpers.utils import deep_call
from glr_drawing.layouts.block import Block
from glr_drawing.models.drawing import GridDrawing
from glr_drawing.models.tree import OrderedTree

_LOGGER = logging.getLogger(__name__)


def quadratic_block(tree: OrderedTree, root: int) -> Block:
    """
    Draw the subtree with the root in the top-left corner and the leftmost path in column 0.
    The children of every path node are drawn from the rightmost one, each box one row below the
    previous one with its left side in column 1; the leftmost child follows in column 0.

    :param tree: the tree.
    :param root: the root of the subtree.
    :return: the drawing of the subtree, at most size(root) wide and tall.
    """
    block = Block(root)
    spine = [root]
    node, bottom = root, 0
    while not tree.is_leaf(node):
        kids = tree.children_of(node)
        for child in kids[:0:-1]:
            sub = quadratic_block(tree, child).move_to(left=1, top=bottom + 1)
            block.absorb(sub)
            block.connect(node, child)
            bottom = sub.max_y
        bottom += 1
        block.place(kids[0], (0, bottom))
        block.connect(node, kids[0])
        node = kids[0]
        spine.append(node)
    block.spines[root] = tuple(spine)
    return block


def layout_quadratic(tree: OrderedTree) -> GridDrawing:
    """
    Draw the tree straight-line, strictly upward and order-preserving in an n x n box.

    :param tree: the tree.
    :return: the drawing.
    :raises: LayoutDepthError if the tree is too deep for the configured recursion limit.
    """
    drawing = deep_call(quadratic_block, tree, tree.root).to_drawing()
    _LOGGER.debug("Quadratic layout done.", extra=dict(n=tree.n))
    return drawing
