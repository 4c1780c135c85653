import logging
from functools import partial
from typing import Callable, Dict, Optional

from glr_drawing.helpers.utils import deep_call
from glr_drawing.layouts.block import Block
from glr_drawing.layouts.spine import select_bounded_path, stack_along_spine
from glr_drawing.models.dataclasses import PathParams
from glr_drawing.models.drawing import GridDrawing
from glr_drawing.models.enums import LayoutVariant
from glr_drawing.models.tree import OrderedTree
from glr_drawing.paths.selector import default_params

_LOGGER = logging.getLogger(__name__)


def type_one_block(tree: OrderedTree, root: int, params: PathParams) -> Block:
    """
    Draw the subtree straight-line with the root in the top row and exactly one node per row.
    """
    return stack_along_spine(
        tree,
        root,
        params,
        first=partial(type_one_block, params=params),
        left_rest=partial(type_two_right_block, params=params),
        right_rest=partial(type_two_left_block, params=params),
        bend_rows=False,
    )


def type_two_left_block(  # pylint: disable=too-many-locals
    tree: OrderedTree, root: int, params: PathParams
) -> Block:
    """
    Draw the subtree straight-line with the root in the leftmost column, nothing above it in that
    column, and exactly one node per row.
    Call pivot the first node of the selected path with a left subtree. Above the pivot the path
    is drawn as in a type I drawing. The right subtrees of the pivot are stacked above it, the
    subtree of its path child and the left subtrees but the first one below it, one column to
    the right, and the first left subtree last, continuing the column of the pivot.

    :param tree: the tree.
    :param root: the root of the subtree.
    :param params: the path parameters.
    :return: the drawing of the subtree.
    """
    nodes = select_bounded_path(tree, root, params).nodes
    pivot = next(
        (
            position
            for position, node in enumerate(nodes[:-1])
            if tree.children_of(node)[0] != nodes[position + 1]
        ),
        None,
    )
    if pivot is None:
        return type_one_block(tree, root, params)

    type_one = partial(type_one_block, params=params)
    type_two = partial(type_two_left_block, params=params)
    block = Block(root)
    bottom = 0
    for position in range(pivot):
        node = nodes[position]
        if position:
            block.place(node, (0, bottom + 1))
            block.connect(nodes[position - 1], node)
            bottom += 1
        for order, child in enumerate(tree.children_of(node)[:0:-1]):
            sub = (type_two if order else type_one)(tree, child).move_to(left=1, top=bottom + 1)
            block.absorb(sub)
            block.connect(node, child)
            bottom = sub.max_y

    node = nodes[pivot]
    kids = tree.children_of(node)
    index = kids.index(nodes[pivot + 1])
    rights = [type_two(tree, child) for child in kids[:index:-1]]
    top = bottom + 1 if pivot else -sum(sub.height for sub in rights)
    for child, sub in zip(kids[:index:-1], rights):
        sub.move_to(left=1, top=top)
        block.absorb(sub)
        block.connect(node, child)
        top = sub.max_y + 1
    if pivot:
        block.place(node, (0, top))
        block.connect(nodes[pivot - 1], node)
    bottom = top

    below = [(nodes[pivot + 1], type_one)]
    below.extend((child, type_two) for child in kids[index - 1 : 0 : -1])
    for child, draw in below:
        sub = draw(tree, child).move_to(left=1, top=bottom + 1)
        block.absorb(sub)
        block.connect(node, child)
        bottom = sub.max_y

    first = type_two(tree, kids[0]).move_to(left=0, top=bottom + 1)
    tail = first.spines.pop(kids[0])
    block.absorb(first)
    block.connect(node, kids[0])
    block.spines[root] = nodes[: pivot + 1] + tail
    return block


def type_two_right_block(tree: OrderedTree, root: int, params: PathParams) -> Block:
    """
    Draw the subtree as the mirror image of a left type II drawing of the mirrored subtree.
    """
    return type_two_left_block(tree.mirror_view(), root, params).reflect()


_BLOCKS: Dict[LayoutVariant, Callable[[OrderedTree, int, PathParams], Block]] = {
    LayoutVariant.TYPE_I: type_one_block,
    LayoutVariant.II_LEFT: type_two_left_block,
    LayoutVariant.II_RIGHT: type_two_right_block,
}


def layout_nonupward(
    tree: OrderedTree,
    variant: LayoutVariant = LayoutVariant.TYPE_I,
    params: Optional[PathParams] = None,
) -> GridDrawing:
    """
    Draw the tree straight-line and order-preserving, not necessarily upward, with height n.

    :param tree: the tree.
    :param variant: where the root goes: the top row (I), the leftmost (IIl) or the rightmost
     (IIr) column with nothing above it.
    :param params: the path parameters, defaulting to the configured ones.
    :return: the drawing.
    :raises: LayoutDepthError if the tree is too deep for the configured recursion limit.
    """
    params = params or default_params()
    drawing = deep_call(_BLOCKS[variant], tree, tree.root, params).to_drawing()
    _LOGGER.debug("Non-upward layout done.", extra=dict(n=tree.n, variant=variant.value))
    return drawing
