import logging
from functools import partial
from typing import Callable, Dict, Optional

from glr_drawing.helpers.utils import ceil_div, deep_call
from glr_drawing.layouts.block import Block
from glr_drawing.layouts.spine import stack_along_spine
from glr_drawing.models.dataclasses import PathParams
from glr_drawing.models.drawing import GridDrawing
from glr_drawing.models.enums import LayoutVariant
from glr_drawing.models.tree import OrderedTree
from glr_drawing.paths.selector import default_params

_LOGGER = logging.getLogger(__name__)


def type_one_block(tree: OrderedTree, root: int, params: PathParams) -> Block:
    """
    Draw the subtree straight-line and strictly upward with the root in the top row.
    """
    return stack_along_spine(
        tree,
        root,
        params,
        first=partial(type_one_block, params=params),
        left_rest=partial(type_three_right_block, params=params),
        right_rest=partial(type_three_left_block, params=params),
        bend_rows=False,
    )


def heavy_child(tree: OrderedTree, root: int, params: PathParams) -> Optional[int]:
    """
    Find the child, neither first nor last, holding more than n - n / 2^(1/p) nodes of the
    subtree. At most one child can, since the threshold exceeds n / 2.

    :return: the index of the child, if any.
    """
    n = tree.size(root)
    threshold = n - n / 2 ** (1 / params.p)
    kids = tree.children_of(root)
    return next(
        (index for index in range(1, len(kids) - 1) if tree.size(kids[index]) > threshold), None
    )


def type_three_left_block(  # pylint: disable=too-many-locals
    tree: OrderedTree, root: int, params: PathParams
) -> Block:
    """
    Draw the subtree straight-line and strictly upward with the root in the top-left corner.
    The first child goes in column 0 below everything else, continuing the column of the root.
    Without a heavy child the other children are stacked from the last one, one column to the
    right. With a heavy child, the children after it are stacked in a quadrant to the upper
    right, the heavy child is pushed down until the edge to it passes strictly below that
    quadrant, and the children between the first one and the heavy one are stacked below it.

    :param tree: the tree.
    :param root: the root of the subtree.
    :param params: the path parameters.
    :return: the drawing of the subtree.
    """
    block = Block(root)
    kids = tree.children_of(root)
    if not kids:
        block.spines[root] = (root,)
        return block

    type_one = partial(type_one_block, params=params)
    type_three = partial(type_three_left_block, params=params)
    first = type_three(tree, kids[0])
    bottom = 0
    heavy = heavy_child(tree, root, params)
    if heavy is None:
        for order, child in enumerate(kids[:0:-1]):
            sub = (type_three if order else type_one)(tree, child).move_to(left=1, top=bottom + 1)
            block.absorb(sub)
            block.connect(root, child)
            bottom = sub.max_y
    else:
        quadrant = [(kids[-1], type_one(tree, kids[-1]))]
        quadrant.extend((child, type_three(tree, child)) for child in kids[-2:heavy:-1])
        big = type_one(tree, kids[heavy]).move_to(left=1)
        lower = [(child, type_three(tree, child)) for child in kids[heavy - 1 : 0 : -1]]

        quadrant_width = max(sub.width for _, sub in quadrant)
        quadrant_height = sum(sub.height for _, sub in quadrant)
        span = max(
            1 + big.width,
            1 + quadrant_width,
            max((1 + sub.width for _, sub in lower), default=0),
            first.width,
        )
        quadrant_left = max(
            ceil_div(max(big.width, 2 * quadrant_width), 2), span - quadrant_width, 1
        )
        big_x = big.root_position[0]
        # The quadrant corner (quadrant_left, quadrant_height) lies strictly above the line
        # from the root to (big_x, big_top).
        big_top = max(2 * quadrant_height + 1, big_x * quadrant_height // quadrant_left + 1)

        top = 1
        for child, sub in quadrant:
            sub.move_to(left=quadrant_left, top=top)
            block.absorb(sub)
            block.connect(root, child)
            top = sub.max_y + 1
        big.move_to(top=big_top)
        block.absorb(big)
        block.connect(root, kids[heavy])
        bottom = big.max_y
        for child, sub in lower:
            sub.move_to(left=1, top=bottom + 1)
            block.absorb(sub)
            block.connect(root, child)
            bottom = sub.max_y

    first.move_to(left=0, top=bottom + 1)
    tail = first.spines.pop(kids[0])
    block.absorb(first)
    block.connect(root, kids[0])
    block.spines[root] = (root,) + tail
    return block


def type_three_right_block(tree: OrderedTree, root: int, params: PathParams) -> Block:
    """
    Draw the subtree as the mirror image of a left type III drawing of the mirrored subtree.
    """
    return type_three_left_block(tree.mirror_view(), root, params).reflect()


_BLOCKS: Dict[LayoutVariant, Callable[[OrderedTree, int, PathParams], Block]] = {
    LayoutVariant.TYPE_I: type_one_block,
    LayoutVariant.III_LEFT: type_three_left_block,
    LayoutVariant.III_RIGHT: type_three_right_block,
}


def layout_upward(
    tree: OrderedTree,
    variant: LayoutVariant = LayoutVariant.TYPE_I,
    params: Optional[PathParams] = None,
) -> GridDrawing:
    """
    Draw the tree straight-line, strictly upward and order-preserving.

    :param tree: the tree.
    :param variant: where the root goes: the top row (I), the top-left (IIIl) or the top-right
     (IIIr) corner.
    :param params: the path parameters, defaulting to the configured ones.
    :return: the drawing.
    :raises: LayoutDepthError if the tree is too deep for the configured recursion limit.
    """
    params = params or default_params()
    drawing = deep_call(_BLOCKS[variant], tree, tree.root, params).to_drawing()
    _LOGGER.debug("Upward layout done.", extra=dict(n=tree.n, variant=variant.value))
    return drawing
