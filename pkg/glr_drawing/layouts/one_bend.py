import logging
from functools import partial
from typing import Optional

from glr_drawing.helpers.utils import deep_call
from glr_drawing.layouts.block import Block
from glr_drawing.layouts.spine import stack_along_spine
from glr_drawing.models.dataclasses import PathParams
from glr_drawing.models.drawing import GridDrawing
from glr_drawing.models.tree import OrderedTree
from glr_drawing.paths.selector import default_params

_LOGGER = logging.getLogger(__name__)


def one_bend_block(tree: OrderedTree, root: int, params: PathParams) -> Block:
    draw = partial(one_bend_block, params=params)
    return stack_along_spine(tree, root, params, draw, draw, draw, bend_rows=True)


def layout_one_bend(tree: OrderedTree, params: Optional[PathParams] = None) -> GridDrawing:
    """
    Draw the tree strictly upward and order-preserving with at most one bend per edge.
    Every row holds a node or a bend, so the height is at most 2n - 1.

    :param tree: the tree.
    :param params: the path parameters, defaulting to the configured ones.
    :return: the drawing.
    :raises: LayoutDepthError if the tree is too deep for the configured recursion limit.
    """
    params = params or default_params()
    drawing = deep_call(one_bend_block, tree, tree.root, params).to_drawing()
    _LOGGER.debug(
        "One bend layout done.", extra=dict(n=tree.n, bends=drawing.bend_count)
    )
    return drawing
