import logging
from typing import Optional

from glr_drawing.core.exceptions import LayoutKindError
from glr_drawing.layouts.nonupward import layout_nonupward
from glr_drawing.layouts.one_bend import layout_one_bend
from glr_drawing.layouts.quadratic import layout_quadratic
from glr_drawing.layouts.upward import layout_upward
from glr_drawing.models.dataclasses import LayoutKind, PathParams
from glr_drawing.models.drawing import GridDrawing
from glr_drawing.models.enums import LayoutAlgorithm
from glr_drawing.models.tree import OrderedTree

_LOGGER = logging.getLogger(__name__)


def layout(
    tree: OrderedTree, kind: LayoutKind, params: Optional[PathParams] = None
) -> GridDrawing:
    """
    Draw the tree with the engine and drawing type of the given kind.

    :param tree: the tree.
    :param kind: the engine and drawing type.
    :param params: the path parameters, defaulting to the configured ones.
    :return: the drawing.
    :raises: LayoutKindError if the engine is unknown.
    """
    _LOGGER.debug("Drawing tree.", extra=dict(n=tree.n, kind=str(kind)))
    if kind.algo == LayoutAlgorithm.QUADRATIC:
        return layout_quadratic(tree)
    if kind.algo == LayoutAlgorithm.ONE_BEND:
        return layout_one_bend(tree, params)
    if kind.algo == LayoutAlgorithm.NONUPWARD:
        return layout_nonupward(tree, kind.variant, params)
    if kind.algo == LayoutAlgorithm.UPWARD:
        return layout_upward(tree, kind.variant, params)
    raise LayoutKindError(f"Unknown engine {kind.algo}.")
