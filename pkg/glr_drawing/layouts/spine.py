from typing import Callable

from glr_drawing.core import config
from glr_drawing.core.exceptions import LayoutInvariantError
from glr_drawing.layouts.block import Block
from glr_drawing.models.dataclasses import PathParams, RootPath
from glr_drawing.models.tree import OrderedTree
from glr_drawing.paths.selector import select_path, side_subtree_bound

Drawer = Callable[[OrderedTree, int], Block]


def select_bounded_path(tree: OrderedTree, root: int, params: PathParams) -> RootPath:
    """
    Select the path of a subtree and check that its side subtrees are small enough.

    :raises: LayoutInvariantError if a side subtree exceeds (1 - delta)^(1/p) n.
    """
    path = select_path(tree, params, root=root)
    bound = side_subtree_bound(tree.size(root), params) * (1 + config.FLOAT_RELATIVE_EPSILON)
    if max(path.max_left, path.max_right) > bound:
        raise LayoutInvariantError(
            f"Side subtree of size {max(path.max_left, path.max_right)} exceeds {bound:.3f} "
            f"at subtree {root}."
        )
    return path


def stack_along_spine(  # pylint: disable=too-many-arguments,too-many-locals
    tree: OrderedTree,
    root: int,
    params: PathParams,
    first: Drawer,
    left_rest: Drawer,
    right_rest: Drawer,
    bend_rows: bool,
) -> Block:
    """
    Draw the selected path of the subtree vertically in column 0 with the root in the top row.
    Below every path node come its left subtrees, in order, with their right side in column -1,
    then its right subtrees, from the rightmost one, with their left side in column 1, then the
    next path node.

    :param tree: the tree.
    :param root: the root of the subtree.
    :param params: the path parameters.
    :param first: the drawer of the first subtree on each side.
    :param left_rest: the drawer of the other left subtrees.
    :param right_rest: the drawer of the other right subtrees.
    :param bend_rows: if True, the other subtrees are reached through a bend one unit off the
     path, placed in an extra row above their box; otherwise boxes are one row apart and every
     edge is straight.
    :return: the drawing of the subtree.
    """
    path = select_bounded_path(tree, root, params)
    block = Block(root)
    bottom = 0
    for position, node in enumerate(path.nodes):
        if position:
            block.place(node, (0, bottom + 1))
            block.connect(path.nodes[position - 1], node)
            bottom += 1
        if position + 1 == len(path.nodes):
            break
        kids = tree.children_of(node)
        index = kids.index(path.nodes[position + 1])
        for side, subtrees, rest in (
            (-1, kids[:index], left_rest),
            (1, kids[:index:-1], right_rest),
        ):
            for order, child in enumerate(subtrees):
                sub = (rest if order else first)(tree, child)
                if bend_rows and order:
                    sub.move_to(top=bottom + 2)
                    block.connect(node, child, (side, bottom + 1))
                else:
                    sub.move_to(top=bottom + 1)
                    block.connect(node, child)
                if side < 0:
                    sub.move_to(right=-1)
                else:
                    sub.move_to(left=1)
                block.absorb(sub)
                bottom = sub.max_y
    block.spines[root] = path.nodes
    return block
