"""
Selection of a root-to-leaf path whose largest left subtree and largest right subtree satisfy
|alpha|^p + |beta|^p <= (1 - delta) n^p.
"""
import logging
from itertools import accumulate
from typing import List, Optional, Sequence, Tuple

from glr_drawing.core import config
from glr_drawing.core.exceptions import FeasibilityIndexError, InvalidPathError, PathClaimViolation
from glr_drawing.models.dataclasses import PathParams, PathState, RootPath
from glr_drawing.models.tree import OrderedTree

_LOGGER = logging.getLogger(__name__)


def default_params() -> PathParams:
    """
    :return: the path parameters from the configuration.
    """
    return PathParams(p=config.PATH_P, delta=config.PATH_DELTA)


def _power(size: int, params: PathParams) -> float:
    return float(size) ** params.p if size else 0.0


def budget(n: int, params: PathParams) -> float:
    """
    :param n: the size of the tree.
    :param params: the path parameters.
    :return: the right hand side (1 - delta) n^p of the invariant.
    """
    return (1 - params.delta) * _power(n, params)


def _within(max_left: int, max_right: int, n: int, params: PathParams) -> bool:
    lhs = _power(max_left, params) + _power(max_right, params)
    return lhs <= budget(n, params) * (1 + config.FLOAT_RELATIVE_EPSILON)


def slack(max_left: int, max_right: int, n: int, params: PathParams) -> float:
    return budget(n, params) - (_power(max_left, params) + _power(max_right, params))


def side_subtree_bound(n: int, params: PathParams) -> float:
    """
    Upper bound on the size of any left or right subtree of a selected path, which follows from
    the invariant since a single side subtree of size s contributes s^p.

    :param n: the size of the tree.
    :param params: the path parameters.
    :return: (1 - delta)^(1/p) n.
    """
    return (1 - params.delta) ** (1 / params.p) * n


def is_feasible(
    state: PathState, sizes: Sequence[int], k: int, params: PathParams, n: int
) -> bool:
    """
    Check whether extending the path with the k-th child of its endpoint keeps the invariant.

    :param state: the current path state.
    :param sizes: the subtree sizes of the children of the endpoint, in order.
    :param k: the 1-based index of the candidate child.
    :param params: the path parameters.
    :param n: the size of the tree.
    :return: True if no violation occurs, False otherwise.
    :raises: FeasibilityIndexError if k is not a child index.
    """
    if not 1 <= k <= len(sizes):
        raise FeasibilityIndexError(f"k={k} with {len(sizes)} children.")
    left = max(state.alpha, *sizes[: k - 1]) if k > 1 else state.alpha
    right = max(state.beta, *sizes[k:]) if k < len(sizes) else state.beta
    return _within(left, right, n, params)


def _side_maxima(state: PathState, sizes: Sequence[int]) -> Tuple[List[int], List[int]]:
    """
    Compute, for every child index, the largest left and right subtree the path would have
    if extended through that child, with two passes of running maxima.
    """
    prefix = list(accumulate([state.alpha, *sizes[:-1]], max))
    suffix = list(accumulate([state.beta, *reversed(sizes[1:])], max))[::-1]
    return prefix, suffix


def _descend(tree: OrderedTree, node: int, leftmost: bool) -> Tuple[List[int], int]:
    """
    Follow the leftmost (or rightmost) path from node down to a leaf.

    :return: the path and the largest subtree hanging on its other side.
    """
    path = [node]
    other_side = 0
    while not tree.is_leaf(node):
        kids = tree.children_of(node)
        others = kids[1:] if leftmost else kids[:-1]
        other_side = max([other_side, *(tree.size(kid) for kid in others)])
        node = kids[0] if leftmost else kids[-1]
        path.append(node)
    return path, other_side


def select_path(
    tree: OrderedTree, params: Optional[PathParams] = None, root: Optional[int] = None
) -> RootPath:
    """
    Select a root-to-leaf path of the (sub)tree satisfying the invariant.
    The path is extended while exactly one child is feasible; as soon as two children are
    feasible, the leftmost path of the smaller one (or the rightmost path of the second one, if
    smaller) completes it.

    :param tree: the tree.
    :param params: the path parameters, defaulting to the configured ones.
    :param root: the root of the subtree to select the path in, defaulting to the tree root.
    :return: the path, with its largest side subtrees and slack.
    :raises: PathClaimViolation if at some step no child is feasible.
    """
    params = params or default_params()
    node = tree.root if root is None else root
    n = tree.size(node)
    state = PathState(path=[node])
    while not tree.is_leaf(node):
        kids = tree.children_of(node)
        sizes = [tree.size(kid) for kid in kids]
        prefix, suffix = _side_maxima(state, sizes)
        feasible = [
            index
            for index in range(len(kids))
            if _within(prefix[index], suffix[index], n, params)
        ][:2]
        if not feasible:
            raise PathClaimViolation(
                dict(state.dump(), node=node, sizes=sizes, n=n, p=params.p, delta=params.delta)
            )
        if len(feasible) == 1:
            index = feasible[0]
            node = kids[index]
            state.path.append(node)
            state.alpha, state.beta = prefix[index], suffix[index]
            continue
        first, second = feasible
        if sizes[first] <= sizes[second]:
            tail, other_side = _descend(tree, kids[first], leftmost=True)
            state.alpha, state.beta = prefix[first], max(suffix[first], other_side)
        else:
            tail, other_side = _descend(tree, kids[second], leftmost=False)
            state.alpha, state.beta = max(prefix[second], other_side), suffix[second]
        state.path.extend(tail)
        break

    if not _within(state.alpha, state.beta, n, params):
        raise PathClaimViolation(dict(state.dump(), n=n, p=params.p, delta=params.delta))
    _LOGGER.debug(
        "Path selected.",
        extra=dict(
            root=state.path[0], n=n, length=len(state.path), alpha=state.alpha, beta=state.beta
        ),
    )
    return RootPath(
        nodes=tuple(state.path),
        max_left=state.alpha,
        max_right=state.beta,
        slack=slack(state.alpha, state.beta, n, params),
    )


def path_sides(tree: OrderedTree, nodes: Sequence[int]) -> Tuple[int, int]:
    """
    Recompute the largest left and right subtree hanging off a root-to-leaf path.

    :param tree: the tree.
    :param nodes: the path, from its first node to a leaf.
    :return: the sizes of the largest left and right subtree.
    :raises: InvalidPathError if the nodes are not a downward path ending at a leaf.
    """
    if not nodes:
        raise InvalidPathError("The path is empty.")
    if not tree.is_leaf(nodes[-1]):
        raise InvalidPathError(f"The path ends at {nodes[-1]}, which is not a leaf.")
    max_left = max_right = 0
    for node, following in zip(nodes, nodes[1:]):
        if tree.parent(following) != node:
            raise InvalidPathError(f"{following} is not a child of {node}.")
        kids = tree.children_of(node)
        index = kids.index(following)
        max_left = max([max_left, *(tree.size(kid) for kid in kids[:index])])
        max_right = max([max_right, *(tree.size(kid) for kid in kids[index + 1 :])])
    return max_left, max_right


def path_invariant_check(
    tree: OrderedTree, path: RootPath, params: Optional[PathParams] = None
) -> bool:
    """
    Check the invariant of a path from scratch, ignoring the bookkeeping stored in it.

    :param tree: the tree.
    :param path: the path, starting at the tree root or at the root of a subtree.
    :param params: the path parameters, defaulting to the configured ones.
    :return: True if the invariant holds, False otherwise.
    :raises: InvalidPathError if the path is not root-to-leaf.
    """
    params = params or default_params()
    max_left, max_right = path_sides(tree, path.nodes)
    return _within(max_left, max_right, tree.size(path.nodes[0]), params)


def brute_force_paths(
    tree: OrderedTree, params: Optional[PathParams] = None
) -> List[Tuple[RootPath, bool]]:
    """
    Enumerate every root-to-leaf path with its side maxima and whether it satisfies the invariant.

    :param tree: the tree.
    :param params: the path parameters, defaulting to the configured ones.
    :return: one entry per leaf, in left-to-right order.
    """
    params = params or default_params()
    paths: List[Tuple[RootPath, bool]] = []
    stack: List[Tuple[Tuple[int, ...], int, int]] = [((tree.root,), 0, 0)]
    while stack:
        nodes, max_left, max_right = stack.pop()
        kids = tree.children_of(nodes[-1])
        if not kids:
            path = RootPath(
                nodes=nodes,
                max_left=max_left,
                max_right=max_right,
                slack=slack(max_left, max_right, tree.n, params),
            )
            paths.append((path, _within(max_left, max_right, tree.n, params)))
            continue
        sizes = [tree.size(kid) for kid in kids]
        prefix, suffix = _side_maxima(PathState(path=[], alpha=max_left, beta=max_right), sizes)
        for index in reversed(range(len(kids))):
            stack.append(((*nodes, kids[index]), prefix[index], suffix[index]))
    return paths
