import logging
import random
from typing import Callable, Dict, Iterator, List

from glr_drawing.core import config
from glr_drawing.core.exceptions import TreeFamilyError
from glr_drawing.models.dataclasses import TreeFamilySpec
from glr_drawing.models.enums import TreeKind
from glr_drawing.models.tree import OrderedTree, parse_tree

_LOGGER = logging.getLogger(__name__)


def _require(spec: TreeFamilySpec, *names: str) -> None:
    missing = [name for name in names if getattr(spec, name) is None]
    if missing:
        raise TreeFamilyError(f"Kind {spec.kind.value} requires {', '.join(missing)}.")


def random_tree(n: int, max_arity: int, seed: int) -> OrderedTree:
    """
    Generate a tree by repeated uniform attachment: each new node becomes a child of a uniformly
    chosen node with room left, at a uniformly chosen position among its children.

    :param n: the number of nodes.
    :param max_arity: the maximum number of children of a node.
    :param seed: the seed of the generator.
    :return: the random tree.
    """
    if n < 1 or max_arity < 1:
        raise TreeFamilyError(f"Random trees need n >= 1 and max_arity >= 1 (n={n}).")
    rng = random.Random(seed)
    children: List[List[int]] = [[]]
    open_nodes = [0]
    for node in range(1, n):
        index = rng.randrange(len(open_nodes))
        parent = open_nodes[index]
        children[parent].insert(rng.randint(0, len(children[parent])), node)
        children.append([])
        if len(children[parent]) == max_arity:
            open_nodes[index] = open_nodes[-1]
            open_nodes.pop()
        open_nodes.append(node)
    return OrderedTree.from_children(children)


def complete_tree(arity: int, height: int) -> OrderedTree:
    """
    :param arity: the number of children of every internal node.
    :param height: the number of edges on every root-to-leaf path.
    :return: the perfect tree.
    """
    if arity < 1 or height < 0:
        raise TreeFamilyError("Complete trees need arity >= 1 and height >= 0.")
    children: List[List[int]] = [[]]
    level = [0]
    for _ in range(height):
        next_level = []
        for parent in level:
            for _ in range(arity):
                children[parent].append(len(children))
                next_level.append(len(children))
                children.append([])
        level = next_level
    return OrderedTree.from_children(children)


def path_tree(n: int) -> OrderedTree:
    """
    :param n: the number of nodes.
    :return: the unary chain.
    """
    if n < 1:
        raise TreeFamilyError(f"Paths need n >= 1, got {n}.")
    return OrderedTree(children=tuple((node + 1,) for node in range(n - 1)) + ((),))


def star_tree(n: int) -> OrderedTree:
    """
    :param n: the number of nodes.
    :return: the root with n - 1 leaf children.
    """
    if n < 1:
        raise TreeFamilyError(f"Stars need n >= 1, got {n}.")
    return OrderedTree(children=(tuple(range(1, n)),) + ((),) * (n - 1))


def lowerbound_tree(k: int) -> OrderedTree:
    """
    Generate the tree with 6k - 1 nodes and arity 4 whose constrained drawings need quadratic area.
    The root has four children: a leaf, the heads of two chains of k nodes, and a leaf. Every
    chain node but the last has three children: a leaf, the next chain node, and a leaf.

    :param k: the length of the two chains.
    :return: the tree.
    """
    if k < 1:
        raise TreeFamilyError(f"The lower bound family needs k >= 1, got {k}.")
    children: List[List[int]] = [[]]

    def new_node() -> int:
        children.append([])
        return len(children) - 1

    left_leaf = new_node()
    chains = [new_node(), new_node()]
    children[0] = [left_leaf, chains[0], chains[1], new_node()]
    for head in chains:
        node = head
        for _ in range(1, k):
            following = new_node()
            children[node] = [new_node(), following, new_node()]
            node = following
    return OrderedTree.from_children(children)


def heavymiddle_tree(n: int, arity: int, seed: int, p: float = config.PATH_P) -> OrderedTree:
    """
    Generate a root with arity children, all leaves except one interior child holding a random
    subtree of n - arity nodes, which is then larger than n - n / 2^(1/p).

    :param n: the number of nodes.
    :param arity: the number of children of the root.
    :param seed: the seed of the middle subtree.
    :param p: the exponent the threshold is computed with.
    :return: the tree.
    """
    threshold = n / 2 ** (1 / p)
    if arity < 3 or not arity < threshold or arity >= n:
        raise TreeFamilyError(
            f"Heavy middle trees need 3 <= arity < n / 2^(1/p) = {threshold:.2f} (arity={arity})."
        )
    middle = random_tree(n - arity, arity, seed)
    before = (arity - 1) // 2
    children: List[List[int]] = [[]]
    for _ in range(before):
        children[0].append(len(children))
        children.append([])
    offset = len(children)
    children[0].append(offset)
    children.extend([kid + offset for kid in kids] for kids in middle.children)
    for _ in range(arity - before - 1):
        children[0].append(len(children))
        children.append([])
    return OrderedTree.from_children(children)


_GENERATORS: Dict[TreeKind, Callable[[TreeFamilySpec], OrderedTree]] = {
    TreeKind.RANDOM: lambda spec: random_tree(
        spec.n, spec.max_arity if spec.max_arity else max(spec.n - 1, 1), spec.seed  # type: ignore
    ),
    TreeKind.COMPLETE: lambda spec: complete_tree(spec.arity, spec.height),  # type: ignore
    TreeKind.PATH: lambda spec: path_tree(spec.n),  # type: ignore
    TreeKind.STAR: lambda spec: star_tree(spec.n),  # type: ignore
    TreeKind.LOWERBOUND: lambda spec: lowerbound_tree(spec.k),  # type: ignore
    TreeKind.HEAVYMIDDLE: lambda spec: heavymiddle_tree(
        spec.n, spec.arity, spec.seed  # type: ignore
    ),
}

_REQUIRED = {
    TreeKind.RANDOM: ("n",),
    TreeKind.COMPLETE: ("arity", "height"),
    TreeKind.PATH: ("n",),
    TreeKind.STAR: ("n",),
    TreeKind.LOWERBOUND: ("k",),
    TreeKind.HEAVYMIDDLE: ("n", "arity"),
}


def generate(spec: TreeFamilySpec) -> OrderedTree:
    """
    Generate a tree of the given family.

    :param spec: the family and its parameters.
    :return: the generated tree, deterministic for a fixed seed.
    :raises: TreeFamilyError if the parameters do not fit the kind.
    """
    _require(spec, *_REQUIRED[spec.kind])
    tree = _GENERATORS[spec.kind](spec)
    _LOGGER.debug(
        "Tree generated.", extra=dict(kind=spec.kind.value, n=tree.n, seed=spec.seed)
    )
    return tree


def _dyck_words(pairs: int) -> Iterator[str]:
    """
    Yield the balanced parentheses words with the given number of pairs in lexicographic order.
    """
    word: List[str] = []

    def extend(opened: int, closed: int) -> Iterator[str]:
        if closed == pairs:
            yield "".join(word)
            return
        for char, can in (("(", opened < pairs), (")", closed < opened)):
            if can:
                word.append(char)
                yield from extend(opened + (char == "("), closed + (char == ")"))
                word.pop()

    yield from extend(0, 0)


def enumerate_trees(n: int) -> Iterator[OrderedTree]:
    """
    Enumerate every ordered tree with n nodes, i.e., a Catalan number of them.

    :param n: the number of nodes.
    :return: an iterator over the trees, in lexicographic order of their text.
    """
    if n < 1:
        raise TreeFamilyError(f"Trees have at least one node, got {n}.")
    for word in _dyck_words(n - 1):
        yield parse_tree(f"({word})")
