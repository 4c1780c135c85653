from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterator, List, Optional, Sequence, Tuple

from glr_drawing.core.exceptions import TreeParseError, TreeStructureError

_WHITESPACE = frozenset(" \t\r\n")


@dataclass(frozen=True)
class OrderedTree:
    """
    Immutable ordered rooted tree.
    Nodes are numbered in preorder, so the root is 0 and the subtree of v is the id range
    [v, v + size(v)). A mirrored view shares the ids and reverses every child list.
    """

    children: Tuple[Tuple[int, ...], ...]
    mirrored: bool = False
    parents: Tuple[Optional[int], ...] = field(init=False, repr=False, compare=False)
    sizes: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.children)
        if n == 0:
            raise TreeStructureError("A tree has at least one node.")
        parents: List[Optional[int]] = [None] * n
        visited = 0
        stack = [0]
        while stack:
            node = stack.pop()
            if node != visited:
                raise TreeStructureError(
                    f"Node ids are not in preorder (found {node}, expected {visited})."
                )
            visited += 1
            for child in reversed(self.children[node]):
                parents[child] = node
                stack.append(child)
        if visited != n:
            raise TreeStructureError(f"Only {visited} of {n} nodes are reachable from the root.")
        sizes = [1] * n
        for node in range(n - 1, -1, -1):
            sizes[node] += sum(sizes[child] for child in self.children[node])
        object.__setattr__(self, "parents", tuple(parents))
        object.__setattr__(self, "sizes", tuple(sizes))

    @classmethod
    def from_children(cls, children: Sequence[Sequence[int]], root: int = 0) -> OrderedTree:
        """
        Build a tree from an arbitrary arena, renumbering the nodes in preorder.

        :param children: the ordered child list of every node.
        :param root: the id of the root in the given arena.
        :return: the tree with preorder ids.
        :raises: TreeStructureError if the arena is not a single tree rooted at root.
        """
        new_id = {}
        stack = [root]
        while stack:
            node = stack.pop()
            if node in new_id:
                raise TreeStructureError(f"Node {node} is reachable more than once.")
            new_id[node] = len(new_id)
            stack.extend(reversed(children[node]))
        if len(new_id) != len(children):
            raise TreeStructureError(
                f"Only {len(new_id)} of {len(children)} nodes are reachable from the root."
            )
        renumbered: List[Tuple[int, ...]] = [()] * len(children)
        for node, kids in enumerate(children):
            renumbered[new_id[node]] = tuple(new_id[child] for child in kids)
        return cls(children=tuple(renumbered))

    @property
    def n(self) -> int:
        return len(self.children)

    @property
    def root(self) -> int:
        return 0

    @property
    def arity(self) -> int:
        """
        :return: the maximum number of children of a node.
        """
        return max(len(kids) for kids in self.children)

    @property
    def height(self) -> int:
        """
        :return: the number of edges on a longest root-to-leaf path.
        """
        depths = [0] * self.n
        for node in range(1, self.n):
            depths[node] = depths[self.parents[node]] + 1  # type: ignore
        return max(depths)

    def children_of(self, node: int) -> Tuple[int, ...]:
        """
        :param node: the node id.
        :return: the children of the node, in the order of this view.
        """
        kids = self.children[node]
        return kids[::-1] if self.mirrored else kids

    def parent(self, node: int) -> Optional[int]:
        return self.parents[node]

    def size(self, node: int) -> int:
        return self.sizes[node]

    def is_leaf(self, node: int) -> bool:
        return not self.children[node]

    def subtree_nodes(self, node: int) -> range:
        """
        :param node: the subtree root.
        :return: the ids of the nodes of the subtree, which are contiguous in preorder.
        """
        return range(node, node + self.sizes[node])

    def edges(self) -> Iterator[Tuple[int, int]]:
        """
        :return: an iterator over the (parent, child) pairs.
        """
        for node, kids in enumerate(self.children):
            for child in kids:
                yield node, child

    def mirror_view(self) -> OrderedTree:
        """
        :return: the same tree with every child list reversed, keeping the node ids.
        """
        return replace(self, mirrored=not self.mirrored)


def parse_tree(text: str) -> OrderedTree:
    """
    Parse a tree in the nested parentheses format, e.g., "(()())" for a root with two leaves.

    :param text: the tree text, whitespace between tokens is ignored.
    :return: the tree, with preorder ids in textual order.
    :raises: TreeParseError with the byte offset of the first problem.
    """
    children: List[List[int]] = []
    stack: List[int] = []
    closed = False
    offset = 0
    for char in text:
        if char in _WHITESPACE:
            pass
        elif char == "(":
            if closed:
                raise TreeParseError("Unexpected content after the root was closed", offset)
            node = len(children)
            children.append([])
            if stack:
                children[stack[-1]].append(node)
            stack.append(node)
        elif char == ")":
            if not stack:
                raise TreeParseError("Unbalanced closing parenthesis", offset)
            stack.pop()
            closed = not stack
        else:
            raise TreeParseError(f"Stray character {char!r}", offset)
        offset += len(char.encode("utf-8"))
    if not children:
        raise TreeParseError("Empty tree text", offset)
    if stack:
        raise TreeParseError(f"{len(stack)} unclosed parentheses", offset)
    return OrderedTree(children=tuple(tuple(kids) for kids in children))


def serialize_tree(tree: OrderedTree) -> str:
    """
    Serialize the tree in the nested parentheses format, following the child order of the view.

    :param tree: the tree to serialize.
    :return: the tree text, without whitespace.
    """
    parts: List[str] = []
    stack: List[Tuple[int, int]] = [(tree.root, 0)]
    parts.append("(")
    while stack:
        node, index = stack.pop()
        kids = tree.children_of(node)
        if index < len(kids):
            stack.append((node, index + 1))
            stack.append((kids[index], 0))
            parts.append("(")
        else:
            parts.append(")")
    return "".join(parts)
