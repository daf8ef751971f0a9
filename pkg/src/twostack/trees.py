"""
Rooted plane trees with positive integer labels subject to:

  * every leaf is labeled 1,
  * the root's label equals the sum of its children's labels,
  * every other internal node's label is at most the sum of its
    children's labels

(beta(1,0)-trees in the planar-map literature).  Children are ordered, so
two trees differing only in child order are distinct.  The smallest valid
tree has two nodes: a root over one leaf, both labeled 1.

A tree is represented as a nested tuple ``(label, child, child, ...)``
with a leaf being ``(1,)``.  The text form is the matching s-expression,
e.g. ``(3 (3 (2 (1) (1)) (1 (1))))``; JSON encodes each node as
``{"label": ..., "children": [...]}``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

Tree = tuple  # (label, *children), recursively


def _check_shape(tree) -> None:
    if not isinstance(tree, tuple) or len(tree) < 1 or isinstance(tree[0], tuple):
        raise ValueError(f"malformed tree node: {tree!r}")
    if not isinstance(tree[0], int):
        raise ValueError(f"node label must be an integer: {tree[0]!r}")
    for child in tree[1:]:
        _check_shape(child)


def node_count(tree: Tree) -> int:
    return 1 + sum(node_count(child) for child in tree[1:])


def leaf_count(tree: Tree) -> int:
    if len(tree) == 1:
        return 1
    return sum(leaf_count(child) for child in tree[1:])


def root_label(tree: Tree) -> int:
    return tree[0]


def tree_violations(tree: Tree) -> list[str]:
    """
    Every labeling constraint the candidate tree breaks, each tagged with
    the offending node's child-index path ("root", "root.0", "root.0.1",
    ...).  An empty list means the tree is valid.  The tree must be
    structurally well formed (nested tuples, integer labels); violations
    cover the label rules only.
    """
    _check_shape(tree)
    violations: list[str] = []

    def walk(node: Tree, path: str, is_root: bool) -> None:
        label, children = node[0], node[1:]
        if label < 1:
            violations.append(f"{path}: label {label} is not positive")
        if not children:
            if is_root:
                violations.append(f"{path}: root has no children")
            elif label != 1:
                violations.append(f"{path}: leaf label {label} != 1")
            return
        total = sum(child[0] for child in children)
        if is_root and label != total:
            violations.append(f"{path}: root label {label} != children sum {total}")
        elif not is_root and label > total:
            violations.append(f"{path}: label {label} > children sum {total}")
        for i, child in enumerate(children):
            walk(child, f"{path}.{i}", False)

    walk(tree, "root", True)
    return violations


def is_valid_tree(tree: Tree) -> bool:
    return not tree_violations(tree)


# Exhaustive enumeration.  A "subtree" below is any non-root node's
# subtree: its root label may be anything in 1..(children's label sum).
# Full trees then pin the root label to the exact sum.


@lru_cache(maxsize=None)
def _subtrees(m: int) -> tuple[Tree, ...]:
    if m == 1:
        return ((1,),)
    out = []
    for forest in _forests(m - 1):
        top = sum(child[0] for child in forest)
        for label in range(1, top + 1):
            out.append((label, *forest))
    return tuple(out)


@lru_cache(maxsize=None)
def _forests(m: int) -> tuple[tuple[Tree, ...], ...]:
    out = []
    for head_size in range(1, m + 1):
        for head in _subtrees(head_size):
            if head_size == m:
                out.append((head,))
            else:
                out.extend((head, *rest) for rest in _forests(m - head_size))
    return tuple(out)


def enumerate_trees(nodes: int, leaves: int | None = None) -> Iterator[Tree]:
    """
    Yield every valid tree on ``nodes`` nodes exactly once, restricted to
    ``leaves`` leaves when given.  Trees are emitted in ascending order of
    their nested-tuple form (labels compared numerically, children
    elementwise), which matches sorting their s-expressions with numeric
    label comparison.

    >>> [format_tree(t) for t in enumerate_trees(3)]
    ['(1 (1 (1)))', '(2 (1) (1))']
    """
    if nodes < 2:
        raise ValueError("a valid tree needs at least a root and one leaf")
    if leaves is not None and not 1 <= leaves <= nodes - 1:
        raise ValueError(f"leaf count must be in 1..{nodes - 1}, got {leaves}")
    found = []
    for forest in _forests(nodes - 1):
        tree = (sum(child[0] for child in forest), *forest)
        if leaves is None or leaf_count(tree) == leaves:
            found.append(tree)
    found.sort()
    yield from found


# Memoized counting by (node count, root label, leaf count); must and does
# agree with enumerate_trees.


@lru_cache(maxsize=None)
def _subtree_count(m: int, label: int, leaves: int) -> int:
    if m == 1:
        return 1 if label == 1 and leaves == 1 else 0
    # a node's label can never exceed the number of leaves below it
    return sum(_forest_count(m - 1, top, leaves) for top in range(label, leaves + 1))


@lru_cache(maxsize=None)
def _forest_count(m: int, label_sum: int, leaves: int) -> int:
    if m < 1 or label_sum < 1 or leaves < 1:
        return 0
    total = 0
    for head_nodes in range(1, m + 1):
        for head_label in range(1, label_sum + 1):
            for head_leaves in range(1, leaves + 1):
                c = _subtree_count(head_nodes, head_label, head_leaves)
                if not c:
                    continue
                if head_nodes == m:
                    if head_label == label_sum and head_leaves == leaves:
                        total += c
                else:
                    rest = _forest_count(
                        m - head_nodes, label_sum - head_label, leaves - head_leaves
                    )
                    total += c * rest
    return total


def count_trees(n: int, k: int) -> int:
    """
    The number of valid trees on n+1 nodes with k leaves, via the memoized
    recursion.  Exact integer arithmetic throughout.

    >>> count_trees(1, 1)
    1
    >>> count_trees(3, 2)
    4
    """
    if n < 1 or not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return sum(_forest_count(n, label_sum, k) for label_sum in range(1, k + 1))


def format_tree(tree: Tree) -> str:
    """Render a tree as an s-expression, e.g. ``(2 (1) (1))``."""
    inner = " ".join([str(tree[0])] + [format_tree(c) for c in tree[1:]])
    return f"({inner})"


def parse_tree(text: str) -> Tree:
    """
    Parse the s-expression form of a labeled tree.  The label rules are
    not checked here, so invalid candidates can be parsed and then fed to
    :func:`tree_violations`.

    >>> parse_tree("(3 (3 (2 (1) (1)) (1 (1))))")
    (3, (3, (2, (1,), (1,)), (1, (1,))))
    """
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def node() -> Tree:
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != "(":
            raise ValueError(f"expected '(' at token {pos} of {text!r}")
        pos += 1
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of input: {text!r}")
        try:
            label = int(tokens[pos])
        except ValueError:
            raise ValueError(f"expected integer label, got {tokens[pos]!r}") from None
        pos += 1
        children = []
        while pos < len(tokens) and tokens[pos] == "(":
            children.append(node())
        if pos >= len(tokens) or tokens[pos] != ")":
            raise ValueError(f"expected ')' at token {pos} of {text!r}")
        pos += 1
        return (label, *children)

    tree = node()
    if pos != len(tokens):
        raise ValueError(f"trailing input after tree: {text!r}")
    return tree


def tree_to_json(tree: Tree) -> dict:
    """Encode as nested ``{"label": ..., "children": [...]}`` objects."""
    return {"label": tree[0], "children": [tree_to_json(c) for c in tree[1:]]}


def tree_from_json(obj: dict) -> Tree:
    label = obj["label"]
    if not isinstance(label, int):
        raise ValueError(f"label must be an integer: {label!r}")
    return (label, *(tree_from_json(c) for c in obj.get("children", [])))
