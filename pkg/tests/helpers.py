"""Shared fixtures and independent brute-force oracles.

The oracles recompute ancestry, heights, and leaf distances directly from
the node structure so library results can be checked against a second path.
"""

from __future__ import annotations

from ultratree import Node, PhraseTree

# Trees behind the eight 4-leaf branching matrices (words A, M, J, H).
TREE_FIRST = "(S (X (W A) (W M)) (Y (W J) (W H)))"
TREE_SECOND = "(S (W A) (X (W M) (Y (W J) (W H))))"
TREE_THIRD_CORRECTED = "(S (W A) (X (Y (W M) (W J)) (W H)))"
TREE_FOURTH = "(S (X (W A) (Y (W M) (W J))) (W H))"
TREE_FIFTH = "(S (X (Y (W A) (W M)) (W J)) (W H))"
TREE_SIXTH_CORRECTED = "(S (X (W A) (W M) (W J)) (W H))"
TREE_SEVENTH = "(S (W A) (X (W M) (W J) (W H)))"
TREE_EIGHTH = "(S (W A) (W M) (W J) (W H))"

LABELS_AMJH = ("A", "M", "J", "H")

MATRIX_FIRST = ((0, 1, 2, 2), (1, 0, 2, 2), (2, 2, 0, 1), (2, 2, 1, 0))
MATRIX_SECOND = ((0, 3, 3, 3), (3, 0, 2, 2), (3, 2, 0, 1), (3, 2, 1, 0))
MATRIX_FOURTH = ((0, 2, 2, 3), (2, 0, 1, 3), (2, 1, 0, 3), (3, 3, 3, 0))
MATRIX_FIFTH = ((0, 1, 2, 3), (1, 0, 2, 3), (2, 2, 0, 3), (3, 3, 3, 0))
MATRIX_SEVENTH = ((0, 2, 2, 2), (2, 0, 1, 1), (2, 1, 0, 1), (2, 1, 1, 0))
MATRIX_EIGHTH = ((0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0))

# As printed, these two are not ultrametric; they serve as checker vectors.
MATRIX_THIRD_PRINTED = ((0, 3, 3, 3), (3, 0, 1, 2), (3, 1, 0, 1), (3, 2, 1, 0))
MATRIX_SIXTH_PRINTED = ((0, 1, 1, 3), (1, 0, 1, 2), (1, 1, 0, 2), (3, 2, 2, 0))

MATRIX_THIRD_CORRECTED = ((0, 3, 3, 3), (3, 0, 1, 2), (3, 1, 0, 2), (3, 2, 2, 0))
MATRIX_SIXTH_CORRECTED = ((0, 1, 1, 2), (1, 0, 1, 2), (1, 1, 0, 2), (2, 2, 2, 0))

# Four same-height leaves A..D; the deeper pair B, C meets lowest.
TREE_CCOMMAND = "(H (F (W A) (E (W B) (W C))) (W D))"

# Nine-node dominance example: a clause with a unary subject NP and a
# branching object NP.
TREE_DOMINANCE = (
    "(S (NP-S (N-S John)) (AUX must) (VP (V eat) (NP-E (Det the) (N-E dog))))"
)

DOMINANCE_LABELS = ("S", "NP-S", "N-S", "AUX", "VP", "V", "NP-E", "Det", "N-E")

DOMINANCE_EXPECTED = (
    (1, 1, 1, 1, 1, 1, 1, 1, 1),
    (0, 1, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 1, 1, 1, 1),
    (0, 0, 0, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, 1, 1),
    (0, 0, 0, 0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 1),
)

CCOMMAND_EXPECTED = (
    (1, 1, 1, 0),
    (0, 1, 1, 0),
    (0, 1, 1, 0),
    (1, 1, 1, 1),
)


def brute_parent_map(tree: PhraseTree) -> dict[int, int | None]:
    parents: dict[int, int | None] = {tree.root.id: None}

    def walk(node: Node) -> None:
        for child in node.children:
            parents[child.id] = node.id
            walk(child)

    walk(tree.root)
    return parents


def brute_ancestors(tree: PhraseTree, node_id: int) -> list[int]:
    """Ancestor chain including the node itself, bottom up."""
    parents = brute_parent_map(tree)
    chain = [node_id]
    while parents[chain[-1]] is not None:
        chain.append(parents[chain[-1]])
    return chain


def brute_depths(tree: PhraseTree) -> dict[int, int]:
    depths: dict[int, int] = {}

    def walk(node: Node, depth: int) -> None:
        depths[node.id] = depth
        for child in node.children:
            walk(child, depth + 1)

    walk(tree.root, 0)
    return depths


def brute_lca(tree: PhraseTree, a: int, b: int) -> int:
    """Deepest node in the intersection of the two ancestor chains."""
    common = set(brute_ancestors(tree, a)) & set(brute_ancestors(tree, b))
    depths = brute_depths(tree)
    return max(common, key=lambda node_id: depths[node_id])


def brute_heights(tree: PhraseTree) -> dict[int, int]:
    heights: dict[int, int] = {}

    def walk(node: Node) -> int:
        value = 0 if node.is_leaf else 1 + max(walk(c) for c in node.children)
        heights[node.id] = value
        return value

    walk(tree.root)
    return heights


def brute_leaf_distance(tree: PhraseTree, a: int, b: int) -> int:
    return brute_heights(tree)[brute_lca(tree, a, b)]


def all_tree_shapes(node_count: int):
    """Every rooted ordered tree shape with exactly ``node_count`` nodes.

    Unary nodes are allowed.  Yields nested pairs ready for
    PhraseTree.from_nested, with leaves numbered left to right.
    """

    def compositions(total: int):
        if total == 0:
            yield []
            return
        for head in range(1, total + 1):
            for rest in compositions(total - head):
                yield [head, *rest]

    def shapes(n: int):
        # A shape is None for a leaf or a list of child shapes.
        if n == 1:
            yield None
            return
        for composition in compositions(n - 1):
            for children in child_combinations(composition):
                yield children

    def child_combinations(sizes: list[int]):
        if not sizes:
            yield []
            return
        for first in shapes(sizes[0]):
            for rest in child_combinations(sizes[1:]):
                yield [first, *rest]

    def to_nested(shape, counter: list[int]):
        if shape is None:
            counter[0] += 1
            return ("W", f"w{counter[0]}")
        return ("X", [to_nested(child, counter) for child in shape])

    for shape in shapes(node_count):
        yield to_nested(shape, [0])
