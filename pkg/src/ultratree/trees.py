"""Phrase trees: bracketed-text parsing, minimum heights, and ancestry queries.

Trees are written in single-line labeled bracketing, with leaves of the form
``(CAT word)`` and internal nodes ``(LABEL child child ...)``::

    (S (NP (D the) (N man)) (VP (V ate) (NP (D a) (N dog))))

Every tree is immutable once built.  Node ids are preorder positions, so the
root is node 0 and leaves appear in left-to-right order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadAritySpec,
    EmptyNode,
    MixedNode,
    ParseError,
    UnbalancedBrackets,
    UnknownNode,
)
from .matrix import RelationMatrix

DEFAULT_RANDOM_CATEGORIES = ("D", "N", "V", "A", "P")


@dataclass(frozen=True)
class Node:
    """One tree position.  Leaves carry a word; internal nodes carry children."""

    id: int
    label: str
    word: str | None
    children: tuple["Node", ...]

    @property
    def is_leaf(self) -> bool:
        return not self.children


class PhraseTree:
    """A rooted, ordered, labeled, non-reticulate tree.

    Construction validates that words appear exactly on childless nodes and
    that node ids are unique.  All queries are pure; instances may be shared
    freely across threads.
    """

    __slots__ = ("root", "_preorder", "_by_id", "_parent")

    def __init__(self, root: Node):
        preorder: list[Node] = []
        by_id: dict[int, Node] = {}
        parent: dict[int, int | None] = {}

        def visit(node: Node, parent_id: int | None) -> None:
            if node.children and node.word is not None:
                raise MixedNode(f"node {node.label!r} has both a word and children")
            if not node.children and node.word is None:
                raise EmptyNode(f"node {node.label!r} has neither a word nor children")
            if node.id in by_id:
                raise ValueError(f"duplicate node id {node.id}")
            preorder.append(node)
            by_id[node.id] = node
            parent[node.id] = parent_id
            for child in node.children:
                visit(child, node.id)

        visit(root, None)
        self.root = root
        self._preorder = tuple(preorder)
        self._by_id = by_id
        self._parent = parent

    # -- construction ------------------------------------------------------

    @classmethod
    def from_bracketed(cls, text: str) -> "PhraseTree":
        return parse_tree(text)

    @classmethod
    def from_nested(cls, nested) -> "PhraseTree":
        """Build a tree from nested pairs.

        A leaf is ``(category, word)`` with a string word; an internal node is
        ``(label, [child, child, ...])``.
        """
        counter = [0]

        def build(item) -> Node:
            label, payload = item
            node_id = counter[0]
            counter[0] += 1
            if isinstance(payload, str):
                return Node(node_id, label, payload, ())
            children = tuple(build(child) for child in payload)
            return Node(node_id, label, None, children)

        return cls(build(nested))

    # -- queries -----------------------------------------------------------

    @property
    def nodes(self) -> tuple[Node, ...]:
        """All nodes in preorder."""
        return self._preorder

    @property
    def leaves(self) -> tuple[Node, ...]:
        """Leaves in left-to-right order."""
        return tuple(n for n in self._preorder if n.is_leaf)

    def __len__(self) -> int:
        return len(self._preorder)

    def node(self, node_id: int) -> Node:
        try:
            return self._by_id[node_id]
        except KeyError:
            raise UnknownNode(f"no node with id {node_id}") from None

    def parent_id(self, node_id: int) -> int | None:
        self.node(node_id)
        return self._parent[node_id]

    def ancestor_ids(self, node_id: int, include_self: bool = False) -> Iterator[int]:
        """Walk upward from a node toward the root."""
        self.node(node_id)
        current: int | None = node_id if include_self else self._parent[node_id]
        while current is not None:
            yield current
            current = self._parent[current]

    def node_labels(self) -> tuple[str, ...]:
        """Node labels in preorder, suffixed ``#k`` where duplicated."""
        return disambiguate(n.label for n in self._preorder)

    def leaf_labels(self) -> tuple[str, ...]:
        """Leaf words in left-to-right order, suffixed ``#k`` where duplicated."""
        return disambiguate(n.word for n in self.leaves)  # type: ignore[misc]

    # -- serialization -----------------------------------------------------

    def to_bracketed(self) -> str:
        def write(node: Node) -> str:
            if node.is_leaf:
                return f"({node.label} {node.word})"
            inner = " ".join(write(child) for child in node.children)
            return f"({node.label} {inner})"

        return write(self.root)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PhraseTree) and self.root == other.root

    def __hash__(self) -> int:
        return hash(self.root)

    def __repr__(self) -> str:
        return f"PhraseTree({self.to_bracketed()!r})"


def disambiguate(labels: Iterable[str]) -> tuple[str, ...]:
    """Suffix repeated labels with ``#k`` (k-th occurrence, 1-based).

    Unique labels are returned unchanged, so ``the the man`` becomes
    ``the#1 the#2 man``.
    """
    labels = list(labels)
    counts: dict[str, int] = {}
    for label in labels:
        counts[label] = counts.get(label, 0) + 1
    seen: dict[str, int] = {}
    out: list[str] = []
    for label in labels:
        if counts[label] == 1:
            out.append(label)
        else:
            seen[label] = seen.get(label, 0) + 1
            out.append(f"{label}#{seen[label]}")
    return tuple(out)


# -- parsing ---------------------------------------------------------------

def _tokenize(text: str) -> Iterator[str]:
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            yield ch
            i += 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in "()":
                j += 1
            yield text[i:j]
            i = j


def parse_tree(text: str) -> PhraseTree:
    """Parse one bracketed tree.

    Args:
        text: a single balanced labeled bracketing, e.g.
            ``(S (NP (D the) (N man)) (VP (V slept)))``.

    Returns:
        The corresponding PhraseTree with preorder node ids.

    Raises:
        UnbalancedBrackets: parentheses do not balance, or there is trailing
            content after the tree.
        EmptyNode: a ``()`` group, or a labeled group with no content.
        MixedNode: a group mixing a word with child groups, or several words.
    """
    tokens = list(_tokenize(text))
    if not tokens:
        raise ParseError("empty input")
    pos = 0
    counter = [0]

    def parse_node() -> Node:
        nonlocal pos
        if tokens[pos] != "(":
            raise UnbalancedBrackets(f"expected '(' but found {tokens[pos]!r}")
        pos += 1
        if pos >= len(tokens):
            raise UnbalancedBrackets("unexpected end of input")
        if tokens[pos] in "()":
            raise EmptyNode("node with no label")
        label = tokens[pos]
        pos += 1
        node_id = counter[0]
        counter[0] += 1
        word: str | None = None
        children: list[Node] = []
        while pos < len(tokens) and tokens[pos] != ")":
            if tokens[pos] == "(":
                child = parse_node()
                children.append(child)
            else:
                if word is not None:
                    raise MixedNode(f"node {label!r} has more than one word")
                word = tokens[pos]
                pos += 1
        if pos >= len(tokens):
            raise UnbalancedBrackets("missing closing parenthesis")
        pos += 1  # consume ')'
        if word is not None and children:
            raise MixedNode(f"node {label!r} has both a word and children")
        if word is None and not children:
            raise EmptyNode(f"node {label!r} has neither a word nor children")
        if children:
            return Node(node_id, label, None, tuple(children))
        return Node(node_id, label, word, ())

    root = parse_node()
    if pos != len(tokens):
        raise UnbalancedBrackets("trailing content after the tree")
    return PhraseTree(root)


def serialize_tree(tree: PhraseTree) -> str:
    """Inverse of parse_tree: single-line labeled bracketing."""
    return tree.to_bracketed()


def parse_tree_lines(lines: Iterable[str], source: str = "<text>") -> list[PhraseTree]:
    """Parse a tree file body: one tree per line, ``#`` comments, blanks ignored."""
    trees: list[PhraseTree] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            trees.append(parse_tree(line))
        except ParseError as exc:
            raise type(exc)(f"{source}:{lineno}: {exc.args[0]}", line=lineno) from exc
    return trees


def parse_tree_file(path) -> list[PhraseTree]:
    """Read a UTF-8 tree file (one bracketed tree per line)."""
    with open(path, encoding="utf-8") as handle:
        return parse_tree_lines(handle, source=str(path))


# -- heights and ancestry --------------------------------------------------

def assign_heights(tree: PhraseTree) -> dict[int, int]:
    """Minimum branching heights: leaves at 0, parents one above their tallest child.

    This is the pointwise-least assignment that is strictly increasing from
    child to parent, so every branching event sits at the lowest height
    available to it.
    """
    heights: dict[int, int] = {}

    def visit(node: Node) -> int:
        if node.is_leaf:
            heights[node.id] = 0
            return 0
        h = 1 + max(visit(child) for child in node.children)
        heights[node.id] = h
        return h

    visit(tree.root)
    return heights


def lca(tree: PhraseTree, a: int, b: int) -> int:
    """Lowest common ancestor of two nodes; ``lca(a, a) == a``."""
    ancestors_a = set(tree.ancestor_ids(a, include_self=True))
    for candidate in tree.ancestor_ids(b, include_self=True):
        if candidate in ancestors_a:
            return candidate
    raise UnknownNode(f"nodes {a} and {b} share no ancestor")  # unreachable on one tree


def dominates(tree: PhraseTree, a: int, b: int) -> bool:
    """Reflexive ancestorhood: a dominates b iff a lies on the path from b to the root, or a == b."""
    tree.node(a)
    return any(ancestor == a for ancestor in tree.ancestor_ids(b, include_self=True))


def dominance_matrix(tree: PhraseTree) -> RelationMatrix:
    """Boolean dominance matrix over all nodes in preorder."""
    ids = [n.id for n in tree.nodes]
    ancestor_sets = {i: set(tree.ancestor_ids(i, include_self=True)) for i in ids}
    entries = tuple(
        tuple(a in ancestor_sets[b] for b in ids) for a in ids
    )
    return RelationMatrix(tree.node_labels(), entries)


def is_switched(tree: PhraseTree) -> bool:
    """True when every internal node branches exactly in two."""
    return all(n.is_leaf or len(n.children) == 2 for n in tree.nodes)


# -- generation ------------------------------------------------------------

def _parse_arity(arity: str) -> int | None:
    """Return None for binary, or the maximum arity for ``mixed:K``."""
    if arity == "binary":
        return None
    if isinstance(arity, str) and arity.startswith("mixed:"):
        try:
            max_arity = int(arity.split(":", 1)[1])
        except ValueError:
            raise BadAritySpec(f"bad arity spec {arity!r}") from None
        if max_arity < 2:
            raise BadAritySpec(f"mixed arity must be at least 2, got {max_arity}")
        return max_arity
    raise BadAritySpec(f"bad arity spec {arity!r} (use 'binary' or 'mixed:K')")


def random_tree(
    seed: int,
    leaf_count: int,
    arity: str = "binary",
    categories: Sequence[str] = DEFAULT_RANDOM_CATEGORIES,
) -> PhraseTree:
    """Deterministic random tree over ``leaf_count`` leaves.

    The shape is drawn by recursive random splits of the leaf sequence; with
    ``arity='mixed:K'`` each split picks between 2 and K parts.  Leaves are
    words ``w1..wn`` with categories drawn from ``categories``.  The same seed
    always yields the identical tree.
    """
    if leaf_count < 1:
        raise ValueError("leaf_count must be at least 1")
    max_arity = _parse_arity(arity)
    rng = random.Random(seed)
    leaves = [
        (rng.choice(list(categories)), f"w{i + 1}") for i in range(leaf_count)
    ]

    def build(lo: int, hi: int):
        n = hi - lo
        if n == 1:
            return leaves[lo]
        if max_arity is None:
            parts = 2
        else:
            parts = rng.randint(2, min(max_arity, n))
        cuts = sorted(rng.sample(range(lo + 1, hi), parts - 1))
        bounds = [lo, *cuts, hi]
        return ("X", [build(bounds[i], bounds[i + 1]) for i in range(parts)])

    if leaf_count == 1:
        return PhraseTree.from_nested(leaves[0])
    return PhraseTree.from_nested(build(0, leaf_count))


def enumerate_binary_trees(leaf_count: int) -> Iterator[PhraseTree]:
    """All strictly binary tree shapes over ``leaf_count`` ordered leaves.

    Yields the Catalan(leaf_count - 1) shapes in a fixed order; leaves are
    ``(W w1) .. (W wn)`` and internal nodes are labeled ``X``.
    """
    if leaf_count < 1:
        raise ValueError("leaf_count must be at least 1")

    def shapes(lo: int, hi: int):
        if hi - lo == 1:
            yield ("W", f"w{lo + 1}")
            return
        for split in range(lo + 1, hi):
            for left in shapes(lo, split):
                for right in shapes(split, hi):
                    yield ("X", [left, right])

    for nested in shapes(0, leaf_count):
        yield PhraseTree.from_nested(nested)
