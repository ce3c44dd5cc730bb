"""Minimum ultrametric distances between lexical categories over a corpus."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyCorpus, MissingEntry, UnknownLabel
from .matrix import CategoryDistanceMatrix
from .trees import PhraseTree, assign_heights, lca

DEFAULT_CATEGORY_ORDER = ("D", "N", "V", "A", "P")


def tree_category_minima(
    tree: PhraseTree, heights: dict[int, int] | None = None
) -> dict[tuple[str, str], int]:
    """Minimum leaf distance per unordered category pair present in the tree.

    Same-category pairs are included when the tree holds two or more tokens
    of the category.  A tree with fewer than two leaves yields an empty map.
    """
    if heights is None:
        heights = assign_heights(tree)
    leaves = tree.leaves
    minima: dict[tuple[str, str], int] = {}
    for i in range(len(leaves)):
        for j in range(i + 1, len(leaves)):
            pair = tuple(sorted((leaves[i].label, leaves[j].label)))
            d = heights[lca(tree, leaves[i].id, leaves[j].id)]
            if pair not in minima or d < minima[pair]:
                minima[pair] = d
    return minima


def min_distance_matrix(
    corpus: Sequence[PhraseTree], categories: Sequence[str] | None = None
) -> CategoryDistanceMatrix:
    """Entrywise minimum of per-tree category minima across a corpus.

    ``categories`` fixes the label order; by default the conventional
    D, N, V, A, P order is used for the categories it covers, and any other
    categories seen in the corpus follow alphabetically.  Pairs never seen
    together are absent (None).
    """
    if not corpus:
        raise EmptyCorpus("corpus has no trees")
    combined: dict[tuple[str, str], int] = {}
    seen: set[str] = set()
    for tree in corpus:
        for leaf in tree.leaves:
            seen.add(leaf.label)
        for pair, d in tree_category_minima(tree).items():
            if pair not in combined or d < combined[pair]:
                combined[pair] = d
    if categories is None:
        ordered = [c for c in DEFAULT_CATEGORY_ORDER if c in seen]
        ordered += sorted(seen - set(ordered))
    else:
        ordered = list(categories)
    rows = [
        [combined.get(tuple(sorted((x, y)))) for y in ordered]
        for x in ordered
    ]
    return CategoryDistanceMatrix(ordered, rows)


def check_nested_pattern(
    matrix: CategoryDistanceMatrix, order: Sequence[str], start: int
) -> bool:
    """Test the nested band pattern along a category order.

    True iff for the order c0..cn every entry in row r equals ``start + r``:
    d(c0, ck) = start for all k > 0, d(c1, ck) = start + 1 for k > 1, and so
    on, each row constant and one higher than the last.
    """
    for category in order:
        if category not in matrix.labels:
            raise UnknownLabel(f"category {category!r} not in matrix")
    required = [
        (order[r], order[k], start + r)
        for r in range(len(order) - 1)
        for k in range(r + 1, len(order))
    ]
    for c1, c2, _ in required:
        if matrix.get(c1, c2) is None:
            raise MissingEntry(f"no entry for pair ({c1}, {c2})")
    return all(matrix.get(c1, c2) == expected for c1, c2, expected in required)


@dataclass(frozen=True)
class ComplexityReport:
    """Root heights per tree, their maximum, and the trees over the bound."""

    per_tree: tuple[tuple[int, int], ...]  # (tree index, root height)
    max_height: int
    bound: int
    exceeding: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "per_tree": [{"tree": i, "height": h} for i, h in self.per_tree],
            "max_height": self.max_height,
            "bound": self.bound,
            "exceeding": list(self.exceeding),
        }


def complexity(corpus: Sequence[PhraseTree], bound: int = 12) -> ComplexityReport:
    """Sentence complexity as root height, flagged against a configurable bound.

    The default bound of 12 is a rough working ceiling for natural sentences,
    not an assertion; trees above it are listed, never rejected.
    """
    per_tree = []
    for index, tree in enumerate(corpus):
        heights = assign_heights(tree)
        per_tree.append((index, heights[tree.root.id]))
    max_height = max((h for _, h in per_tree), default=0)
    exceeding = tuple(i for i, h in per_tree if h > bound)
    return ComplexityReport(tuple(per_tree), max_height, bound, exceeding)
