"""Structural command relations: c-command, cu-command, and government.

Both relations are restricted to node pairs at the same minimum height and
include the self pair.  C-command asks whether the first branching ancestor
of one node dominates the other; cu-command asks whether the other node lies
at minimum positive ultrametric distance.  On leaves the two always agree;
``theorem_check`` verifies that agreement tree by tree, and can extend the
comparison to internal nodes, where configurations exist that separate the
two relations (see the ``nodes`` argument).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import EmptyPolicy, HeightMismatch, NoBranchingAncestor
from .matrix import RelationMatrix
from .trees import PhraseTree, assign_heights, dominates, lca, random_tree, serialize_tree

DEFAULT_GOVERNOR_CATEGORIES = frozenset({"V", "P"})


@dataclass(frozen=True)
class GovernorPolicy:
    """The categories allowed to govern; there is no canonical inventory, so
    the set is caller configuration.  Verbs and prepositions by default."""

    governor_categories: frozenset[str] = DEFAULT_GOVERNOR_CATEGORIES

    def __post_init__(self):
        object.__setattr__(
            self, "governor_categories", frozenset(self.governor_categories)
        )


@dataclass(frozen=True)
class CuDomain:
    """Distances from a node to its height peers, and the closest of them.

    ``distance_set`` maps every node at the owner's height (owner included,
    at distance 0) to its ultrametric distance; ``members`` is the owner plus
    all peers attaining the minimum positive distance.
    """

    owner: int
    distance_set: Mapping[int, int]
    members: frozenset[int]


@dataclass(frozen=True)
class Disagreement:
    """A same-height pair on which exactly one of the two relations holds."""

    a: int
    b: int
    holds: str  # "c_command" or "cu_command"


def _heights_or(tree: PhraseTree, heights: dict[int, int] | None) -> dict[int, int]:
    return assign_heights(tree) if heights is None else heights


def _node_ids(tree: PhraseTree, nodes: str) -> list[int]:
    if nodes == "leaves":
        return [n.id for n in tree.leaves]
    if nodes == "all":
        return [n.id for n in tree.nodes]
    raise ValueError(f"nodes must be 'leaves' or 'all', got {nodes!r}")


def _node_labels(tree: PhraseTree, nodes: str) -> tuple[str, ...]:
    return tree.leaf_labels() if nodes == "leaves" else tree.node_labels()


def first_branching_ancestor(tree: PhraseTree, node_id: int) -> int:
    """Nearest strict ancestor with at least two children; unary nodes are skipped."""
    for ancestor in tree.ancestor_ids(node_id):
        if len(tree.node(ancestor).children) >= 2:
            return ancestor
    raise NoBranchingAncestor(f"no branching ancestor above node {node_id}")


def same_height_distance(
    tree: PhraseTree, a: int, b: int, heights: dict[int, int] | None = None
) -> int:
    """Ultrametric distance between two same-height nodes.

    The distance is the height climbed to their lowest common ancestor, so it
    is 0 exactly when a == b.
    """
    heights = _heights_or(tree, heights)
    tree.node(a)
    tree.node(b)
    if heights[a] != heights[b]:
        raise HeightMismatch(
            f"nodes sit at heights {heights[a]} and {heights[b]}"
        )
    return heights[lca(tree, a, b)] - heights[a]


def c_command(tree: PhraseTree, a: int, b: int, heights: dict[int, int] | None = None) -> bool:
    """Whether the first branching node strictly above ``a`` dominates ``b``.

    The relation includes the self pair, applies only between nodes at the
    same height, and requires that neither node dominate the other (vacuous
    at equal heights, since ancestors are strictly higher).
    """
    heights = _heights_or(tree, heights)
    tree.node(a)
    tree.node(b)
    if a == b:
        return True
    if heights[a] != heights[b]:
        return False
    if dominates(tree, a, b) or dominates(tree, b, a):
        return False
    return dominates(tree, first_branching_ancestor(tree, a), b)


def c_command_matrix(
    tree: PhraseTree, heights: dict[int, int] | None = None, nodes: str = "leaves"
) -> RelationMatrix:
    heights = _heights_or(tree, heights)
    ids = _node_ids(tree, nodes)
    entries = [[c_command(tree, a, b, heights) for b in ids] for a in ids]
    return RelationMatrix(_node_labels(tree, nodes), entries)


def cu_domain(tree: PhraseTree, a: int, heights: dict[int, int] | None = None) -> CuDomain:
    """Distances from ``a`` to its height peers and the set of closest ones.

    When ``a`` is alone at its height the domain is just ``{a}``.
    """
    heights = _heights_or(tree, heights)
    tree.node(a)
    peers = [n.id for n in tree.nodes if heights[n.id] == heights[a]]
    distance_set = {
        peer: same_height_distance(tree, a, peer, heights) for peer in peers
    }
    positive = [d for d in distance_set.values() if d > 0]
    members = {a}
    if positive:
        closest = min(positive)
        members.update(peer for peer, d in distance_set.items() if d == closest)
    return CuDomain(owner=a, distance_set=distance_set, members=frozenset(members))


def cu_command(tree: PhraseTree, a: int, b: int, heights: dict[int, int] | None = None) -> bool:
    return b in cu_domain(tree, a, _heights_or(tree, heights)).members


def cu_command_matrix(
    tree: PhraseTree, heights: dict[int, int] | None = None, nodes: str = "leaves"
) -> RelationMatrix:
    heights = _heights_or(tree, heights)
    ids = _node_ids(tree, nodes)
    domains = {a: cu_domain(tree, a, heights).members for a in ids}
    entries = [[b in domains[a] for b in ids] for a in ids]
    return RelationMatrix(_node_labels(tree, nodes), entries)


def theorem_check(
    tree: PhraseTree,
    heights: dict[int, int] | None = None,
    nodes: str = "leaves",
) -> list[Disagreement]:
    """Compare c-command against cu-command over same-height pairs.

    Returns every pair on which the relations disagree; an empty list means
    they coincide on this tree.  With ``nodes='leaves'`` (the default) the
    two provably coincide; ``nodes='all'`` also compares internal nodes,
    where a node alone at its height under its first branching ancestor can
    cu-command a distant peer it does not c-command.
    """
    heights = _heights_or(tree, heights)
    ids = _node_ids(tree, nodes)
    disagreements: list[Disagreement] = []
    for a in ids:
        members = cu_domain(tree, a, heights).members
        for b in ids:
            if heights[a] != heights[b]:
                continue
            c = c_command(tree, a, b, heights)
            cu = b in members
            if c != cu:
                disagreements.append(
                    Disagreement(a=a, b=b, holds="c_command" if c else "cu_command")
                )
    return disagreements


def label_disagreements(tree: PhraseTree, found: list[Disagreement]) -> list[dict]:
    """Render disagreements with readable node names (leaf word or node label)."""
    from .trees import disambiguate

    names = disambiguate(n.word if n.is_leaf else n.label for n in tree.nodes)
    labels = dict(zip((n.id for n in tree.nodes), names))
    return [
        {
            "tree": serialize_tree(tree),
            "a": labels[d.a],
            "b": labels[d.b],
            "relation": d.holds,
        }
        for d in found
    ]


def random_theorem_suite(
    seed: int,
    trees: int,
    max_leaves: int,
    arity: str = "mixed:4",
    nodes: str = "leaves",
) -> dict:
    """Run theorem_check over seeded random trees.

    Returns ``{"trees_tested": n, "disagreements": [...]}`` where each
    disagreement records the offending tree (bracketed), the node pair, and
    which relation held.  Deterministic for a fixed seed.
    """
    rng = random.Random(seed)
    disagreements: list[dict] = []
    for _ in range(trees):
        leaf_count = rng.randint(1, max_leaves)
        tree = random_tree(rng.randrange(2**32), leaf_count, arity)
        found = theorem_check(tree, nodes=nodes)
        disagreements.extend(label_disagreements(tree, found))
    return {"trees_tested": trees, "disagreements": disagreements}


def governs(
    tree: PhraseTree,
    a: int,
    b: int,
    policy: GovernorPolicy | None = None,
    heights: dict[int, int] | None = None,
) -> bool:
    """Government as mutual closest-peer membership by a governor category.

    ``a`` governs ``b`` iff a's label is a governor category, a != b, and
    each node lies in the other's cu-domain.  Self government is excluded.
    """
    policy = GovernorPolicy() if policy is None else policy
    if not policy.governor_categories:
        raise EmptyPolicy("governor policy has no categories")
    heights = _heights_or(tree, heights)
    if a == b:
        return False
    if tree.node(a).label not in policy.governor_categories:
        return False
    if heights[a] != heights[b]:
        return False
    return (
        b in cu_domain(tree, a, heights).members
        and a in cu_domain(tree, b, heights).members
    )


def government_matrix(
    tree: PhraseTree,
    policy: GovernorPolicy | None = None,
    heights: dict[int, int] | None = None,
    nodes: str = "all",
) -> RelationMatrix:
    heights = _heights_or(tree, heights)
    ids = _node_ids(tree, nodes)
    entries = [[governs(tree, a, b, policy, heights) for b in ids] for a in ids]
    return RelationMatrix(_node_labels(tree, nodes), entries)
