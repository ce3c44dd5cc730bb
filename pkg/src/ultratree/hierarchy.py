"""Linguistic partial-order hierarchies: relativization strategies and color terms.

Two classic cross-linguistic orderings are validated here.  The noun-phrase
accessibility hierarchy SU > DO > IO > OBL > GEN > OCOMP constrains
relative-clause forming strategies: each strategy must cover a contiguous
segment, a language needs a primary strategy, and a primary strategy must
run all the way up to subjects.  Color-term inventories are validated as
down-sets of a partial order (the Berlin-Kay ordering ships as editable data;
any order can be supplied).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CyclicOrder, UnknownLabel

ACCESSIBILITY_HIERARCHY = ("SU", "DO", "IO", "OBL", "GEN", "OCOMP")

AHC1 = "AHC1"  # some strategy must reach subjects
AHC2 = "AHC2"  # a strategy covers a contiguous segment
PRC1 = "PRC1"  # a language has a primary strategy
PRC2 = "PRC2"  # a primary strategy covers everything above its low point


@dataclass(frozen=True)
class Chain:
    """A total order of grammatical positions, most accessible first."""

    elements: tuple[str, ...] = ACCESSIBILITY_HIERARCHY

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("chain elements must be unique")

    def position(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise UnknownLabel(f"label {label!r} not on the chain") from None


@dataclass(frozen=True)
class Strategy:
    """A relative-clause forming strategy and the positions it covers."""

    name: str
    covered: frozenset[str]
    primary: bool = False

    def __post_init__(self):
        object.__setattr__(self, "covered", frozenset(self.covered))


@dataclass(frozen=True)
class ConstraintViolation:
    constraint: str
    detail: str

    def to_json_dict(self) -> dict:
        return {"constraint": self.constraint, "detail": self.detail}


def check_strategy(chain: Chain, strategy: Strategy) -> list[ConstraintViolation]:
    """Per-strategy constraints: contiguity, and subject reach when primary.

    A covered set that skips positions (or covers none) violates the
    contiguity constraint; a primary strategy whose coverage is not a prefix
    of the chain starting at the most accessible position violates the
    primary-reach constraint.
    """
    positions = sorted(chain.position(label) for label in strategy.covered)
    violations: list[ConstraintViolation] = []
    if not positions:
        violations.append(
            ConstraintViolation(AHC2, f"strategy {strategy.name!r} covers no positions")
        )
    elif positions[-1] - positions[0] + 1 != len(positions):
        have = set(positions)
        gap = next(
            chain.elements[p]
            for p in range(positions[0], positions[-1])
            if p not in have
        )
        violations.append(
            ConstraintViolation(
                AHC2,
                f"strategy {strategy.name!r} skips {gap} inside its segment",
            )
        )
    if strategy.primary:
        is_prefix = bool(positions) and positions[0] == 0 and positions == list(
            range(len(positions))
        )
        if not is_prefix:
            violations.append(
                ConstraintViolation(
                    PRC2,
                    f"primary strategy {strategy.name!r} does not cover every "
                    f"position from {chain.elements[0]} down",
                )
            )
    return violations


def check_language(chain: Chain, strategies: Sequence[Strategy]) -> list[ConstraintViolation]:
    """Language-level constraints over a set of strategies.

    Aggregates every per-strategy violation, then checks that some strategy
    relativizes the top of the chain and that a primary strategy exists.
    """
    violations: list[ConstraintViolation] = []
    for strategy in strategies:
        violations.extend(check_strategy(chain, strategy))
    top = chain.elements[0]
    if not any(top in strategy.covered for strategy in strategies):
        violations.append(
            ConstraintViolation(AHC1, f"no strategy relativizes {top}")
        )
    if not any(strategy.primary for strategy in strategies):
        violations.append(
            ConstraintViolation(PRC1, "language has no primary strategy")
        )
    return violations


@dataclass(frozen=True)
class PartialOrder:
    """A finite strict partial order given by nodes and (earlier, later) edges."""

    nodes: frozenset[str]
    edges: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(
            self, "edges", frozenset((a, b) for a, b in self.edges)
        )

    @classmethod
    def from_json_dict(cls, data: dict) -> "PartialOrder":
        return cls(frozenset(data["nodes"]), frozenset(map(tuple, data["edges"])))

    def to_json_dict(self) -> dict:
        return {
            "nodes": sorted(self.nodes),
            "edges": sorted(list(edge) for edge in self.edges),
        }

    def validate(self) -> None:
        for a, b in self.edges:
            for endpoint in (a, b):
                if endpoint not in self.nodes:
                    raise UnknownLabel(f"edge endpoint {endpoint!r} not a node")
        # Kahn's algorithm; leftover nodes mean a cycle.
        indegree = {node: 0 for node in self.nodes}
        for _, b in self.edges:
            indegree[b] += 1
        queue = deque(node for node, d in indegree.items() if d == 0)
        seen = 0
        while queue:
            node = queue.popleft()
            seen += 1
            for a, b in self.edges:
                if a == node:
                    indegree[b] -= 1
                    if indegree[b] == 0:
                        queue.append(b)
        if seen != len(self.nodes):
            raise CyclicOrder("the edge set contains a cycle")

    def predecessors(self, label: str) -> frozenset[str]:
        """All nodes strictly below ``label`` in the transitive closure."""
        if label not in self.nodes:
            raise UnknownLabel(f"label {label!r} not a node")
        incoming: dict[str, set[str]] = {node: set() for node in self.nodes}
        for a, b in self.edges:
            incoming[b].add(a)
        out: set[str] = set()
        queue = deque(incoming[label])
        while queue:
            node = queue.popleft()
            if node not in out:
                out.add(node)
                queue.extend(incoming[node])
        return frozenset(out)


def check_downset(order: PartialOrder, inventory: Iterable[str]) -> bool:
    """Whether an inventory is downward closed under the partial order.

    Every predecessor of a member must itself be a member; the empty
    inventory and the full node set are trivially closed.
    """
    order.validate()
    members = set(inventory)
    for label in members:
        if label not in order.nodes:
            raise UnknownLabel(f"inventory label {label!r} not a node")
    return all(order.predecessors(label) <= members for label in members)
