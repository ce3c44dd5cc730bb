"""Leaf distance matrices, metric/ultrametric axiom checks, and triangles.

The distance between two leaves is the minimum branching height of their
lowest common ancestor.  Matrices built this way are always ultrametric:
every triangle is isosceles (small base, two equal long sides) or
equilateral, and strictly binary branching rules the equilateral case out.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import DuplicateVertex, TooFewLabels
from .matrix import DistanceMatrix
from .trees import PhraseTree, assign_heights, lca

AXIOM_ZERO_DIAGONAL = "zero_diagonal"
AXIOM_POSITIVITY = "positivity"
AXIOM_SYMMETRY = "symmetry"
AXIOM_TRIANGLE = "triangle_inequality"
AXIOM_ULTRAMETRIC = "ultrametric"


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance; indices point into the matrix labels."""

    axiom: str
    indices: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"axiom": self.axiom, "indices": list(self.indices)}


@dataclass(frozen=True)
class ViolationReport:
    metric_violations: tuple[Violation, ...] = ()
    ultrametric_violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.metric_violations and not self.ultrametric_violations

    def to_json_list(self) -> list[dict]:
        return [
            v.to_json_dict()
            for v in (*self.metric_violations, *self.ultrametric_violations)
        ]

    @staticmethod
    def merge(*reports: "ViolationReport") -> "ViolationReport":
        metric: list[Violation] = []
        ultra: list[Violation] = []
        for report in reports:
            metric.extend(report.metric_violations)
            ultra.extend(report.ultrametric_violations)
        return ViolationReport(tuple(metric), tuple(ultra))


class TriangleKind(str, Enum):
    EQUILATERAL = "equilateral"
    ISOSCELES = "isosceles"
    VIOLATING = "violating"


@dataclass(frozen=True)
class TriangleClass:
    """Classified triangle: sides sorted ascending, base set when isosceles."""

    kind: TriangleKind
    sides: tuple[int, int, int]
    base: int | None = None

    def to_json_dict(self) -> dict:
        return {"kind": self.kind.value, "sides": list(self.sides), "base": self.base}


def leaf_matrix(tree: PhraseTree, heights: dict[int, int] | None = None) -> DistanceMatrix:
    """Pairwise leaf distances: entry(x, y) is the height of lca(x, y).

    Labels are the leaf words in left-to-right order; duplicated words get a
    positional ``#k`` suffix so the matrix stays well defined for sentences
    with repeated words.
    """
    if heights is None:
        heights = assign_heights(tree)
    leaves = tree.leaves
    labels = tree.leaf_labels()
    n = len(leaves)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d = heights[lca(tree, leaves[i].id, leaves[j].id)]
            rows[i][j] = d
            rows[j][i] = d
    return DistanceMatrix(labels, rows)


def check_metric(matrix: DistanceMatrix) -> ViolationReport:
    """Scan the four measure axioms: zero diagonal, positivity, symmetry, triangle.

    The triangle scan reports canonical triples ``(x, z, y)`` with x < y and
    ``d(x,y) > d(x,z) + d(z,y)``.
    """
    m = matrix.entries
    n = matrix.size
    violations: list[Violation] = []
    for i in range(n):
        if m[i][i] != 0:
            violations.append(Violation(AXIOM_ZERO_DIAGONAL, (i,)))
    for i in range(n):
        for j in range(n):
            if i != j and m[i][j] <= 0:
                violations.append(Violation(AXIOM_POSITIVITY, (i, j)))
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                violations.append(Violation(AXIOM_SYMMETRY, (i, j)))
    for x in range(n):
        for y in range(x + 1, n):
            for z in range(n):
                if z == x or z == y:
                    continue
                if m[x][y] > m[x][z] + m[z][y]:
                    violations.append(Violation(AXIOM_TRIANGLE, (x, z, y)))
    return ViolationReport(metric_violations=tuple(violations))


def check_ultrametric(matrix: DistanceMatrix) -> ViolationReport:
    """Scan the strengthened triangle condition d(x,y) <= max(d(x,z), d(z,y)).

    Every violating canonical triple ``(x, z, y)`` with x < y is listed; an
    empty report certifies the matrix ultrametric.
    """
    m = matrix.entries
    n = matrix.size
    violations: list[Violation] = []
    for x in range(n):
        for y in range(x + 1, n):
            for z in range(n):
                if z == x or z == y:
                    continue
                if m[x][y] > max(m[x][z], m[z][y]):
                    violations.append(Violation(AXIOM_ULTRAMETRIC, (x, z, y)))
    return ViolationReport(ultrametric_violations=tuple(violations))


def classify_triangle(matrix: DistanceMatrix, x: str, y: str, z: str) -> TriangleClass:
    """Classify the triangle on three distinct labels.

    Equilateral: all sides equal.  Isosceles: the two largest sides equal and
    a strictly smaller base.  Violating: the two largest sides differ, which
    cannot happen in a true ultrametric.
    """
    if len({x, y, z}) != 3:
        raise DuplicateVertex(f"triangle vertices must be distinct, got {(x, y, z)}")
    sides = tuple(sorted((matrix.entry(x, y), matrix.entry(x, z), matrix.entry(y, z))))
    if sides[0] == sides[2]:
        return TriangleClass(TriangleKind.EQUILATERAL, sides)
    if sides[1] == sides[2]:
        return TriangleClass(TriangleKind.ISOSCELES, sides, base=sides[0])
    return TriangleClass(TriangleKind.VIOLATING, sides)


def all_triangles(matrix: DistanceMatrix) -> list[tuple[tuple[str, str, str], TriangleClass]]:
    """Classify every unordered label triple."""
    if matrix.size < 3:
        raise TooFewLabels(f"need at least 3 labels, got {matrix.size}")
    return [
        ((x, y, z), classify_triangle(matrix, x, y, z))
        for x, y, z in combinations(matrix.labels, 3)
    ]


def xbar_template(i: int) -> DistanceMatrix:
    """Specifier/head/complement distance template at head height ``i``.

    The specifier sits two levels above the head, the complement phrase one
    level above it, so the triangle is isosceles with base i+1 and never
    equilateral.
    """
    if i < 0:
        raise ValueError("template height must be non-negative")
    far = i + 2
    near = i + 1
    return DistanceMatrix(
        ("Spec", "X", "YP"),
        ((0, far, far), (far, 0, near), (far, near, 0)),
    )
