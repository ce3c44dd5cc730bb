"""Acceptance suite: one test per shipped criterion, exact tolerances.

Everything here is integer-exact; there are no floating-point comparisons.
The terminal summary prints one line per criterion (see conftest.py).
"""

import json
import time
from pathlib import Path

import pytest

from ultratree import (
    DistanceMatrix,
    FeatureTable,
    TriangleKind,
    all_triangles,
    build_feature_matrix,
    c_command_matrix,
    check_nested_pattern,
    check_ultrametric,
    classify_triangle,
    complexity,
    compare_feature_vs_ultrametric,
    determinant,
    dominance_matrix,
    enumerate_binary_trees,
    leaf_matrix,
    load_category_corpus,
    min_distance_matrix,
    parse_tree,
    pauli_assembly,
    random_theorem_suite,
    random_tree,
    serialize_tree,
    theorem_check,
    xbar_template,
)
from ultratree.cli import run
from ultratree.hierarchy import Chain, Strategy, check_language, check_strategy

from . import helpers as fx

ARTIFACT_DIR = Path(__file__).parent / "artifacts"


def _record_counterexamples(name: str, disagreements) -> None:
    ARTIFACT_DIR.mkdir(exist_ok=True)
    path = ARTIFACT_DIR / f"{name}.json"
    path.write_text(json.dumps(disagreements, indent=2, default=str))


def test_criterion_01_matrix_reproduction():
    """Fixture trees reproduce the six consistent 4-leaf matrices bit-exactly."""
    cases = [
        (fx.TREE_FIRST, fx.MATRIX_FIRST),
        (fx.TREE_SECOND, fx.MATRIX_SECOND),
        (fx.TREE_FOURTH, fx.MATRIX_FOURTH),
        (fx.TREE_FIFTH, fx.MATRIX_FIFTH),
        (fx.TREE_SEVENTH, fx.MATRIX_SEVENTH),
        (fx.TREE_EIGHTH, fx.MATRIX_EIGHTH),
    ]
    for text, expected in cases:
        matrix = leaf_matrix(parse_tree(text))
        assert matrix.labels == fx.LABELS_AMJH
        assert matrix.entries == expected


def test_criterion_02_erratum_detection(tmp_path):
    """The two inconsistent matrices are flagged on exactly the right triples,
    and the CLI exits 1 on both."""
    third = DistanceMatrix(fx.LABELS_AMJH, fx.MATRIX_THIRD_PRINTED)
    report = check_ultrametric(third)
    named = [
        tuple(fx.LABELS_AMJH[i] for i in v.indices)
        for v in report.ultrametric_violations
    ]
    assert named == [("M", "J", "H")]

    sixth = DistanceMatrix(fx.LABELS_AMJH, fx.MATRIX_SIXTH_PRINTED)
    report = check_ultrametric(sixth)
    named = [
        tuple(fx.LABELS_AMJH[i] for i in v.indices)
        for v in report.ultrametric_violations
    ]
    assert named == [("A", "M", "H"), ("A", "J", "H")]

    for name, matrix in (("third", third), ("sixth", sixth)):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(matrix.to_json_dict()))
        assert run(["check", "--matrix", str(path)]) == 1


def test_criterion_03_xbar_template():
    """Template at 0 is exact and stays isosceles (never equilateral) through 100."""
    assert xbar_template(0).entries == ((0, 2, 2), (2, 0, 1), (2, 1, 0))
    for i in range(0, 101):
        cls = classify_triangle(xbar_template(i), "Spec", "X", "YP")
        assert cls.kind is TriangleKind.ISOSCELES
        assert cls.base == i + 1
        assert cls.kind is not TriangleKind.EQUILATERAL


def test_criterion_04_no_equilateral_theorem():
    """Binary branching never yields an equilateral triple; any 3-ary node does."""
    started = time.monotonic()

    for leaf_count in range(3, 7):
        for tree in enumerate_binary_trees(leaf_count):
            for _, cls in all_triangles(leaf_matrix(tree)):
                assert cls.kind is not TriangleKind.EQUILATERAL

    for seed in range(1000):
        tree = random_tree(seed, 3 + seed % 10, "binary")  # 3..12 leaves
        for _, cls in all_triangles(leaf_matrix(tree)):
            assert cls.kind is not TriangleKind.EQUILATERAL

    wide_trees = 0
    for seed in range(400):
        tree = random_tree(10_000 + seed, 3 + seed % 10, "mixed:4")
        if not any(len(n.children) >= 3 for n in tree.nodes):
            continue
        wide_trees += 1
        kinds = [cls.kind for _, cls in all_triangles(leaf_matrix(tree))]
        assert TriangleKind.EQUILATERAL in kinds
    assert wide_trees >= 100

    assert time.monotonic() - started < 30.0


def test_criterion_05_dominance_matrix():
    """The nine-node clause reproduces all 81 dominance entries."""
    matrix = dominance_matrix(parse_tree(fx.TREE_DOMINANCE))
    assert matrix.labels == fx.DOMINANCE_LABELS
    got = tuple(tuple(int(v) for v in row) for row in matrix.entries)
    assert got == fx.DOMINANCE_EXPECTED


def test_criterion_06_command_theorem():
    """The worked 4-leaf example reproduces the c-command matrix, and
    c-command agrees with cu-command on every sweep; disagreements would be
    recorded and fail the suite."""
    tree = parse_tree(fx.TREE_CCOMMAND)
    matrix = c_command_matrix(tree)
    got = tuple(tuple(int(v) for v in row) for row in matrix.entries)
    assert matrix.labels == ("A", "B", "C", "D")
    assert got == fx.CCOMMAND_EXPECTED
    assert theorem_check(tree, nodes="all") == []

    exhaustive_failures = []
    for leaf_count in range(1, 7):
        for shape in enumerate_binary_trees(leaf_count):
            found = theorem_check(shape)
            if found:
                exhaustive_failures.append(
                    {"tree": serialize_tree(shape), "pairs": [vars(d) for d in found]}
                )
    if exhaustive_failures:
        _record_counterexamples("theorem_exhaustive", exhaustive_failures)
    assert exhaustive_failures == []

    report = random_theorem_suite(seed=7, trees=1000, max_leaves=10, arity="mixed:4")
    if report["disagreements"]:
        _record_counterexamples("theorem_random", report["disagreements"])
    assert report["trees_tested"] == 1000
    assert report["disagreements"] == []


def test_criterion_07_category_distances():
    """The bundled corpus reproduces the reference category matrix and the
    nested band pattern holds at 2 on the N, P, V, A order."""
    matrix = min_distance_matrix(load_category_corpus())
    assert matrix.labels == ("D", "N", "V", "A", "P")
    expected = {
        ("D", "N"): 1,
        ("D", "V"): 2,
        ("D", "A"): 2,
        ("D", "P"): 2,
        ("N", "V"): 2,
        ("N", "A"): 2,
        ("N", "P"): 2,
        ("V", "A"): 4,
        ("V", "P"): 3,
        ("A", "P"): 3,
    }
    for (c1, c2), value in expected.items():
        assert matrix.get(c1, c2) == value, (c1, c2)
        assert matrix.get(c2, c1) == value
    assert check_nested_pattern(matrix, ("N", "P", "V", "A"), 2) is True
    for wrong in (0, 1, 3, 4):
        assert check_nested_pattern(matrix, ("N", "P", "V", "A"), wrong) is False


def test_criterion_08_features():
    """Determinant vanishes, entries balance 8/8, the Pauli block assembly
    matches entrywise with zero imaginary parts, and no monotone relation
    links feature distances to the category matrix."""
    sign = build_feature_matrix()
    assert determinant(sign) == 0
    values = [v for row in sign.entries for v in row]
    assert values.count(1) == 8 and values.count(-1) == 8

    assembled = pauli_assembly()
    for i in range(4):
        for j in range(4):
            assert assembled[i][j].imag == 0.0
            assert int(assembled[i][j].real) == sign.entries[i][j]

    report = compare_feature_vs_ultrametric(
        FeatureTable(), min_distance_matrix(load_category_corpus())
    )
    assert report["monotone_relation"] is False


def test_criterion_09_complexity():
    """Root height equals the largest leaf-matrix entry across the random
    suites; the worked 4-leaf trees report heights 2 and 3."""
    assert complexity([parse_tree(fx.TREE_FIRST)]).max_height == 2
    assert complexity([parse_tree(fx.TREE_SECOND)]).max_height == 3
    for seed in range(500):
        tree = random_tree(seed, 1 + seed % 12, "mixed:4")
        report = complexity([tree])
        maximum = max(v for row in leaf_matrix(tree).entries for v in row)
        assert report.per_tree[0][1] == maximum
    for seed in range(500):
        tree = random_tree(777 + seed, 1 + seed % 12, "binary")
        report = complexity([tree])
        maximum = max(v for row in leaf_matrix(tree).entries for v in row)
        assert report.per_tree[0][1] == maximum


def test_criterion_10_hierarchy():
    """Exactly 21 contiguous coverings pass on the 6-element chain, and each
    violation fixture produces exactly its named constraint."""
    import itertools

    chain = Chain()
    accepted = 0
    for bits in itertools.product((0, 1), repeat=6):
        covered = frozenset(
            label for label, bit in zip(chain.elements, bits) if bit
        )
        if not check_strategy(chain, Strategy("s", covered)):
            accepted += 1
    assert accepted == 21

    gap = check_strategy(chain, Strategy("gap", frozenset({"SU", "IO"})))
    assert [v.constraint for v in gap] == ["AHC2"]

    no_subject_primary = check_strategy(
        chain, Strategy("low", frozenset({"DO", "IO"}), primary=True)
    )
    assert [v.constraint for v in no_subject_primary] == ["PRC2"]

    no_primary = check_language(
        chain, [Strategy("only", frozenset({"SU", "DO"}), primary=False)]
    )
    assert [v.constraint for v in no_primary] == ["PRC1"]
