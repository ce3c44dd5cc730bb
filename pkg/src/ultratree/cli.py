"""Command-line interface.

Every analysis is reachable as a subcommand over tree files and JSON
documents.  Exit codes separate outcomes so pipelines can branch on them:

* 0: the analysis ran and found nothing wrong,
* 1: the analysis ran and found violations (failed axioms, theorem
  disagreements, a failed pattern check, trees over the complexity bound),
* 2: the input could not be read or parsed.

Tree files hold one bracketed tree per line; ``#`` starts a comment line and
blank lines are ignored.  Matrix documents are JSON objects with ``labels``
and ``rows``.  Output is deterministic: identical inputs (and seeds) produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import data as bundled_data
from .command import (
    GovernorPolicy,
    c_command_matrix,
    cu_command_matrix,
    government_matrix,
    label_disagreements,
    random_theorem_suite,
    theorem_check,
)
from .errors import UltratreeError
from .features import (
    FeatureTable,
    build_feature_matrix,
    compare_feature_vs_ultrametric,
    determinant,
    feature_distance,
    matrix_rank,
    pauli_assembly,
)
from .hierarchy import Chain, PartialOrder, Strategy, check_downset, check_language
from .lexdist import check_nested_pattern, complexity, min_distance_matrix
from .matrix import CategoryDistanceMatrix, DistanceMatrix
from .trees import dominance_matrix, parse_tree_file
from .ultrametric import (
    ViolationReport,
    all_triangles,
    check_metric,
    check_ultrametric,
    leaf_matrix,
    xbar_template,
)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_INPUT_ERROR = 2

# Which public operations each subcommand exercises (directly or through its
# pipeline).  tests/test_cli.py checks this table covers the whole API.
COMMAND_OPERATIONS = {
    "matrix": (
        "parse_tree",
        "parse_tree_file",
        "assign_heights",
        "lca",
        "leaf_matrix",
        "xbar_template",
    ),
    "check": ("leaf_matrix", "check_metric", "check_ultrametric"),
    "triangles": ("classify_triangle", "all_triangles"),
    "dominance": ("dominates", "dominance_matrix"),
    "ccommand": ("c_command", "c_command_matrix", "first_branching_ancestor"),
    "cucommand": ("cu_domain", "cu_command", "cu_command_matrix", "same_height_distance"),
    "theorem": ("theorem_check",),
    "govern": ("governs", "government_matrix"),
    "mindist": (
        "tree_category_minima",
        "min_distance_matrix",
        "check_nested_pattern",
        "load_category_corpus",
    ),
    "complexity": ("complexity",),
    "features": (
        "build_feature_matrix",
        "determinant",
        "matrix_rank",
        "pauli_assembly",
        "feature_distance",
        "compare_feature_vs_ultrametric",
        "load_category_corpus",
    ),
    "hierarchy": (
        "check_strategy",
        "check_language",
        "check_downset",
        "load_berlin_kay_order",
    ),
    "randtest": (
        "random_tree",
        "random_theorem_suite",
        "theorem_check",
        "serialize_tree",
        "enumerate_binary_trees",
    ),
}


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _emit_json(obj) -> None:
    _emit(json.dumps(obj, indent=2))


def _csv_rows(rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def _emit_matrices(matrices, fmt: str, single: bool = False) -> None:
    if fmt == "json":
        if single:
            _emit_json(matrices[0].to_json_dict())
        else:
            _emit_json([m.to_json_dict() for m in matrices])
    else:
        _emit("\n".join(m.to_csv() for m in matrices))


def _load_matrix(path: str) -> DistanceMatrix:
    with open(path, encoding="utf-8") as handle:
        return DistanceMatrix.from_json_dict(json.load(handle))


def _split_csv_flag(value: str) -> list[str]:
    return [part for part in value.split(",") if part]


# -- subcommand handlers -----------------------------------------------------

def _cmd_matrix(args) -> int:
    if args.xbar:
        _emit_matrices([xbar_template(args.i)], args.format, single=True)
        return EXIT_OK
    if not args.file:
        raise UltratreeError("matrix needs a tree file or --xbar")
    trees = parse_tree_file(args.file)
    _emit_matrices([leaf_matrix(t) for t in trees], args.format)
    return EXIT_OK


def _collect_checks(matrices) -> list[dict]:
    rows = []
    for index, matrix in enumerate(matrices):
        report = ViolationReport.merge(check_metric(matrix), check_ultrametric(matrix))
        for item in report.to_json_list():
            rows.append({"tree": index, **item})
    return rows


def _cmd_check(args) -> int:
    if args.matrix:
        matrices = [_load_matrix(args.matrix)]
    elif args.file:
        matrices = [leaf_matrix(t) for t in parse_tree_file(args.file)]
    else:
        raise UltratreeError("check needs a tree file or --matrix")
    violations = _collect_checks(matrices)
    if args.matrix:
        for item in violations:
            item.pop("tree")
    if args.format == "json":
        _emit_json(violations)
    else:
        _emit(
            _csv_rows(
                [["tree", "axiom", "indices"]]
                + [
                    [v.get("tree", 0), v["axiom"], " ".join(map(str, v["indices"]))]
                    for v in violations
                ]
            )
        )
    return EXIT_VIOLATIONS if violations else EXIT_OK


def _cmd_triangles(args) -> int:
    if args.xbar:
        matrices = [xbar_template(args.i)]
    elif args.matrix:
        matrices = [_load_matrix(args.matrix)]
    elif args.file:
        matrices = [leaf_matrix(t) for t in parse_tree_file(args.file)]
    else:
        raise UltratreeError("triangles needs a tree file, --matrix, or --xbar")
    records = []
    for index, matrix in enumerate(matrices):
        for (x, y, z), cls in all_triangles(matrix):
            records.append(
                {"tree": index, "vertices": [x, y, z], **cls.to_json_dict()}
            )
    if args.format == "json":
        _emit_json(records)
    else:
        _emit(
            _csv_rows(
                [["tree", "vertices", "kind", "sides", "base"]]
                + [
                    [
                        r["tree"],
                        " ".join(r["vertices"]),
                        r["kind"],
                        " ".join(map(str, r["sides"])),
                        "" if r["base"] is None else r["base"],
                    ]
                    for r in records
                ]
            )
        )
    return EXIT_OK


def _relation_command(args, build) -> int:
    trees = parse_tree_file(args.file)
    _emit_matrices([build(t) for t in trees], args.format)
    return EXIT_OK


def _cmd_dominance(args) -> int:
    return _relation_command(args, dominance_matrix)


def _cmd_ccommand(args) -> int:
    return _relation_command(args, lambda t: c_command_matrix(t, nodes=args.nodes))


def _cmd_cucommand(args) -> int:
    return _relation_command(args, lambda t: cu_command_matrix(t, nodes=args.nodes))


def _cmd_govern(args) -> int:
    policy = GovernorPolicy(frozenset(_split_csv_flag(args.governors)))
    return _relation_command(
        args, lambda t: government_matrix(t, policy=policy, nodes=args.nodes)
    )


def _cmd_theorem(args) -> int:
    trees = parse_tree_file(args.file)
    disagreements = []
    for tree in trees:
        found = theorem_check(tree, nodes=args.nodes)
        disagreements.extend(label_disagreements(tree, found))
    report = {"trees_tested": len(trees), "disagreements": disagreements}
    _emit_json(report)
    return EXIT_VIOLATIONS if disagreements else EXIT_OK


def _cmd_mindist(args) -> int:
    if args.file:
        corpus = parse_tree_file(args.file)
    else:
        corpus = bundled_data.load_category_corpus()
    order = _split_csv_flag(args.order) if args.order else None
    matrix = min_distance_matrix(corpus, categories=order)
    if args.i is None:
        if args.format == "json":
            _emit_json(matrix.to_json_dict())
        else:
            _emit(matrix.to_csv())
        return EXIT_OK
    pattern_order = order if order else list(matrix.labels)
    matches = check_nested_pattern(matrix, pattern_order, args.i)
    _emit_json(
        {
            "matrix": matrix.to_json_dict(),
            "pattern_order": pattern_order,
            "pattern_start": args.i,
            "pattern_matches": matches,
        }
    )
    return EXIT_OK if matches else EXIT_VIOLATIONS


def _cmd_complexity(args) -> int:
    corpus = parse_tree_file(args.file)
    report = complexity(corpus, bound=args.bound)
    if args.format == "json":
        _emit_json(report.to_json_dict())
    else:
        _emit(
            _csv_rows(
                [["tree", "height", "over_bound"]]
                + [
                    [i, h, int(i in report.exceeding)]
                    for i, h in report.per_tree
                ]
            )
        )
    return EXIT_VIOLATIONS if report.exceeding else EXIT_OK


def _cmd_features(args) -> int:
    table = FeatureTable()
    sign = build_feature_matrix(table, ap_value=args.ap)
    assembled = pauli_assembly()
    entries = [[int(z.real) for z in row] for row in assembled]
    imag_zero = all(z.imag == 0 for row in assembled for z in row)
    if args.matrix:
        with open(args.matrix, encoding="utf-8") as handle:
            distances = CategoryDistanceMatrix.from_json_dict(json.load(handle))
    else:
        distances = min_distance_matrix(bundled_data.load_category_corpus())
    comparison = compare_feature_vs_ultrametric(table, distances)
    positive = sum(1 for row in sign.entries for v in row if v > 0)
    report = {
        "feature_matrix": sign.to_json_dict(),
        "determinant": determinant(sign),
        "rank": matrix_rank(sign),
        "positive_entries": positive,
        "negative_entries": sign.size * sign.size - positive,
        "pauli_assembly_real": imag_zero,
        "pauli_assembly_matches": entries == [list(r) for r in sign.entries],
        "feature_distances": [
            {
                "pair": [c1, c2],
                "distance": feature_distance(table, c1, c2),
            }
            for i, c1 in enumerate(table.categories)
            for c2 in table.categories[i + 1 :]
        ],
        "comparison": comparison,
    }
    _emit_json(report)
    return EXIT_OK


def _cmd_hierarchy(args) -> int:
    with open(args.file, encoding="utf-8") as handle:
        document = json.load(handle)
    kind = document.get("kind")
    if kind == "language":
        chain = Chain(tuple(document["chain"])) if "chain" in document else Chain()
        strategies = [
            Strategy(
                name=s.get("name", f"strategy{i}"),
                covered=frozenset(s["covered"]),
                primary=bool(s.get("primary", False)),
            )
            for i, s in enumerate(document["strategies"])
        ]
        violations = check_language(chain, strategies)
        _emit_json([v.to_json_dict() for v in violations])
        return EXIT_VIOLATIONS if violations else EXIT_OK
    if kind == "downset":
        if "order" in document:
            order = PartialOrder.from_json_dict(document["order"])
        else:
            order = bundled_data.load_berlin_kay_order()
        closed = check_downset(order, document["inventory"])
        _emit_json({"inventory": sorted(document["inventory"]), "downward_closed": closed})
        return EXIT_OK if closed else EXIT_VIOLATIONS
    raise UltratreeError("hierarchy document needs \"kind\": \"language\" or \"downset\"")


def _cmd_randtest(args) -> int:
    if args.exhaustive_leaves is not None:
        from .trees import enumerate_binary_trees

        disagreements = []
        tested = 0
        for leaf_count in range(1, args.exhaustive_leaves + 1):
            for tree in enumerate_binary_trees(leaf_count):
                tested += 1
                found = theorem_check(tree, nodes=args.nodes)
                disagreements.extend(label_disagreements(tree, found))
        report = {"trees_tested": tested, "disagreements": disagreements}
    else:
        report = random_theorem_suite(
            seed=args.seed,
            trees=args.trees,
            max_leaves=args.max_leaves,
            arity=args.arity,
            nodes=args.nodes,
        )
    _emit_json(report)
    if report["disagreements"] and args.counterexamples:
        with open(args.counterexamples, "w", encoding="utf-8") as handle:
            json.dump(report["disagreements"], handle, indent=2)
    return EXIT_VIOLATIONS if report["disagreements"] else EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ultratree",
        description="Ultrametric distance structure on syntactic phrase trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("matrix", help="leaf distance matrices from trees, or the Spec/X/YP template")
    p.add_argument("file", nargs="?", help="tree file (one bracketed tree per line)")
    p.add_argument("--xbar", action="store_true", help="emit the Spec/X/YP template instead")
    p.add_argument("--i", type=int, default=0, help="head height for --xbar")
    add_format(p)
    p.set_defaults(handler=_cmd_matrix)

    p = sub.add_parser("check", help="metric and ultrametric axiom checks")
    p.add_argument("file", nargs="?", help="tree file")
    p.add_argument("--matrix", help="JSON distance matrix to check directly")
    add_format(p)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("triangles", help="classify every label triple")
    p.add_argument("file", nargs="?", help="tree file")
    p.add_argument("--matrix", help="JSON distance matrix")
    p.add_argument("--xbar", action="store_true")
    p.add_argument("--i", type=int, default=0)
    add_format(p)
    p.set_defaults(handler=_cmd_triangles)

    p = sub.add_parser("dominance", help="dominance matrix over all nodes")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(handler=_cmd_dominance)

    p = sub.add_parser("ccommand", help="c-command matrix")
    p.add_argument("file")
    p.add_argument("--nodes", choices=("leaves", "all"), default="leaves")
    add_format(p)
    p.set_defaults(handler=_cmd_ccommand)

    p = sub.add_parser("cucommand", help="cu-command matrix")
    p.add_argument("file")
    p.add_argument("--nodes", choices=("leaves", "all"), default="leaves")
    add_format(p)
    p.set_defaults(handler=_cmd_cucommand)

    p = sub.add_parser("theorem", help="compare c-command with cu-command per tree")
    p.add_argument("file")
    p.add_argument("--nodes", choices=("leaves", "all"), default="leaves")
    p.set_defaults(handler=_cmd_theorem)

    p = sub.add_parser("govern", help="government matrix under a governor policy")
    p.add_argument("file")
    p.add_argument("--governors", default="V,P", help="comma-separated governor categories")
    p.add_argument("--nodes", choices=("leaves", "all"), default="all")
    add_format(p)
    p.set_defaults(handler=_cmd_govern)

    p = sub.add_parser("mindist", help="minimum category distances over a corpus")
    p.add_argument("file", nargs="?", help="tree file (defaults to the bundled corpus)")
    p.add_argument("--order", help="comma-separated category order")
    p.add_argument("--i", type=int, default=None, help="also test the nested band pattern starting here")
    add_format(p)
    p.set_defaults(handler=_cmd_mindist)

    p = sub.add_parser("complexity", help="root heights against a bound")
    p.add_argument("file")
    p.add_argument("--bound", type=int, default=12)
    add_format(p)
    p.set_defaults(handler=_cmd_complexity)

    p = sub.add_parser("features", help="the category feature matrix and its properties")
    p.add_argument("--matrix", help="JSON category distance matrix to compare against")
    p.add_argument("--ap", type=int, default=-1, choices=(-1, 1), help="the free adjective/preposition cell")
    p.set_defaults(handler=_cmd_features)

    p = sub.add_parser("hierarchy", help="accessibility-hierarchy or down-set checks")
    p.add_argument("file", help='JSON document with "kind": "language" or "downset"')
    p.set_defaults(handler=_cmd_hierarchy)

    p = sub.add_parser("randtest", help="seeded random (or exhaustive) theorem sweeps")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trees", type=int, default=1000)
    p.add_argument("--max-leaves", type=int, default=10)
    p.add_argument("--arity", default="mixed:4")
    p.add_argument("--nodes", choices=("leaves", "all"), default="leaves")
    p.add_argument("--exhaustive-leaves", type=int, default=None,
                   help="sweep all binary shapes up to this many leaves instead of sampling")
    p.add_argument("--counterexamples", help="write disagreements to this JSON file")
    p.set_defaults(handler=_cmd_randtest)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (UltratreeError, OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def main() -> None:
    sys.exit(run())
