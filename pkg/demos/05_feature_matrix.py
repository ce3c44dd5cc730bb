"""The +/-N, +/-V feature system as a sign matrix, and its non-relation to distances.

Symmetrizing the category/feature table gives a 4x4 sign matrix with one
free cell (adjective/preposition).  Choosing -1 there balances the entries
eight against eight.  The matrix is singular, assembles exactly from 2x2
Pauli blocks, and fails to line up monotonically with the corpus distance
matrix in either direction.
"""

from ultratree import (
    FeatureTable,
    build_feature_matrix,
    compare_feature_vs_ultrametric,
    determinant,
    feature_distance,
    load_category_corpus,
    matrix_rank,
    min_distance_matrix,
    pauli_assembly,
)

if __name__ == "__main__":
    print(__doc__)

    table = FeatureTable()
    sign = build_feature_matrix(table)
    print("sign matrix:")
    print(sign.to_csv())
    values = [v for row in sign.entries for v in row]
    print(f"positive {values.count(1)}, negative {values.count(-1)}")
    print(f"determinant {determinant(sign)}, rank {matrix_rank(sign)}")

    assembled = pauli_assembly()
    real = [[int(z.real) for z in row] for row in assembled]
    imag_ok = all(z.imag == 0 for row in assembled for z in row)
    print(f"\nPauli block assembly matches: {real == [list(r) for r in sign.entries]}"
          f" (imaginary parts all zero: {imag_ok})")

    print("\nfeature Hamming distances:")
    cats = table.categories
    for i, c1 in enumerate(cats):
        for c2 in cats[i + 1:]:
            print(f"  {c1}-{c2}: {feature_distance(table, c1, c2)}")

    report = compare_feature_vs_ultrametric(
        table, min_distance_matrix(load_category_corpus())
    )
    print("\npair           feature  ultrametric")
    for pair in report["pairs"]:
        c1, c2 = pair["pair"]
        print(f"  {c1}-{c2:12} {pair['feature_distance']:7} {pair['ultrametric_distance']:12}")
    print("monotone map feature -> ultrametric:", report["monotone_feature_to_ultrametric"])
    print("monotone map ultrametric -> feature:", report["monotone_ultrametric_to_feature"])
