"""Triangles in an ultrametric, and why binary branching kills equilaterals.

Every triple of leaves yields a triangle whose two largest sides are equal.
An equilateral triple needs three leaves meeting at one node, which needs a
node with three children, so strictly binary trees admit none.  The
specifier/head/complement template makes the same point structurally: its
triangle is isosceles at every head height.
"""

from ultratree import (
    TriangleKind,
    all_triangles,
    classify_triangle,
    enumerate_binary_trees,
    leaf_matrix,
    parse_tree,
    xbar_template,
)

if __name__ == "__main__":
    print(__doc__)

    balanced = leaf_matrix(parse_tree("(S (X (W A) (W M)) (Y (W J) (W H)))"))
    flat = leaf_matrix(parse_tree("(S (W A) (W M) (W J) (W H))"))

    print("balanced tree triangles:")
    for vertices, cls in all_triangles(balanced):
        print(f"  {vertices}: {cls.kind.value}, sides {cls.sides}, base {cls.base}")

    print("flat 4-ary tree triangles:")
    for vertices, cls in all_triangles(flat):
        print(f"  {vertices}: {cls.kind.value}, sides {cls.sides}")

    # exhaustive check over every binary shape with up to 6 leaves
    equilaterals = 0
    shapes = 0
    for leaf_count in range(3, 7):
        for tree in enumerate_binary_trees(leaf_count):
            shapes += 1
            for _, cls in all_triangles(leaf_matrix(tree)):
                if cls.kind is TriangleKind.EQUILATERAL:
                    equilaterals += 1
    print(f"\n{shapes} binary shapes with 3..6 leaves: {equilaterals} equilateral triples")

    print("\nSpec/X/YP template by head height:")
    for i in range(4):
        template = xbar_template(i)
        cls = classify_triangle(template, "Spec", "X", "YP")
        print(f"  i={i}: sides {cls.sides} -> {cls.kind.value} (base {cls.base})")
