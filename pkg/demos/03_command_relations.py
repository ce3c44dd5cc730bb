"""Dominance, c-command, cu-command, and government on worked trees.

The structural definition of c-command (the first branching node above A
dominates B) coincides, for nodes at equal height, with a purely metric one:
B lies at minimum positive ultrametric distance from A.  Government then
needs only a governor category plus mutual closest-peer membership.
"""

from ultratree import (
    GovernorPolicy,
    c_command_matrix,
    cu_command_matrix,
    cu_domain,
    dominance_matrix,
    government_matrix,
    parse_tree,
    random_theorem_suite,
    theorem_check,
)

CLAUSE = "(S (NP-S (N-S John)) (AUX must) (VP (V eat) (NP-E (Det the) (N-E dog))))"
FOUR_LEAVES = "(H (F (W A) (E (W B) (W C))) (W D))"

if __name__ == "__main__":
    print(__doc__)

    clause = parse_tree(CLAUSE)
    print("dominance over the nine-node clause:")
    print(dominance_matrix(clause).to_csv())

    tree = parse_tree(FOUR_LEAVES)
    print("c-command over the four leaves:")
    print(c_command_matrix(tree).to_csv())
    print("cu-command over the same leaves:")
    print(cu_command_matrix(tree).to_csv())

    a = tree.leaves[0]
    domain = cu_domain(tree, a.id)
    words = {n.id: n.word for n in tree.leaves}
    print(f"cu-domain of {a.word}:")
    print("  distances:", {words[i]: d for i, d in sorted(domain.distance_set.items())})
    print("  members:  ", sorted(words[i] for i in domain.members))

    print("\ndisagreements on this tree:", theorem_check(tree, nodes="all"))
    report = random_theorem_suite(seed=7, trees=500, max_leaves=10)
    print(f"random sweep: {report['trees_tested']} trees, "
          f"{len(report['disagreements'])} disagreements")

    vp = parse_tree("(VP (V ate) (N dogs))")
    print("\ngovernment in (VP (V ate) (N dogs)) with governors {V}:")
    print(government_matrix(vp, GovernorPolicy(frozenset({"V"}))).to_csv())
