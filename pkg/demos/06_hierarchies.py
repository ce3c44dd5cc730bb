"""Relativization strategies on the accessibility hierarchy, and color down-sets.

A relative-clause forming strategy covers positions on the chain
SU > DO > IO > OBL > GEN > OCOMP.  Valid coverage is contiguous; a primary
strategy must run all the way up to subjects.  Color-term inventories play
the analogous game on a partial order: a valid inventory is downward closed.
"""

from ultratree import (
    Chain,
    Strategy,
    check_downset,
    check_language,
    check_strategy,
    load_berlin_kay_order,
)

if __name__ == "__main__":
    print(__doc__)

    chain = Chain()
    print("chain:", " > ".join(chain.elements))

    cases = [
        Strategy("prefix", frozenset({"SU", "DO", "IO"}), primary=True),
        Strategy("gap", frozenset({"SU", "IO"})),
        Strategy("low primary", frozenset({"DO", "IO"}), primary=True),
        Strategy("tail", frozenset({"OBL", "GEN", "OCOMP"})),
    ]
    for strategy in cases:
        violations = check_strategy(chain, strategy)
        verdict = "ok" if not violations else "; ".join(
            f"{v.constraint}: {v.detail}" for v in violations
        )
        print(f"  {strategy.name:12} covers {sorted(strategy.covered)}: {verdict}")

    print("\nlanguage with no primary strategy:")
    for v in check_language(chain, [Strategy("only", frozenset({"SU", "DO"}))]):
        print(f"  {v.constraint}: {v.detail}")

    order = load_berlin_kay_order()
    print(f"\ncolor order: {len(order.nodes)} terms, {len(order.edges)} edges")
    inventories = [
        {"black", "white"},
        {"black", "white", "red"},
        {"black", "white", "red", "yellow"},
        {"black", "white", "blue"},
        {"red"},
    ]
    for inventory in inventories:
        closed = check_downset(order, inventory)
        print(f"  {sorted(inventory)}: {'valid stage' if closed else 'skips a predecessor'}")
