"""Brute-force oracles shared across the test modules.

Everything here recomputes quantities by direct definition (materialized
twists, naive axiom checks), independent of the structural formulas the
package uses, so tests compare two genuinely different routes.
"""

from itertools import permutations

from twistwidth import DeltaMatroid


def brute_min_twist_width(d: DeltaMatroid) -> int:
    """Minimum width over all materialized twists."""
    return min(d.twist(a).width() for a in range(d.full_mask + 1))


def brute_axiom_holds(masks, n) -> bool:
    """Symmetric exchange checked set-theoretically, without bit tricks."""
    sets = [frozenset(i for i in range(n) if m >> i & 1) for m in masks]
    family = set(sets)
    for x in sets:
        for y in sets:
            for u in x ^ y:
                if not any(
                    x ^ {u, v} in family for v in x ^ y
                ):
                    return False
    return True


def all_minor_pairs(n):
    """All disjoint (delete, contract) mask pairs on n elements."""
    full = (1 << n) - 1
    for x in range(full + 1):
        rest = full & ~x
        y = rest
        while True:
            yield x, y
            if y == 0:
                break
            y = (y - 1) & rest


def interleavings(delete, contract):
    """Every order of single-element delete/contract operations."""
    ops = [("d", e) for e in delete] + [("c", e) for e in contract]
    return set(permutations(ops))


def apply_ops(d: DeltaMatroid, ops) -> DeltaMatroid:
    for kind, e in ops:
        d = d.delete(e) if kind == "d" else d.contract(e)
    return d
