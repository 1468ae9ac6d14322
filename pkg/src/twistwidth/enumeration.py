"""Exhaustive generation of small delta-matroids and batch verification.

Candidate feasible families on n elements are bitmasks over the 2^n
subsets; the axiom is checked for all candidates at once with a vectorized
sweep over (X, Y, u) triples, so enumerating every delta-matroid on up to
four elements takes well under a second.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .core import DeltaMatroid, GroundSetError, find_axiom_violation
from .minors import is_obstructed
from .structure import (
    min_width_twist,
    is_twist_matroid_witness,
    is_twist_width_one_witness,
    rough_structure_witnesses,
    twist_width_formula,
)

MAX_ENUM_ELEMENTS = 4
CANONICAL_LABELS = ("e1", "e2", "e3", "e4")

THEOREM_TAGS = ("t2", "tt2", "tt", "tm1", "t1", "p1", "l1", "l2")


@dataclass
class EnumerationReport:
    """Outcome of one exhaustive verification run."""

    n: int
    total_families: int
    valid_count: int
    theorem: str
    checked: int
    failures: int
    first_counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0


@lru_cache(maxsize=None)
def _valid_family_masks(n: int) -> tuple[int, ...]:
    """Family bitmasks (over the 2^n subsets) passing the exchange axiom."""
    nsub = 1 << n
    total = 1 << nsub
    fams = np.arange(total, dtype=np.uint32)
    valid = np.ones(total, dtype=bool)
    valid[0] = False
    for x in range(nsub):
        for y in range(nsub):
            diff = x ^ y
            if not diff:
                continue
            has_pair = (fams >> x & 1).astype(bool) & (fams >> y & 1).astype(bool)
            for u in range(n):
                if not diff >> u & 1:
                    continue
                reach = 0
                for v in range(n):
                    if not diff >> v & 1:
                        continue
                    res = x ^ (1 << u) if v == u else x ^ (1 << u) ^ (1 << v)
                    reach |= 1 << res
                valid &= ~(has_pair & ((fams & reach) == 0))
    return tuple(int(f) for f in np.nonzero(valid)[0])


def _family_to_masks(fam: int):
    return [s for s in range(fam.bit_length()) if fam >> s & 1]


def enumerate_all(n: int, recheck: bool = False) -> Iterator[DeltaMatroid]:
    """Yield every delta-matroid on the canonical labels, in ascending
    family-bitmask order. ``recheck`` re-runs the scalar axiom checker on
    each emitted instance."""
    if not 1 <= n <= MAX_ENUM_ELEMENTS:
        raise GroundSetError(
            f"exhaustive enumeration supports 1 <= n <= {MAX_ENUM_ELEMENTS}"
        )
    labels = CANONICAL_LABELS[:n]
    for fam in _valid_family_masks(n):
        masks = _family_to_masks(fam)
        if recheck:
            assert find_axiom_violation(masks, n) is None
        yield DeltaMatroid(labels, masks, _trusted=True)


def count_all(n: int) -> int:
    if not 1 <= n <= MAX_ENUM_ELEMENTS:
        raise GroundSetError(
            f"exhaustive enumeration supports 1 <= n <= {MAX_ENUM_ELEMENTS}"
        )
    return len(_valid_family_masks(n))


# -- randomized instances -------------------------------------------------


def _gf2_nonsingular(rows: list[int]) -> bool:
    """Gaussian elimination over GF(2); rows are bitmask rows."""
    rows = list(rows)
    k = len(rows)
    rank = 0
    for col in range(k):
        bit = 1 << col
        pivot = next((i for i in range(rank, k) if rows[i] & bit), None)
        if pivot is None:
            return False
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(k):
            if i != rank and rows[i] & bit:
                rows[i] ^= rows[rank]
        rank += 1
    return True


def sample_with_empty_feasible(n: int, rng: random.Random) -> DeltaMatroid:
    """Random delta-matroid with the empty set feasible.

    Draws a random symmetric GF(2) matrix, takes the subsets indexing
    nonsingular principal submatrices as feasible family (a delta-matroid
    by Bouchet's representation theorem), then twists by a random feasible
    set to spread the family while keeping the empty set feasible.
    """
    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        mat[i][i] = rng.getrandbits(1)
        for j in range(i + 1, n):
            mat[i][j] = mat[j][i] = rng.getrandbits(1)
    masks = []
    for s in range(1 << n):
        idx = [i for i in range(n) if s >> i & 1]
        rows = [
            sum(mat[i][j] << c for c, j in enumerate(idx)) for i in idx
        ]
        if _gf2_nonsingular(rows):
            masks.append(s)
    labels = tuple(f"e{i + 1}" for i in range(n))
    d = DeltaMatroid(labels, masks, _trusted=True)
    return d.twist(rng.choice(d.masks))


# -- theorem verification -------------------------------------------------


def _all_minors(d: DeltaMatroid) -> set[DeltaMatroid]:
    out = set()
    full = d.full_mask
    for x in range(full + 1):
        rest = full & ~x
        y = rest
        while True:
            out.add(d.minor(x, y))
            if y == 0:
                break
            y = (y - 1) & rest
    return out


def _check_t2(d):
    for a in range(d.full_mask + 1):
        if twist_width_formula(d, a) != d.twist(a).width():
            return f"{d!r} with A mask {a:#x}"
    return None


def _check_tt2(d):
    for a in range(d.full_mask + 1):
        if is_twist_matroid_witness(d, a) != (d.twist(a).width() == 0):
            return f"{d!r} with A mask {a:#x}"
    return None


def _check_tt(d):
    for a in range(d.full_mask + 1):
        if is_twist_width_one_witness(d, a) != (d.twist(a).width() == 1):
            return f"{d!r} with A mask {a:#x}"
    return None


def _check_tm1(d):
    has_width_one = any(
        d.twist(a).width() == 1 for a in range(d.full_mask + 1)
    )
    if bool(rough_structure_witnesses(d)) != has_width_one:
        return repr(d)
    return None


def _check_t1(d):
    if (is_obstructed(d) is None) != (min_width_twist(d)[1] <= 1):
        return repr(d)
    return None


def _check_p1(d):
    base = min_width_twist(d)[1]
    for e in d.labels:
        for m in (d.delete(e), d.contract(e)):
            if min_width_twist(m)[1] > base:
                return f"{d!r} at element {e!r}"
    return None


def _check_l1(d):
    for a in range(d.full_mask + 1):
        a_labels = d.set_of(a)
        lhs = _all_minors(d.twist(a))
        rhs = {
            j.twist([e for e in j.labels if e in a_labels])
            for j in _all_minors(d)
        }
        if lhs != rhs:
            return f"{d!r} with A mask {a:#x}"
    return None


def _check_l2(d):
    from .certify import TwistWitness, certify

    if 0 not in d.masks:
        return "skip"
    cert = certify(d)  # self-verifying; raises on internal failure
    if isinstance(cert, TwistWitness) != (min_width_twist(d)[1] <= 1):
        return repr(d)
    return None


_CHECKS = {
    "t2": _check_t2,
    "tt2": _check_tt2,
    "tt": _check_tt,
    "tm1": _check_tm1,
    "t1": _check_t1,
    "p1": _check_p1,
    "l1": _check_l1,
    "l2": _check_l2,
}

_TAG_LIMITS = {"l1": 3}


def verify_theorem(n: int, which: str) -> EnumerationReport:
    """Run one exhaustive property over every delta-matroid on n elements.

    Tags: t2 (twist-width formula), tt2 (matroid-twist criterion), tt
    (width-one-twist criterion), tm1 (rough-structure witnesses), t1
    (excluded-minor characterisation), p1 (minor monotonicity), l1
    (minor/twist commutation, n <= 3), l2 (certificates, empty-feasible
    instances only).
    """
    if which not in _CHECKS:
        raise ValueError(
            f"unknown theorem tag {which!r}; expected one of {THEOREM_TAGS}"
        )
    limit = _TAG_LIMITS.get(which, MAX_ENUM_ELEMENTS)
    if not 1 <= n <= limit:
        raise GroundSetError(f"tag {which!r} supports 1 <= n <= {limit}")
    check = _CHECKS[which]
    checked = failures = 0
    first = None
    for d in enumerate_all(n):
        result = check(d)
        if result == "skip":
            continue
        checked += 1
        if result is not None:
            failures += 1
            if first is None:
                first = result
    return EnumerationReport(
        n=n,
        total_families=(1 << (1 << n)) - 1,
        valid_count=count_all(n),
        theorem=which,
        checked=checked,
        failures=failures,
        first_counterexample=first,
    )
