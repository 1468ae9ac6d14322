"""Isomorphism, the five-member obstruction catalog, and minor detection.

The catalog holds the five small delta-matroids whose twists form the
excluded minors for having a twist of width at most one. Isomorphism is
brute force over label permutations with a feasible-size signature filter,
which is plenty below the guard of eight elements.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from .core import DeltaMatroid, GroundSetError

MAX_ISO_ELEMENTS = 8


@dataclass
class Obstruction:
    """A minor witness: minor(host, delete_set, contract_set) is isomorphic
    to ``target`` (entry ``target_index`` of the list that was scanned)."""

    delete_set: frozenset
    contract_set: frozenset
    iso: dict = field(repr=False)
    target: DeltaMatroid = field(repr=False)
    target_index: int = 0

    def verify(self, host: DeltaMatroid) -> bool:
        """Re-check the witness against ``host`` from scratch."""
        minor = host.minor(self.delete_set, self.contract_set)
        mapped = {
            frozenset(self.iso[e] for e in minor.set_of(m))
            for m in minor.masks
        }
        return set(self.iso) == set(minor.labels) and mapped == set(
            self.target.feasible_sets()
        )


@lru_cache(maxsize=1)
def catalog() -> tuple[DeltaMatroid, ...]:
    """The five minimal obstructions, on elements a, b (and c)."""

    def make(labels, family):
        return DeltaMatroid(labels, [frozenset(f) for f in family])

    return (
        make("ab", ["", "a", "b", "ab"]),
        make("abc", ["", "a", "b", "c", "abc"]),
        make("abc", ["", "ab", "bc", "ac"]),
        make("abc", ["", "ab", "bc", "ac", "abc"]),
        make("abc", ["", "a", "ab", "bc", "ac"]),
    )


def _permuted_masks(masks, perm) -> tuple[int, ...]:
    out = []
    for m in masks:
        p = 0
        i = 0
        while m:
            if m & 1:
                p |= 1 << perm[i]
            m >>= 1
            i += 1
        out.append(p)
    return tuple(sorted(out))


def canonical_form(d: DeltaMatroid) -> tuple:
    """Label-free key: lexicographically least sorted mask family over all
    label permutations. Equal keys mean isomorphic delta-matroids."""
    if d.n > MAX_ISO_ELEMENTS:
        raise GroundSetError(
            f"canonical form limited to {MAX_ISO_ELEMENTS} elements"
        )
    best = min(
        _permuted_masks(d.masks, perm) for perm in permutations(range(d.n))
    )
    return (d.n, best)


def _signature(d: DeltaMatroid) -> Counter:
    return Counter(m.bit_count() for m in d.masks)


def are_isomorphic(d1: DeltaMatroid, d2: DeltaMatroid):
    """A feasibility-preserving label bijection d1 -> d2, or None.

    Ground sets of different sizes simply yield None. Permutations are
    tried in lexicographic order, so the returned map is deterministic.
    """
    if d1.n != d2.n or len(d1.masks) != len(d2.masks):
        return None
    if d1.n > MAX_ISO_ELEMENTS:
        raise GroundSetError(
            f"isomorphism search limited to {MAX_ISO_ELEMENTS} elements"
        )
    if _signature(d1) != _signature(d2):
        return None
    target = d2.masks
    for perm in permutations(range(d1.n)):
        if _permuted_masks(d1.masks, perm) == target:
            return {d1.labels[i]: d2.labels[perm[i]] for i in range(d1.n)}
    return None


def d5_family(up_to_iso: bool = False) -> list[DeltaMatroid]:
    """All twists of the catalog members (36 raw), optionally deduplicated
    up to isomorphism via canonical forms (first representative kept)."""
    members = []
    for base in catalog():
        for a in range(base.full_mask + 1):
            members.append(base.twist(a))
    if not up_to_iso:
        return members
    seen = set()
    out = []
    for m in members:
        key = canonical_form(m)
        if key not in seen:
            seen.add(key)
            out.append(m)
    return out


def _disjoint_pairs(n: int, total: int):
    """Disjoint (X, Y) masks with |X| + |Y| == total, ordered by (X, Y)."""
    full = (1 << n) - 1
    for x in range(full + 1):
        px = x.bit_count()
        if px > total:
            continue
        for y in range(full + 1):
            if y & x:
                continue
            if y.bit_count() == total - px:
                yield x, y


def has_minor_isomorphic(d: DeltaMatroid, h: DeltaMatroid, target_index=0):
    """First minor of ``d`` isomorphic to ``h``, in deterministic order.

    Scans disjoint delete/contract pairs of the forced total size ordered
    by (delete mask, contract mask); returns an Obstruction or None.
    """
    excess = d.n - h.n
    if excess < 0:
        return None
    sig = _signature(h)
    for x, y in _disjoint_pairs(d.n, excess):
        minor = d.minor(x, y)
        if _signature(minor) != sig:
            continue
        iso = are_isomorphic(minor, h)
        if iso is not None:
            return Obstruction(d.set_of(x), d.set_of(y), iso, h, target_index)
    return None


@lru_cache(maxsize=1)
def _obstruction_scan_list() -> tuple[DeltaMatroid, ...]:
    return tuple(d5_family(up_to_iso=True))


@lru_cache(maxsize=1)
def _obstruction_canonical_keys() -> frozenset:
    return frozenset(canonical_form(m) for m in _obstruction_scan_list())


def _minor_keys(d: DeltaMatroid, sizes) -> set:
    keys = set()
    for k in sizes:
        if k > d.n:
            continue
        for x, y in _disjoint_pairs(d.n, d.n - k):
            keys.add(canonical_form(d.minor(x, y)))
    return keys


def is_obstructed(d: DeltaMatroid):
    """Scan the deduplicated twist family of the catalog for a minor of
    ``d``; an Obstruction means no twist of ``d`` has width at most one.

    A cheap canonical-form sweep over all candidate minors rules out the
    common unobstructed case before the deterministic witness search runs.
    """
    members = _obstruction_scan_list()
    if d.n <= MAX_ISO_ELEMENTS:
        sizes = {m.n for m in members}
        if not (_minor_keys(d, sizes) & _obstruction_canonical_keys()):
            return None
    for i, h in enumerate(members):
        found = has_minor_isomorphic(d, h, target_index=i)
        if found is not None:
            return found
    return None


@lru_cache(maxsize=1)
def _matroid_twist_targets() -> tuple[DeltaMatroid, ...]:
    # the width-one singleton, the odd triangle, and its single-element twist
    single = DeltaMatroid("a", ["", "a"])
    triangle = catalog()[2]
    return (single, triangle, triangle.twist("a"))


def matroid_twist_obstructions(d: DeltaMatroid):
    """Minor witness ruling out any width-zero twist, or None.

    Scans the three known obstructions for twists of matroids; for even
    inputs the singleton target can never occur (minors of even
    delta-matroids are even).
    """
    targets = _matroid_twist_targets()
    if d.n <= MAX_ISO_ELEMENTS:
        keys = frozenset(canonical_form(t) for t in targets)
        if not (_minor_keys(d, {t.n for t in targets}) & keys):
            return None
    for i, h in enumerate(targets):
        found = has_minor_isomorphic(d, h, target_index=i)
        if found is not None:
            return found
    return None
