"""Delta-matroids as explicit feasible-set families over a fixed ground set.

A delta-matroid is a finite ground set together with a nonempty family of
subsets (the feasible sets) satisfying the Symmetric Exchange Axiom: for
feasible X, Y and u in X ^ Y there is some v in X ^ Y (possibly v == u)
with X ^ {u, v} feasible.

Feasible sets are stored as bitmasks over ground-set positions (position i
corresponds to the i-th label), kept deduplicated and sorted ascending, so
structural equality is a plain tuple comparison.
"""

from __future__ import annotations

from typing import Iterable, Sequence

# Bitmask width limits: direct operations run on up to 64 elements,
# enumeration-style workflows are capped lower by their own modules.
MAX_ELEMENTS = 64

ElementsLike = "Iterable[str] | int"


class DeltaMatroidError(ValueError):
    """Base class for invalid constructions or out-of-range arguments."""


class EmptyFamilyError(DeltaMatroidError):
    """Raised when the feasible family is empty."""


class GroundSetError(DeltaMatroidError):
    """Raised when an argument refers to elements outside the ground set."""


class AxiomViolationError(DeltaMatroidError):
    """Symmetric exchange failure, carrying a witness triple.

    ``x`` and ``y`` are feasible sets and ``u`` an element of their symmetric
    difference for which no exchange partner ``v`` exists.
    """

    def __init__(self, x: frozenset, y: frozenset, u: str):
        self.x = x
        self.y = y
        self.u = u
        super().__init__(
            "symmetric exchange fails: X=%s Y=%s u=%r has no valid partner v"
            % (sorted(x), sorted(y), u)
        )


def _squeeze_bit(mask: int, pos: int) -> int:
    """Drop bit position ``pos`` from ``mask``, shifting higher bits down."""
    low = (1 << pos) - 1
    return (mask & low) | ((mask >> (pos + 1)) << pos)


def find_axiom_violation(masks: Sequence[int], n: int):
    """Return a violating triple ``(x_mask, y_mask, u_pos)`` or None.

    Brute force over ordered pairs of feasible masks; for each u in the
    symmetric difference, a partner v (v == u allowed) must give a feasible
    X ^ {u, v}.
    """
    member = set(masks)
    # exchange_ok[(X, u)] = bitmask of positions v with X ^ {u, v} feasible
    exchange_ok: dict[tuple[int, int], int] = {}
    for x in masks:
        for u in range(n):
            xu = x ^ (1 << u)
            ok = 0
            for v in range(n):
                res = xu if v == u else xu ^ (1 << v)
                if res in member:
                    ok |= 1 << v
            exchange_ok[(x, u)] = ok
    for x in masks:
        for y in masks:
            diff = x ^ y
            d = diff
            while d:
                u = (d & -d).bit_length() - 1
                d &= d - 1
                if not exchange_ok[(x, u)] & diff:
                    return (x, y, u)
    return None


class DeltaMatroid:
    """An immutable delta-matroid with an explicit feasible family.

    Construction validates the Symmetric Exchange Axiom eagerly; operations
    that provably preserve the axiom (twists, minors) skip re-validation.
    """

    __slots__ = ("labels", "masks", "_pos")

    labels: tuple[str, ...]
    masks: tuple[int, ...]

    def __init__(self, labels: Iterable[str], feasible: Iterable, *, _trusted=False):
        labels = tuple(labels)
        if len(labels) > MAX_ELEMENTS:
            raise GroundSetError(f"ground set exceeds {MAX_ELEMENTS} elements")
        pos = {e: i for i, e in enumerate(labels)}
        if len(pos) != len(labels):
            raise GroundSetError("ground-set labels must be pairwise distinct")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_pos", pos)
        masks = tuple(sorted({self._to_mask(f) for f in feasible}))
        object.__setattr__(self, "masks", masks)
        if not masks:
            raise EmptyFamilyError("feasible family must be nonempty")
        if not _trusted:
            witness = find_axiom_violation(masks, len(labels))
            if witness is not None:
                x, y, u = witness
                raise AxiomViolationError(
                    self.set_of(x), self.set_of(y), labels[u]
                )

    def __setattr__(self, name, value):
        raise AttributeError("DeltaMatroid instances are immutable")

    # -- representation helpers -------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def _to_mask(self, elems) -> int:
        if isinstance(elems, int):
            if elems < 0 or elems > self.full_mask:
                raise GroundSetError(f"mask {elems:#x} outside ground set")
            return elems
        mask = 0
        for e in elems:
            try:
                mask |= 1 << self._pos[e]
            except KeyError:
                raise GroundSetError(f"unknown element {e!r}") from None
        return mask

    def mask_of(self, elems) -> int:
        """Bitmask of a subset given as labels (or an already-built mask)."""
        return self._to_mask(elems)

    def set_of(self, mask: int) -> frozenset[str]:
        """Labels corresponding to a bitmask."""
        return frozenset(
            e for i, e in enumerate(self.labels) if mask >> i & 1
        )

    def feasible_sets(self) -> list[frozenset[str]]:
        return [self.set_of(m) for m in self.masks]

    def is_feasible(self, elems) -> bool:
        return self._to_mask(elems) in set(self.masks)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DeltaMatroid)
            and self.labels == other.labels
            and self.masks == other.masks
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.masks))

    def __repr__(self) -> str:
        fam = ", ".join(
            "{" + ",".join(sorted(self.set_of(m))) + "}" for m in self.masks
        )
        return f"DeltaMatroid({list(self.labels)}, [{fam}])"

    # -- basic quantities -------------------------------------------------

    def min_feasible_size(self) -> int:
        return min(m.bit_count() for m in self.masks)

    def max_feasible_size(self) -> int:
        return max(m.bit_count() for m in self.masks)

    def width(self) -> int:
        """Largest feasible size minus smallest feasible size."""
        sizes = [m.bit_count() for m in self.masks]
        return max(sizes) - min(sizes)

    def is_even(self) -> bool:
        """True iff all feasible sizes share parity."""
        parity = self.masks[0].bit_count() & 1
        return all(m.bit_count() & 1 == parity for m in self.masks)

    def rho(self, elems) -> int:
        """Bouchet rank: |E| minus the least |A ^ F| over feasible F."""
        a = self._to_mask(elems)
        return self.n - min((a ^ m).bit_count() for m in self.masks)

    # -- loops and coloops ------------------------------------------------

    def _elem_pos(self, e: str) -> int:
        try:
            return self._pos[e]
        except KeyError:
            raise GroundSetError(f"unknown element {e!r}") from None

    def is_loop(self, e: str) -> bool:
        """True iff ``e`` lies in no feasible set."""
        bit = 1 << self._elem_pos(e)
        return all(not m & bit for m in self.masks)

    def is_coloop(self, e: str) -> bool:
        """True iff ``e`` lies in every feasible set."""
        bit = 1 << self._elem_pos(e)
        return all(m & bit for m in self.masks)

    def loops(self) -> list[str]:
        return [e for e in self.labels if self.is_loop(e)]

    def coloops(self) -> list[str]:
        return [e for e in self.labels if self.is_coloop(e)]

    # -- twist and dual ---------------------------------------------------

    def twist(self, elems) -> "DeltaMatroid":
        """Twist by a subset A: replace each feasible F by A ^ F."""
        a = self._to_mask(elems)
        return DeltaMatroid(
            self.labels, [a ^ m for m in self.masks], _trusted=True
        )

    def dual(self) -> "DeltaMatroid":
        """Twist by the whole ground set."""
        return self.twist(self.full_mask)

    # -- minors -----------------------------------------------------------

    def delete(self, e: str) -> "DeltaMatroid":
        """Remove ``e``, keeping feasible sets avoiding it.

        When ``e`` is a coloop this instead strips ``e`` from every feasible
        set, so that deletion and contraction agree in the degenerate cases
        and stay total.
        """
        p = self._elem_pos(e)
        bit = 1 << p
        if self.is_coloop(e):
            kept = [m & ~bit for m in self.masks]
        else:
            kept = [m for m in self.masks if not m & bit]
        return DeltaMatroid(
            self.labels[:p] + self.labels[p + 1:],
            [_squeeze_bit(m, p) for m in kept],
            _trusted=True,
        )

    def contract(self, e: str) -> "DeltaMatroid":
        """Remove ``e``, keeping F - e for feasible sets containing it.

        When ``e`` is a loop this keeps the sets avoiding it (all of them),
        matching the degenerate-case deletion.
        """
        p = self._elem_pos(e)
        bit = 1 << p
        if self.is_loop(e):
            kept = list(self.masks)
        else:
            kept = [m & ~bit for m in self.masks if m & bit]
        return DeltaMatroid(
            self.labels[:p] + self.labels[p + 1:],
            [_squeeze_bit(m, p) for m in kept],
            _trusted=True,
        )

    def minor(self, delete=(), contract=()) -> "DeltaMatroid":
        """Delete and contract disjoint element sets (order-independent)."""
        dmask = self._to_mask(delete)
        cmask = self._to_mask(contract)
        if dmask & cmask:
            raise GroundSetError("delete and contract sets must be disjoint")
        result = self
        for e in self.labels:
            bit = 1 << self._pos[e]
            if dmask & bit:
                result = result.delete(e)
            elif cmask & bit:
                result = result.contract(e)
        return result

    def restrict(self, elems) -> "DeltaMatroid":
        """Delete everything outside A; keeps A's labels in ground order."""
        a = self._to_mask(elems)
        return self.minor(delete=self.full_mask & ~a)


def validate(labels: Iterable[str], family: Iterable) -> DeltaMatroid:
    """Build a delta-matroid from an untrusted family, checking the axiom.

    Raises EmptyFamilyError or AxiomViolationError (with witness) on bad
    input.
    """
    return DeltaMatroid(labels, family)
