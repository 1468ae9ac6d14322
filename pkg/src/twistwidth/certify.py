"""Constructive certificates for twist-width at most one.

Given a delta-matroid in which the empty set is feasible, ``certify``
produces either a twist set whose twist has width at most one, or a minor
witness onto one of the five catalog obstructions. The procedure builds an
auxiliary graph from the size-one and size-two feasible sets: a hub vertex
standing for the elements whose singletons are feasible, one vertex per
remaining element, and edges recording two-element feasible sets. A
bipartite graph yields a twist set from a 2-coloring (or a small forbidden
restriction); a non-bipartite graph yields a forbidden minor by induction
on the length of a shortest odd cycle.

Every certificate is re-verified from scratch before being returned;
a failed re-check raises instead of silently falling back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DeltaMatroid, DeltaMatroidError
from .minors import Obstruction, are_isomorphic, catalog


class _Hub:
    """Distinguished auxiliary-graph vertex; never collides with labels."""

    def __repr__(self):
        return "v_L"


HUB = _Hub()


class CertificationError(RuntimeError):
    """An internal invariant of the certificate procedure failed."""


@dataclass
class TwistWitness:
    """Twisting by ``twist_set`` yields a delta-matroid of this width."""

    twist_set: frozenset
    width: int


@dataclass
class MinorWitness:
    """A verified minor isomorphic to catalog()[obstruction.target_index]."""

    obstruction: Obstruction


@dataclass(frozen=True)
class AuxGraph:
    """Auxiliary graph driving the certificate procedure.

    ``singles`` holds the elements whose singletons are feasible (they are
    all represented by the hub); ``vertices`` are the remaining elements in
    ground order, preceded by the hub.
    """

    singles: frozenset
    vertices: tuple
    adjacency: dict

    def edges(self):
        seen = []
        for i, u in enumerate(self.vertices):
            for v in self.vertices[i + 1:]:
                if v in self.adjacency[u]:
                    seen.append((u, v))
        return seen


def build_aux_graph(d: DeltaMatroid) -> AuxGraph:
    """Construct the auxiliary graph; the empty set must be feasible."""
    if 0 not in d.masks:
        raise DeltaMatroidError("the empty set must be feasible")
    feasible = set(d.masks)
    singles = frozenset(
        e for i, e in enumerate(d.labels) if (1 << i) in feasible
    )
    others = [e for e in d.labels if e not in singles]
    vertices = (HUB, *others)
    adjacency = {v: set() for v in vertices}

    def add_edge(u, v):
        adjacency[u].add(v)
        adjacency[v].add(u)

    for x in others:
        xbit = 1 << d.labels.index(x)
        for y in others:
            if y <= x:
                continue
            if xbit | (1 << d.labels.index(y)) in feasible:
                add_edge(x, y)
        if any(xbit | (1 << d.labels.index(z)) in feasible for z in singles):
            add_edge(x, HUB)
    return AuxGraph(singles, vertices, adjacency)


def _vertex_key(g: AuxGraph):
    order = {v: i for i, v in enumerate(g.vertices)}
    return lambda v: order[v]


def two_coloring(g: AuxGraph):
    """BFS 2-coloring with the hub colored 0, or None if non-bipartite.

    Components are rooted in vertex order with root color 0, so the
    coloring is deterministic.
    """
    color = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v in sorted(g.adjacency[u], key=_vertex_key(g)):
                if v not in color:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    return color


def _canonical_cycle(cycle, key):
    """Least rotation/reflection of a cycle's vertex sequence."""
    best = None
    m = len(cycle)
    for seq in (cycle, cycle[::-1]):
        for i in range(m):
            rot = seq[i:] + seq[:i]
            ranked = tuple(key(v) for v in rot)
            if best is None or ranked < best[0]:
                best = (ranked, rot)
    return best[1]


def shortest_odd_cycle(g: AuxGraph):
    """A shortest odd cycle as a vertex list, or None when bipartite.

    Runs a breadth-first search on the bipartite double cover from every
    vertex; the least odd closed walk overall is a simple cycle. Ties are
    broken by the lexicographically smallest canonical vertex sequence.
    """
    key = _vertex_key(g)
    best = None
    for s in g.vertices:
        dist = {(s, 0): 0}
        parent = {(s, 0): None}
        queue = [(s, 0)]
        while queue:
            u, p = queue.pop(0)
            for v in sorted(g.adjacency[u], key=key):
                state = (v, 1 - p)
                if state not in dist:
                    dist[state] = dist[(u, p)] + 1
                    parent[state] = (u, p)
                    queue.append(state)
        goal = (s, 1)
        if goal not in dist:
            continue
        walk = []
        state = goal
        while state is not None:
            walk.append(state[0])
            state = parent[state]
        cycle = walk[:-1]  # closed walk; drop the repeated start
        if len(set(cycle)) != len(cycle):
            continue  # not simple; a strictly better start vertex exists
        canon = _canonical_cycle(cycle, key)
        ranked = tuple(key(v) for v in canon)
        if best is None or (len(canon), ranked) < (len(best), tuple(key(v) for v in best)):
            best = canon
    return best


# -- certificate assembly -------------------------------------------------


def _minor_witness(d, keep, contract, expected_indices):
    """Build and verify a minor witness for the restriction/contraction.

    ``keep`` is the restriction support, ``contract`` the elements then
    contracted; the minor must be isomorphic to one of the catalog entries
    named by ``expected_indices``.
    """
    keep = frozenset(keep)
    contract = frozenset(contract)
    delete = frozenset(d.labels) - keep
    minor = d.minor(delete, contract)
    for idx in expected_indices:
        iso = are_isomorphic(minor, catalog()[idx])
        if iso is not None:
            return MinorWitness(
                Obstruction(delete, contract, iso, catalog()[idx], idx)
            )
    raise CertificationError(
        f"restriction to {sorted(keep)} contracting {sorted(contract)} "
        f"matched none of the expected obstructions {list(expected_indices)}"
    )


def _compose(d, keep, contract, inner: MinorWitness) -> MinorWitness:
    """Lift a witness on restrict(d, keep) / contract back to ``d``."""
    obs = inner.obstruction
    delete = (frozenset(d.labels) - frozenset(keep)) | obs.delete_set
    return MinorWitness(
        Obstruction(
            delete,
            frozenset(contract) | obs.contract_set,
            obs.iso,
            obs.target,
            obs.target_index,
        )
    )


def _bipartite_case(d, g, color):
    singles = g.singles
    a_elems = set(singles) | {
        v for v in g.vertices[1:] if color[v] == 0
    }
    amask = d.mask_of(a_elems)
    inside = [m for m in d.masks if not m & ~amask]
    sizes = {m.bit_count() for m in inside}
    if 2 in sizes:
        pair = next(m for m in inside if m.bit_count() == 2)
        return _minor_witness(d, d.set_of(pair), (), (0,))
    if 1 not in sizes:
        width = 0
    elif max(sizes) == 1:
        width = 1
    else:
        triples = [m for m in inside if m.bit_count() == 3]
        if not triples:
            raise CertificationError(
                "restriction has large feasible sets but none of size three"
            )
        return _minor_witness(d, d.set_of(triples[0]), (), (1,))
    best = min(amask, d.full_mask & ~amask)
    return TwistWitness(d.set_of(best), width)


def _partner_in_singles(d, g, x):
    """Smallest single-feasible element z (ground order) with {x,z} feasible."""
    xbit = 1 << d.labels.index(x)
    feasible = set(d.masks)
    for z in d.labels:
        if z in g.singles and xbit | d.mask_of([z]) in feasible:
            return z
    raise CertificationError(f"hub edge for {x!r} has no feasible partner")


def _hub_triangle(d, x, y, s):
    """Triangle through the hub with a shared partner s for x and y."""
    if d.is_feasible([x, y, s]):
        return _minor_witness(d, {x, y, s}, {s}, (0,))
    return _minor_witness(d, {x, y, s}, (), (4,))


def _triangle_case(d, g, cycle):
    if HUB not in cycle:
        return _minor_witness(d, set(cycle), (), (2, 3))
    i = cycle.index(HUB)
    _, x, y = cycle[i:] + cycle[:i]
    alpha = _partner_in_singles(d, g, x)
    beta = _partner_in_singles(d, g, y)
    if alpha == beta:
        return _hub_triangle(d, x, y, alpha)
    if d.is_feasible([y, alpha]):
        return _hub_triangle(d, x, y, alpha)
    if d.is_feasible([x, beta]):
        return _hub_triangle(d, y, x, beta)
    if d.is_feasible([alpha, beta]):
        return _minor_witness(d, {alpha, beta}, (), (0,))
    if d.is_feasible([x, y, alpha, beta]):
        return _minor_witness(d, {x, y, alpha, beta}, {x, y}, (0,))
    return _minor_witness(d, {x, y, alpha, beta}, {alpha}, (4,))


def _long_cycle_case(d, g, cycle):
    if HUB in cycle:
        i = cycle.index(HUB)
        cycle = cycle[i:] + cycle[:i]
        xs = cycle[1:]
        alpha = _partner_in_singles(d, g, xs[0])
        beta = _partner_in_singles(d, g, xs[-1])
        if alpha != beta and d.is_feasible([alpha, beta]):
            return _minor_witness(d, {alpha, beta}, (), (0,))
        keep = {alpha, beta, *xs}
    else:
        xs = cycle
        keep = set(xs)
    contract = {xs[-2], xs[-1]}
    sub = d.restrict(keep).minor(contract=contract)
    inner = _certify_impl(sub, len(cycle))
    if not isinstance(inner, MinorWitness):
        raise CertificationError(
            "reduced instance unexpectedly produced a twist witness"
        )
    return _compose(d, keep, contract, inner)


def _certify_impl(d, prev_cycle_len):
    g = build_aux_graph(d)
    cycle = shortest_odd_cycle(g)
    if cycle is None:
        if prev_cycle_len is not None:
            raise CertificationError(
                "reduced instance lost its odd cycle entirely"
            )
        return _bipartite_case(d, g, two_coloring(g))
    if prev_cycle_len is not None and len(cycle) >= prev_cycle_len:
        raise CertificationError(
            "shortest odd cycle failed to shrink in the reduction"
        )
    if len(cycle) == 3:
        return _triangle_case(d, g, cycle)
    return _long_cycle_case(d, g, cycle)


def certify(d: DeltaMatroid):
    """Certificate for ``d`` (the empty set must be feasible).

    Returns a TwistWitness with width at most one, or a MinorWitness onto
    a catalog obstruction. The result is independently re-verified; an
    unverifiable certificate raises CertificationError.
    """
    cert = _certify_impl(d, None)
    if isinstance(cert, TwistWitness):
        actual = d.twist(cert.twist_set).width()
        if actual != cert.width or actual > 1:
            raise CertificationError(
                f"twist witness claims width {cert.width}, got {actual}"
            )
    else:
        obs = cert.obstruction
        if not (0 <= obs.target_index < 5 and obs.verify(d)):
            raise CertificationError("minor witness failed re-verification")
    return cert
