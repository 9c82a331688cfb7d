"""Certifying Hamiltonicity for two-connected split graphs.

A split graph carves into a stable set S and a clique K.  ``split_certify``
returns either a Hamiltonian cycle or an induced snare or nova embedding,
and re-validates whichever certificate it built before handing it back.

Two regimes.  While no clique vertex has three stable neighbours, two
chosen edges per stable vertex form a subgraph of maximum degree two whose
short cycles are repaired one re-route at a time (each repair must drop
the cycle count, checked at runtime) until the subgraph collapses into
paths glued together through the clique, a spanning cycle, or a cycle
whose vertices plus one outside clique vertex induce a nova.  Otherwise a
cascade of neighbourhood tests around a clique vertex with three stable
neighbours either surfaces a five- or seven-vertex obstruction or forces
the whole graph into one of two explicit cycle shapes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .connectivity import is_two_connected
from .errors import InternalInvariantError, PreconditionError
from .families import generate, nova, snare
from .graphs import Graph
from .hamilton import HamCycle, canonical_cycle_order
from .induced import Embedding


@dataclass(frozen=True)
class SplitPartition:
    """Stable set and clique, both ascending, jointly covering the graph.

    The clique is as large as any valid partition allows, so no stable
    vertex is adjacent to all of ``k`` (moving it across would beat the
    maximum).  Certification leans on that gap.
    """

    s: tuple[int, ...]
    k: tuple[int, ...]

    def validate(self, g: Graph) -> bool:
        if sorted(self.s + self.k) != list(range(g.n)):
            return False
        if any(g.has_edge(u, v) for u, v in combinations(self.s, 2)):
            return False
        return all(g.has_edge(u, v) for u, v in combinations(self.k, 2))


@dataclass(frozen=True)
class PairSelection:
    """Two chosen neighbours per stable vertex, stored as (x, a, b), a < b.

    Stable vertices keep degree exactly two in the chosen-edge subgraph.
    When additionally every clique vertex has at most two stable
    neighbours, that subgraph has maximum degree two throughout and falls
    apart into paths and cycles.
    """

    pairs: tuple[tuple[int, int, int], ...]

    def validate(self, g: Graph, stable: tuple[int, ...]) -> bool:
        if tuple(x for x, _, _ in self.pairs) != tuple(stable):
            return False
        return all(
            a < b and g.has_edge(x, a) and g.has_edge(x, b)
            for x, a, b in self.pairs
        )


def split_partition(g: Graph) -> SplitPartition | None:
    """Maximum-clique split partition of ``g``, or None if not split.

    With degrees d1 >= ... >= dn and m = max{i : d_i >= i - 1}, the graph
    is split exactly when sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i, and m
    is then the size of its largest clique.  The clique itself sits in the
    top m degree positions; ties at the boundary are tried in index order.
    Afterwards any stable vertex adjacent to the whole clique is moved
    across, so the returned clique cannot be beaten by one exchange.
    """
    n = g.n
    if n == 0:
        return SplitPartition((), ())
    deg = [g.degree(v) for v in range(n)]
    by_degree = sorted(range(n), key=lambda v: (-deg[v], v))
    d = [deg[v] for v in by_degree]
    m = max(i + 1 for i in range(n) if d[i] >= i)
    if sum(d[:m]) != m * (m - 1) + sum(d[m:]):
        return None
    floor = d[m - 1]
    core = [v for v in by_degree[:m] if deg[v] > floor]
    pool = [v for v in range(n) if deg[v] == floor]
    for extra in combinations(pool, m - len(core)):
        kset = set(core).union(extra)
        if _valid_clique_side(g, kset):
            return _absorbed(g, kset)
    for sub in combinations(range(n), m):  # insurance; the boundary scan should hit
        if _valid_clique_side(g, set(sub)):
            return _absorbed(g, set(sub))
    raise InternalInvariantError(
        "degree counts certify a split graph but no clique of that size works",
        state={"n": n, "m": m},
    )


def _valid_clique_side(g: Graph, kset) -> bool:
    ks = sorted(kset)
    if any(not g.has_edge(u, v) for u, v in combinations(ks, 2)):
        return False
    rest = [v for v in range(g.n) if v not in kset]
    return not any(g.has_edge(u, v) for u, v in combinations(rest, 2))


def _absorbed(g: Graph, kset: set) -> SplitPartition:
    grew = True
    while grew:
        grew = False
        for v in range(g.n):
            if v not in kset and all(g.has_edge(v, u) for u in kset):
                kset.add(v)  # dominates the clique, so the clique was not maximal
                grew = True
    rest = tuple(v for v in range(g.n) if v not in kset)
    return SplitPartition(rest, tuple(sorted(kset)))


def split_certify(g: Graph) -> HamCycle | Embedding:
    """Hamiltonian cycle, or an induced snare or nova, for a split graph.

    Raises PreconditionError unless ``g`` is split and two-connected.  The
    certificate is validated against ``g`` before being returned; failure
    there means the construction itself is broken and raises
    InternalInvariantError.  The two outcomes are not mutually exclusive
    (a Hamiltonian graph can still contain an obstruction); whichever the
    cascade meets first wins.
    """
    part = split_partition(g)
    if part is None:
        raise PreconditionError("split_certify needs a split graph")
    ok, _ = is_two_connected(g)
    if not ok:
        raise PreconditionError("split_certify needs a two-connected graph")
    for x in part.s:
        if all(g.has_edge(x, u) for u in part.k):
            raise InternalInvariantError(
                "stable vertex dominates the clique", state={"vertex": x}
            )
    if not part.s:
        return _checked(g, HamCycle(tuple(range(g.n))))
    sset = frozenset(part.s)
    if any(len(_stable_neighbours(g, sset, x)) >= 3 for x in part.k):
        return _checked(g, _three_neighbour_regime(g, part))
    return _checked(g, _pair_selection_regime(g, part))


def _checked(g: Graph, cert):
    if not cert.validate(g):
        raise InternalInvariantError(
            "certificate failed validation", state={"certificate": cert}
        )
    return cert


def _stable_neighbours(g: Graph, sset: frozenset, x: int) -> list:
    return [u for u in g.neighbors(x) if u in sset]


def _low_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _two_nova(ka: int, kb: int, x1: int, x2: int, x3: int) -> Embedding:
    """Adjacent pair plus three pairwise nonadjacent common neighbours."""
    kind = nova(2)
    return Embedding(generate(kind), (ka, x1, kb, x2, x3), kind)


# ---------------------------------------------------------------------------
# regime (a): every clique vertex has at most two stable neighbours


def _pair_selection_regime(g: Graph, part: SplitPartition) -> HamCycle | Embedding:
    """Repair a degree-two edge selection until it certifies.

    A cycle of the chosen-edge subgraph alternates between S and K.  One
    spanning the graph is the answer.  A short one either pairs with an
    outside clique vertex seeing none of its stable half (a nova), or
    loses an edge to a re-route that must shrink the cycle count.
    """
    chosen = {}
    for x in part.s:
        nb = g.neighbors(x)
        if len(nb) < 2:
            raise InternalInvariantError(
                "stable vertex of degree one", state={"vertex": x}
            )
        chosen[x] = (nb[0], nb[1])
    sel = _selection(part, chosen)
    if not sel.validate(g, part.s):
        raise InternalInvariantError(
            "malformed pair selection", state={"selection": sel}
        )
    kset = frozenset(part.k)
    cycle_count = None
    while True:
        cycles, paths = _selection_components(g.n, sel)
        if cycle_count is not None and len(cycles) >= cycle_count:
            raise InternalInvariantError(
                "re-route failed to reduce the cycle count",
                state={"cycles": len(cycles), "previous": cycle_count},
            )
        cycle_count = len(cycles)
        if not cycles:
            return _glued_paths(g, part, paths)
        cyc = min(cycles, key=lambda c: c[0])
        if len(cyc) == g.n:
            return HamCycle(canonical_cycle_order(tuple(cyc)))
        on_cycle = set(cyc)
        outside = [u for u in part.k if u not in on_cycle]
        if not outside:
            raise InternalInvariantError(
                "short selection cycle swallowed the clique", state={"cycle": cyc}
            )
        kx = outside[0]
        touched = [x for x in g.neighbors(kx) if x in on_cycle and x not in kset]
        if not touched:
            return _cycle_nova(g, kset, cyc, kx)
        x = touched[0]
        a, b = chosen[x]
        chosen[x] = tuple(sorted((b, kx)))  # drop the edge to the lower partner
        sel = _selection(part, chosen)


def _selection(part: SplitPartition, chosen: dict) -> PairSelection:
    return PairSelection(tuple((x,) + tuple(chosen[x]) for x in part.s))


def _selection_components(n: int, sel: PairSelection):
    """Cycle and path components of the chosen-edge subgraph.

    Cycle orders start at their least vertex stepping to its lesser
    neighbour first; path orders run from their least endpoint.  Degrees
    never exceed two, so every walk is forced after its first step.
    """
    adj = [[] for _ in range(n)]
    for x, a, b in sel.pairs:
        adj[x] += (a, b)
        adj[a].append(x)
        adj[b].append(x)
    for lst in adj:
        lst.sort()
    seen = [False] * n
    cycles, paths = [], []
    for v0 in range(n):
        if seen[v0]:
            continue
        members = {v0}
        queue = [v0]
        while queue:
            for u in adj[queue.pop()]:
                if u not in members:
                    members.add(u)
                    queue.append(u)
        for v in members:
            seen[v] = True
        ends = sorted(v for v in members if len(adj[v]) < 2)
        order = [ends[0] if ends else min(members)]
        prev = None
        while len(order) < len(members):
            step = next(u for u in adj[order[-1]] if u != prev)
            prev = order[-1]
            order.append(step)
        (paths if ends else cycles).append(order)
    return cycles, paths


def _glued_paths(g: Graph, part: SplitPartition, paths) -> HamCycle:
    """Chain the selection paths and loose clique vertices into a cycle.

    Path ends all sit in the clique, so consecutive pieces are adjacent no
    matter the order; pieces go by least endpoint, loose clique vertices
    come last.
    """
    kset = frozenset(part.k)
    order = []
    for p in sorted((p for p in paths if len(p) > 1), key=lambda p: p[0]):
        if p[0] not in kset or p[-1] not in kset:
            raise InternalInvariantError(
                "selection path not ending in the clique", state={"path": p}
            )
        order += p
    order += sorted(v for p in paths if len(p) == 1 for v in p)
    return HamCycle(canonical_cycle_order(tuple(order)))


def _cycle_nova(g: Graph, kset: frozenset, cyc: list, kx: int) -> Embedding:
    """Nova on a short selection cycle plus one outside clique vertex.

    The cycle alternates strictly, its clique half is mutually adjacent,
    and ``kx`` is adjacent to exactly that half.
    """
    rot = list(cyc)
    if rot[0] not in kset:
        rot = rot[1:] + rot[:1]
    if len(rot) % 2 or any((v in kset) != (i % 2 == 0) for i, v in enumerate(rot)):
        raise InternalInvariantError(
            "selection cycle fails to alternate", state={"cycle": cyc}
        )
    kind = nova(len(rot) // 2)
    return Embedding(generate(kind), tuple(rot) + (kx,), kind)


# ---------------------------------------------------------------------------
# regime (b): some clique vertex has three or more stable neighbours


def _three_neighbour_regime(g: Graph, part: SplitPartition) -> HamCycle | Embedding:
    """Obstruction cascade around a clique vertex with three stable neighbours.

    Four or more stable neighbours always yield a five-vertex obstruction.
    With exactly three, the complement classes K_i (clique vertices missing
    the i-th stable neighbour) partition the rest of the clique; every
    further stable vertex either exposes a 2-nova against those classes or
    collapses them to singletons, leaving just two graph shapes, each with
    an explicit Hamiltonian cycle.
    """
    sset = frozenset(part.s)
    for x in part.k:
        sn = _stable_neighbours(g, sset, x)
        if len(sn) < 4:
            continue
        emb = _probe_three(g, part, x, sn[0], sn[1], sn[2])
        if emb is not None:
            return emb
        s4 = sn[3]
        beyond = [u for u in g.neighbors(s4) if u != x]
        if not beyond:
            raise InternalInvariantError(
                "stable vertex of degree one", state={"vertex": s4}
            )
        kx = beyond[0]
        both = [si for si in sn[:3] if g.has_edge(si, kx)]
        if len(both) < 2:
            # the verified pair unions cover the clique, so at most one of
            # the three can miss kx
            raise InternalInvariantError(
                "neighbourhood unions miss a clique vertex",
                state={"pivot": x, "other": kx},
            )
        return _two_nova(x, kx, both[0], both[1], s4)
    pivot = None
    for x in part.k:
        sn = _stable_neighbours(g, sset, x)
        if len(sn) == 3:
            pivot = (x, sn[0], sn[1], sn[2])
            break
    if pivot is None:
        raise InternalInvariantError("pivot vanished from the clique", state={})
    k0, s1, s2, s3 = pivot
    emb = _probe_three(g, part, k0, s1, s2, s3)
    if emb is not None:
        return emb
    # verified: the three neighbourhoods meet only in k0 and pairwise cover
    # the clique, so every other clique vertex misses exactly one of them
    svec = (s1, s2, s3)
    cls = {}
    groups = ([], [], [])
    for u in part.k:
        if u == k0:
            continue
        missed = [i for i in range(3) if not g.has_edge(u, svec[i])]
        if len(missed) != 1:
            raise InternalInvariantError(
                "clique vertex must miss exactly one verified neighbourhood",
                state={"vertex": u, "missed": missed},
            )
        cls[u] = missed[0]
        groups[missed[0]].append(u)
    if not all(groups):
        raise InternalInvariantError(
            "empty complement class", state={"groups": groups}
        )
    survivor = None
    for s4 in part.s:
        if s4 in svec:
            continue
        per = ([], [], [])
        for u in g.neighbors(s4):
            per[cls[u]].append(u)
        crowded = next((i for i in range(3) if len(per[i]) >= 2), None)
        if crowded is not None:
            rest = [svec[j] for j in range(3) if j != crowded] + [s4]
            return _two_nova(per[crowded][0], per[crowded][1], *rest)
        nb = g.neighbors(s4)
        if len(nb) < 2:
            raise InternalInvariantError(
                "stable vertex of degree one", state={"vertex": s4}
            )
        ka, kb = nb[0], nb[1]
        c1, c2 = cls[ka], cls[kb]
        c3 = 3 - c1 - c2  # distinct classes: no class holds two of s4's neighbours
        miss = next((q for q in groups[c3] if not g.has_edge(s4, q)), None)
        if miss is not None:
            return _two_nova(ka, kb, miss, s4, svec[c3])
        kc = groups[c3][0]
        miss = next((q for q in groups[c2] if not g.has_edge(s4, q)), None)
        if miss is not None:
            return _two_nova(ka, kc, miss, s4, svec[c2])
        miss = next((q for q in groups[c1] if not g.has_edge(s4, q)), None)
        if miss is not None:
            return _two_nova(kb, kc, miss, s4, svec[c1])
        if any(len(grp) != 1 for grp in groups):
            raise InternalInvariantError(
                "classes must collapse to singletons", state={"groups": groups}
            )
        if survivor is not None:
            raise InternalInvariantError(
                "two stable vertices adjacent to all class singletons",
                state={"first": survivor, "second": s4},
            )
        survivor = s4
    k1, k2, k3 = groups[0][0], groups[1][0], groups[2][0]
    if survivor is None:
        spine = [k0, s1, k2, s3, k1, s2, k3]
        tail = [u for u in part.k if u not in (k0, k1, k2, k3)]
        return HamCycle(canonical_cycle_order(tuple(spine + tail)))
    if g.n != 8:
        raise InternalInvariantError(
            "singleton classes force eight vertices", state={"n": g.n}
        )
    return HamCycle(canonical_cycle_order((k0, s1, k2, s3, k1, survivor, k3, s2)))


def _probe_three(
    g: Graph, part: SplitPartition, k0: int, s1: int, s2: int, s3: int
) -> Embedding | None:
    """Neighbourhood tests around a clique vertex with three stable neighbours.

    None certifies both claims at once: the three neighbourhoods meet only
    in ``k0``, and pairwise they cover the clique.  A shared vertex beyond
    ``k0`` or an uncovered clique vertex surfaces a 2-nova; neighbourhoods
    that are pairwise disjoint beyond ``k0`` assemble a snare instead.
    """
    m1, m2, m3 = (g.adjacency_mask(v) for v in (s1, s2, s3))
    triple = m1 & m2 & m3 & ~(1 << k0)
    if triple:
        return _two_nova(k0, _low_bit(triple), s1, s2, s3)
    duos = ((s1, m1, s2, m2), (s1, m1, s3, m3), (s2, m2, s3, m3))
    if all((ma & mb & ~(1 << k0)) == 0 for _, ma, _, mb in duos):
        anchors = []
        for si in (s1, s2, s3):
            rest = [u for u in g.neighbors(si) if u != k0]
            if not rest:
                raise InternalInvariantError(
                    "stable vertex of degree one", state={"vertex": si}
                )
            anchors.append(rest[0])
        # pairwise disjoint neighbourhoods make the anchors distinct and
        # detached from the other two stable vertices
        kind = snare()
        mapping = (anchors[0], anchors[1], anchors[2], s1, s2, s3, k0)
        return Embedding(generate(kind), mapping, kind)
    kmask = 0
    for u in part.k:
        kmask |= 1 << u
    lonely = 0
    for sa, ma, sb, mb in duos:
        shared = ma & mb & ~(1 << k0)
        if not shared:
            lonely += 1
            continue
        missing = kmask & ~(ma | mb)
        if missing:
            return _two_nova(k0, _low_bit(shared), _low_bit(missing), sa, sb)
    if lonely:
        # the verified unions would force the remaining neighbourhood to be
        # the whole clique, contradicting the partition maximality gap
        raise InternalInvariantError(
            "isolated pair slipped past the snare test",
            state={"pivot": k0, "stable": (s1, s2, s3)},
        )
    return None
