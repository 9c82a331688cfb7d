"""Certifying Hamiltonicity for two-connected triangle-free graphs.

The route goes through forbidden minors.  Both K4 and K_{2,3} have
maximum degree three, so containing one as a minor is the same as
containing a subdivision; ``find_subdivision`` hunts for either pattern
directly.  Whichever turns up is converted by shortest-path surgery into
an induced theta, closed theta, or wheel, and a graph containing neither
pattern is outerplanar, where two-connectivity alone forces a (unique)
Hamiltonian cycle.  Certificates are re-validated before being returned.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass, replace
from itertools import combinations

from .connectivity import is_two_connected
from .errors import InternalInvariantError, PreconditionError
from .families import is_triangle_free
from .graphs import Graph
from .hamilton import HamCycle, hamiltonian_cycle
from .induced import Embedding, _theta_embedding, _wheel_embedding


@dataclass(frozen=True)
class MinorModel:
    """A witness that the host contains K4 or K_{2,3} as a minor.

    For ``pattern == "K4"`` the witness is four disjoint branch sets, each
    inducing a connected subgraph, with at least one edge between every
    pair.  For ``pattern == "K23"`` it is a subdivision: the two branch
    vertices in ``branch`` joined by the three internally disjoint
    ``paths``, every path listed from ``branch[0]`` to ``branch[1]`` with
    at least one interior vertex.
    """

    pattern: str
    sets: tuple[tuple[int, ...], ...] = ()
    branch: tuple[int, ...] = ()
    paths: tuple[tuple[int, ...], ...] = ()

    def validate(self, g: Graph) -> bool:
        if self.pattern == "K4":
            return self._validate_sets(g)
        if self.pattern == "K23":
            return self._validate_subdivision(g)
        return False

    def _validate_sets(self, g: Graph) -> bool:
        if len(self.sets) != 4 or self.branch or self.paths:
            return False
        seen: set[int] = set()
        for part in self.sets:
            block = set(part)
            if not part or len(block) != len(part) or block & seen:
                return False
            if any(not 0 <= v < g.n for v in part):
                return False
            if not _induces_connected(g, block):
                return False
            seen |= block
        return all(
            _sides_joined(g, one, two) for one, two in combinations(self.sets, 2)
        )

    def _validate_subdivision(self, g: Graph) -> bool:
        if self.sets or len(self.branch) != 2 or len(self.paths) != 3:
            return False
        u, v = self.branch
        if u == v or any(not 0 <= w < g.n for w in (u, v)):
            return False
        interiors: set[int] = set()
        for path in self.paths:
            if len(path) < 3 or path[0] != u or path[-1] != v:
                return False
            inner = set(path[1:-1])
            if len(inner) != len(path) - 2 or inner & interiors or inner & {u, v}:
                return False
            if any(not g.has_edge(p, q) for p, q in zip(path, path[1:])):
                return False
            interiors |= inner
        return True


@dataclass(frozen=True)
class ExtractionState:
    """Progress snapshot of ``extract_from_k4``, carried by invariant errors.

    ``cycle`` is the chordless cycle assembled from the side paths
    ``path_p`` and ``path_q``; ``path_r`` (once found) is the shortest
    outside path joining two non-adjacent cycle vertices, and
    ``attachment`` the lone cycle vertex seeing its interior.
    """

    cycle: tuple[int, ...]
    path_p: tuple[int, ...]
    path_q: tuple[int, ...]
    path_r: tuple[int, ...] = ()
    attachment: int | None = None

    def ends(self) -> tuple[int, int] | None:
        """The non-adjacent cycle vertices the outside path connects."""
        return (self.path_r[0], self.path_r[-1]) if self.path_r else None

    def inner_ends(self) -> tuple[int, int] | None:
        """The outside path's neighbours of its two ends."""
        return (self.path_r[1], self.path_r[-2]) if self.path_r else None

    def validate(self, g: Graph) -> bool:
        if _first_chord(g, self.cycle) is not None:
            return False
        if any(
            not g.has_edge(self.cycle[i - 1], self.cycle[i])
            for i in range(len(self.cycle))
        ):
            return False
        if not self.path_r:
            return True
        a, b = self.path_r[0], self.path_r[-1]
        on_cycle = set(self.cycle)
        if a not in on_cycle or b not in on_cycle or g.has_edge(a, b):
            return False
        if set(self.path_r[1:-1]) & on_cycle:
            return False
        return all(g.has_edge(p, q) for p, q in zip(self.path_r, self.path_r[1:]))


# ---------------------------------------------------------------------------
# subdivision search


def find_subdivision(g: Graph, pattern: str) -> MinorModel | None:
    """A K4 model or a fewest-vertex K_{2,3} subdivision, or None.

    ``pattern`` selects which of the two is hunted.  Branch vertices are
    tried in ascending order and paths grown lexicographically, so the
    answer is deterministic; for K_{2,3} the subdivision returned has the
    minimum possible vertex count.
    """
    if pattern == "K4":
        return _k4_model(g)
    if pattern == "K23":
        return _k23_subdivision(g)
    raise PreconditionError(f"unknown pattern {pattern!r}, expected K4 or K23")


def _k4_model(g: Graph) -> MinorModel | None:
    candidates = [v for v in range(g.n) if g.degree(v) >= 3]
    slot_pairs = tuple(combinations(range(4), 2))
    for quad in combinations(candidates, 4):
        base = 0
        for b in quad:
            base |= 1 << b
        routes = _pair_routes(g, quad, slot_pairs, 0, base, [])
        if routes is None:
            continue
        # hand every interior to its lower slot: the set stays connected
        # through its branch vertex, and the path's last edge joins the pair
        sets = [[b] for b in quad]
        for (i, _), interior in zip(slot_pairs, routes):
            sets[i].extend(interior)
        return MinorModel("K4", sets=tuple(tuple(sorted(s)) for s in sets))
    return None


def _pair_routes(g, quad, slot_pairs, idx: int, used: int, acc: list):
    """Interiors of internally disjoint paths linking every slot pair."""
    if idx == len(slot_pairs):
        return list(acc)
    i, j = slot_pairs[idx]
    for interior in _loose_paths(g, quad[i], quad[j], used):
        mask = 0
        for w in interior:
            mask |= 1 << w
        acc.append(interior)
        found = _pair_routes(g, quad, slot_pairs, idx + 1, used | mask, acc)
        if found is not None:
            return found
        acc.pop()
    return None


def _loose_paths(g: Graph, s: int, t: int, banned: int):
    """Interior tuples of simple s-t paths avoiding ``banned``, lex order.

    Unlike an induced-path search, chords are fine here; a subdivision
    only needs internal disjointness.  The direct edge yields ().
    """
    masks = [g.adjacency_mask(v) for v in range(g.n)]

    def rec(w: int, blocked: int, interior: list):
        if masks[w] >> t & 1:
            yield tuple(interior)
        cand = masks[w] & ~blocked
        while cand:
            low = cand & -cand
            cand ^= low
            x = low.bit_length() - 1
            interior.append(x)
            yield from rec(x, blocked | low, interior)
            interior.pop()

    yield from rec(s, banned | (1 << s) | (1 << t), [])


def _k23_subdivision(g: Graph) -> MinorModel | None:
    best = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            drop = 1 if g.has_edge(u, v) else 0
            if g.degree(u) - drop < 3 or g.degree(v) - drop < 3:
                continue
            found = _three_disjoint_paths(g, u, v)
            if found is None:
                continue
            cost, inners = found
            if best is None or cost < best[0]:
                best = (cost, u, v, inners)
    if best is None:
        return None
    _, u, v, inners = best
    return MinorModel(
        "K23", branch=(u, v), paths=tuple((u, *inner, v) for inner in inners)
    )


def _three_disjoint_paths(g: Graph, u: int, v: int):
    """Three internally disjoint u-v paths with fewest total interiors.

    Unit-capacity flow with every interior vertex split into an in/out
    arc of cost one; three cheapest augmentations then carry exactly the
    minimum interior count, and splitting keeps the paths disjoint.  The
    direct u-v edge is never offered as a path, so each path picked up by
    the walk at the end has at least one interior vertex.  Returns
    (interior count, three interior tuples) or None.
    """
    size = 2 * g.n
    src, snk = 2 * u + 1, 2 * v
    out: list[list[int]] = [[] for _ in range(size)]
    arcs: list[list[int]] = []  # [target, remaining capacity, cost], mate at ^1

    def add(a: int, b: int, cost: int):
        out[a].append(len(arcs))
        arcs.append([b, 1, cost])
        out[b].append(len(arcs))
        arcs.append([a, 0, -cost])

    for w in range(g.n):
        if w != u and w != v:
            add(2 * w, 2 * w + 1, 1)
    for a, b in g.edges():
        for s, t in ((a, b), (b, a)):
            if s == v or t == u or (s == u and t == v):
                continue
            add(2 * s + 1, 2 * t, 0)

    total = 0
    for _ in range(3):
        dist: list = [None] * size
        via: list = [None] * size
        dist[src] = 0
        changed = True
        while changed:
            changed = False
            for eid, (tgt, cap, cost) in enumerate(arcs):
                if not cap:
                    continue
                a = arcs[eid ^ 1][0]
                if dist[a] is None:
                    continue
                if dist[tgt] is None or dist[a] + cost < dist[tgt]:
                    dist[tgt] = dist[a] + cost
                    via[tgt] = eid
                    changed = True
        if dist[snk] is None:
            return None
        total += dist[snk]
        node = snk
        while node != src:
            eid = via[node]
            arcs[eid][1] -= 1
            arcs[eid ^ 1][1] += 1
            node = arcs[eid ^ 1][0]

    inners = []
    for _ in range(3):
        inner = []
        node = src
        while node != snk:
            eid = min(e for e in out[node] if e % 2 == 0 and arcs[e][1] == 0)
            arcs[eid][1] = 1  # consume, so the next walk takes another arc
            node = arcs[eid][0]
            if node % 2:
                inner.append(node // 2)
        inners.append(tuple(inner))
    return total, inners


# ---------------------------------------------------------------------------
# obstruction extraction


def extract_from_k4(g: Graph, model: MinorModel) -> Embedding:
    """Induced theta or wheel grown out of a K4 model.

    Two shortest paths across the model sides are fused into a chordless
    cycle.  Any outside vertex holding two or more cycle neighbours
    settles the matter immediately; failing that, the shortest outside
    path between two non-adjacent cycle vertices either completes a theta
    or pins down a single attachment vertex whose removal reroutes the
    cycle around it, leaving it as a wheel hub.
    """
    ok, triangle = is_triangle_free(g)
    if not ok:
        raise PreconditionError(
            f"extraction needs a triangle-free host, found triangle {triangle}"
        )
    if model.pattern != "K4" or not model.validate(g):
        raise PreconditionError("extract_from_k4 needs a valid K4 model")
    side1, side2, side3, side4 = (set(part) for part in model.sets)

    path_p = _linking_path(
        g,
        side1 | side2,
        [x for x in sorted(side1) if _meets(g, x, side3)],
        [y for y in sorted(side2) if _meets(g, y, side3)],
    )
    x, y = path_p[0], path_p[-1]
    path_q = _linking_path(
        g,
        side3,
        sorted(w for w in g.neighbors(x) if w in side3),
        sorted(w for w in g.neighbors(y) if w in side3),
    )
    cycle, repaired = _induced_cycle(g, path_p + tuple(reversed(path_q)))
    state = ExtractionState(cycle=cycle, path_p=path_p, path_q=path_q)

    emb = _attached_vertex_obstruction(g, cycle)
    if emb is not None:
        return _checked(g, emb)

    on_cycle = set(cycle)
    if not repaired:
        # route a fourth-side vertex to each cycle side; the landings are
        # distinct and cannot be pairwise adjacent, which is what makes an
        # outside connection between non-adjacent cycle vertices certain
        landings = []
        for part in (side1, side2, side3):
            route = _linking_path(
                g, part | side4, [min(side4)], sorted(on_cycle & part)
            )
            landings.append(route[-1])
        if len(set(landings)) != 3:
            raise InternalInvariantError("side routes collide on the cycle", state)
        if all(g.has_edge(s, t) for s, t in combinations(landings, 2)):
            raise InternalInvariantError(
                "side route landings are pairwise adjacent", state
            )

    path_r = _shortest_outside_link(g, cycle)
    if path_r is None:
        raise InternalInvariantError(
            "no outside path joins two non-adjacent cycle vertices", state
        )
    state = replace(state, path_r=path_r)
    a, b = path_r[0], path_r[-1]
    inner = list(path_r[1:-1])
    attachments = sorted(
        c
        for c in on_cycle - {a, b}
        if any(g.has_edge(c, w) for w in inner)
    )
    if not attachments:
        near, far = _arcs_between(cycle, a, b)
        return _checked(g, _theta_embedding(g, a, b, [near, far, inner], False))

    # rerouting case: exactly one cycle vertex sees the path's interior,
    # and the chordless cycle forces its cycle neighbours to be a and b
    if len(attachments) != 1:
        raise InternalInvariantError(
            "shortest outside path touches two cycle vertices", state
        )
    hub = attachments[0]
    state = replace(state, attachment=hub)
    if len(inner) < 2:
        raise InternalInvariantError("outside path too short to reroute", state)
    if not (g.has_edge(hub, a) and g.has_edge(hub, b)):
        raise InternalInvariantError(
            "attachment misses an end of the outside path", state
        )
    if g.has_edge(hub, path_r[1]) or g.has_edge(hub, path_r[-2]):
        raise InternalInvariantError(
            "path neighbour of an end also meets the cycle", state
        )
    near, far = _arcs_between(cycle, a, b)
    hub_arc, spanning = (near, far) if hub in near else (far, near)
    if hub_arc != [hub]:
        raise InternalInvariantError(
            "attachment is not wedged between the path ends", state
        )
    rim = (a, *spanning, b, *reversed(inner))
    return _checked(g, _wheel_embedding(g, hub, rim))


def _meets(g: Graph, x: int, side: set) -> bool:
    return any(w in side for w in g.neighbors(x))


def _linking_path(
    g: Graph, allowed: set, sources: list, targets: list
) -> tuple[int, ...]:
    """Shortest path inside ``allowed`` from any source to any target.

    Breadth-first with ascending tie-breaking.  A vertex lying in both
    lists is itself a one-vertex path.  The caller guarantees both lists
    are nonempty and connected through ``allowed``; a miss means the
    minor model lied, and raises.
    """
    target_set = set(targets)
    parent: dict[int, int | None] = {s: None for s in sorted(sources)}
    queue = deque(sorted(sources))
    while queue:
        w = queue.popleft()
        if w in target_set:
            path = [w]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return tuple(reversed(path))
        for z in g.neighbors(w):
            if z in allowed and z not in parent:
                parent[z] = w
                queue.append(z)
    raise InternalInvariantError(
        "model sides fail to link", {"sources": sources, "targets": targets}
    )


def _first_chord(g: Graph, cycle: tuple[int, ...]):
    m = len(cycle)
    for i in range(m):
        for j in range(i + 1, m):
            if j == i + 1 or (i == 0 and j == m - 1):
                continue
            if g.has_edge(cycle[i], cycle[j]):
                return i, j
    return None


def _induced_cycle(g: Graph, cycle: tuple[int, ...]):
    """Shortcut chords until the cycle is chordless.

    The shortest-path construction never leaves a chord, so the loop body
    is believed unreachable; it stays as a guarded fallback and warns
    loudly when it fires instead of corrupting the extraction.
    """
    repaired = False
    while True:
        chord = _first_chord(g, cycle)
        if chord is None:
            return cycle, repaired
        repaired = True
        warnings.warn("cycle repair engaged: a shortest-path fusion left a chord")
        i, j = chord
        one = cycle[i : j + 1]
        other = cycle[j:] + cycle[: i + 1]
        cycle = one if len(one) <= len(other) else other


def _attached_vertex_obstruction(g: Graph, cycle: tuple[int, ...]):
    """Theta or wheel from an outside vertex with >= 2 cycle neighbours."""
    on_cycle = set(cycle)
    for w in range(g.n):
        if w in on_cycle:
            continue
        held = [c for c in cycle if g.has_edge(w, c)]
        if len(held) >= 3:
            return _wheel_embedding(g, w, cycle)
        if len(held) == 2:
            p, q = held
            if g.has_edge(p, q):
                raise InternalInvariantError(
                    "adjacent cycle neighbours outside a triangle-free host",
                    {"vertex": w, "held": held},
                )
            near, far = _arcs_between(cycle, p, q)
            return _theta_embedding(g, p, q, [near, far, [w]], False)
    return None


def _arcs_between(cycle: tuple[int, ...], a: int, b: int):
    """Interiors of the two cycle arcs, each ordered from ``a`` to ``b``."""
    i, j = cycle.index(a), cycle.index(b)
    if i < j:
        fwd = list(cycle[i + 1 : j])
        back = list(reversed(cycle[j + 1 :] + cycle[:i]))
    else:
        fwd = list(cycle[i + 1 :] + cycle[:j])
        back = list(reversed(cycle[j + 1 : i]))
    return fwd, back


def _shortest_outside_link(g: Graph, cycle: tuple[int, ...]):
    """Shortest path between non-adjacent cycle vertices, interior outside.

    Pairs are scanned in ascending vertex order and strictly shorter
    finds replace earlier ones, so the result is deterministic.  On a
    chordless cycle non-adjacent means non-consecutive.
    """
    on_cycle = set(cycle)
    best = None
    for a, b in combinations(sorted(on_cycle), 2):
        if g.has_edge(a, b):
            continue
        path = _outside_path(g, on_cycle, a, b)
        if path is not None and (best is None or len(path) < len(best)):
            best = path
    return best


def _outside_path(g: Graph, on_cycle: set, a: int, b: int):
    parent: dict[int, int | None] = {a: None}
    queue = deque([a])
    while queue:
        w = queue.popleft()
        for z in g.neighbors(w):
            if z == b:
                path = [b, w]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return tuple(reversed(path))
            if z not in on_cycle and z not in parent:
                parent[z] = w
                queue.append(z)
    return None


def extract_from_k23(g: Graph, model: MinorModel) -> Embedding:
    """Induced theta or closed theta on a fewest-vertex subdivision.

    Minimality makes each branch path chordless apart from a possible
    edge between the two branch vertices, and a K4-free host admits no
    edge between the interiors of different paths; both facts are checked
    rather than trusted.  The branch edge decides open versus closed.
    """
    ok, triangle = is_triangle_free(g)
    if not ok:
        raise PreconditionError(
            f"extraction needs a triangle-free host, found triangle {triangle}"
        )
    if model.pattern != "K23" or not model.validate(g):
        raise PreconditionError("extract_from_k23 needs a valid subdivision")
    u, v = model.branch
    for path in model.paths:
        for i, p in enumerate(path):
            for q in path[i + 2 :]:
                if g.has_edge(p, q) and {p, q} != {u, v}:
                    raise InternalInvariantError(
                        "fewest-vertex subdivision carries a chord",
                        {"model": model, "chord": (p, q)},
                    )
    inners = [list(path[1:-1]) for path in model.paths]
    for one, two in combinations(inners, 2):
        if any(g.has_edge(p, q) for p in one for q in two):
            raise InternalInvariantError(
                "edge between path interiors in a K4-free host", {"model": model}
            )
    return _checked(g, _theta_embedding(g, u, v, inners, g.has_edge(u, v)))


# ---------------------------------------------------------------------------
# the decider


def outerplanar_hamiltonian(g: Graph) -> HamCycle:
    """The unique Hamiltonian cycle of a two-connected outerplanar graph."""
    two, _ = is_two_connected(g)
    if not two:
        raise PreconditionError("outerplanar_hamiltonian needs a two-connected graph")
    cycle = hamiltonian_cycle(g)
    if cycle is None:
        raise PreconditionError("outerplanar_hamiltonian needs an outerplanar graph")
    return _checked(g, cycle)


def tf_certify(g: Graph) -> HamCycle | Embedding:
    """Hamiltonian cycle or induced theta / closed theta / wheel embedding.

    Raises PreconditionError unless the graph is triangle-free and
    two-connected.  A K4 minor is tried first, then a K_{2,3} minor;
    containing neither makes the graph outerplanar, where the cycle
    always exists.  Whatever comes back has been validated against the
    host.
    """
    ok, triangle = is_triangle_free(g)
    if not ok:
        raise PreconditionError(
            f"tf_certify needs a triangle-free graph, found triangle {triangle}"
        )
    two, _ = is_two_connected(g)
    if not two:
        raise PreconditionError("tf_certify needs a two-connected graph")
    model = find_subdivision(g, "K4")
    if model is not None:
        return extract_from_k4(g, model)
    model = find_subdivision(g, "K23")
    if model is not None:
        return extract_from_k23(g, model)
    return outerplanar_hamiltonian(g)


def _checked(g: Graph, cert):
    if not cert.validate(g):
        raise InternalInvariantError(
            "certificate failed validation", state={"certificate": cert}
        )
    return cert


def _induces_connected(g: Graph, block: set) -> bool:
    start = min(block)
    seen = {start}
    stack = [start]
    while stack:
        w = stack.pop()
        for z in g.neighbors(w):
            if z in block and z not in seen:
                seen.add(z)
                stack.append(z)
    return seen == block


def _sides_joined(g: Graph, one, two) -> bool:
    return any(g.has_edge(x, y) for x in one for y in two)
