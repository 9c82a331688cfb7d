"""Named graph families: canonical generators and exact recognizers.

Three fixed graphs (claw, net, snare) and four parametric families (suns,
novae, open and closed thetas, wheels).  ``generate`` produces the canonical
labeling of a family member; ``recognize_obstruction`` inverts it up to
isomorphism and reports normalized parameters.

The recognizers are structural, not permutation searches: each family has a
rigid degree profile, and membership reduces to degree counts plus a couple
of deterministic chain walks.  They therefore work for any input size, not
just the range ``canonical_form`` covers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import PreconditionError
from .graphs import Graph, induced_subgraph, is_isomorphic


@dataclass(frozen=True)
class ObstructionKind:
    """A family tag plus its parameters.

    ``params`` is empty for the fixed families, ``(n,)`` for suns and novae,
    the ascending path lengths for thetas, and ``(m, spoke positions)`` for
    wheels.  Instances built through the module factories are normalized:
    theta lengths sorted, wheel spokes rotated/reflected to their
    lexicographically least form.
    """

    name: str
    params: tuple = ()

    def param_text(self) -> str:
        """Parameters as the CLI prints and accepts them."""
        if self.name == "wheel":
            m, spokes = self.params
            return "%d;%s" % (m, ",".join(str(s) for s in spokes))
        return ",".join(str(p) for p in self.params)

    def __str__(self) -> str:
        text = self.param_text()
        return self.name if not text else "%s(%s)" % (self.name, text)


# ---------------------------------------------------------------------------
# factories


def claw() -> ObstructionKind:
    return ObstructionKind("claw")


def net() -> ObstructionKind:
    return ObstructionKind("net")


def snare() -> ObstructionKind:
    return ObstructionKind("snare")


def sun(n: int) -> ObstructionKind:
    if n < 2:
        raise PreconditionError(f"sun order must be at least 2, got {n}")
    return ObstructionKind("sun", (n,))


def nova(n: int) -> ObstructionKind:
    if n < 2:
        raise PreconditionError(f"nova order must be at least 2, got {n}")
    return ObstructionKind("nova", (n,))


def theta(l1: int, l2: int, l3: int) -> ObstructionKind:
    lengths = tuple(sorted((l1, l2, l3)))
    if lengths[0] < 2:
        raise PreconditionError(
            f"theta path lengths must all be at least 2, got {(l1, l2, l3)}"
        )
    return ObstructionKind("theta", lengths)


def closed_theta(l1: int, l2: int, l3: int) -> ObstructionKind:
    lengths = tuple(sorted((l1, l2, l3)))
    if lengths[0] < 2:
        raise PreconditionError(
            f"closed theta path lengths must all be at least 2, got {(l1, l2, l3)}"
        )
    return ObstructionKind("closed-theta", lengths)


def wheel(m: int, spokes) -> ObstructionKind:
    spoke_set = tuple(sorted({int(s) for s in spokes}))
    if m < 4:
        raise PreconditionError(f"wheel cycle length must be at least 4, got {m}")
    if len(spoke_set) < 3:
        raise PreconditionError(f"wheel needs at least 3 spokes, got {spoke_set}")
    if spoke_set[0] < 0 or spoke_set[-1] >= m:
        raise PreconditionError(
            f"spoke positions must lie in 0..{m - 1}, got {spoke_set}"
        )
    return ObstructionKind("wheel", (m, _normalize_spokes(m, spoke_set)))


def _normalize_spokes(m: int, spokes: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least image under rotation and reflection of Z_m."""
    best = None
    for flip in (False, True):
        pts = [(m - s) % m for s in spokes] if flip else list(spokes)
        # the least image contains 0, so only rotations by a spoke matter
        for r in pts:
            cand = tuple(sorted((s - r) % m for s in pts))
            if best is None or cand < best:
                best = cand
    return best


_CONSTRUCTORS = {
    "claw": claw,
    "net": net,
    "snare": snare,
    "sun": sun,
    "nova": nova,
    "theta": theta,
    "closed-theta": closed_theta,
    "wheel": wheel,
}


def _revalidated(kind: ObstructionKind) -> ObstructionKind:
    ctor = _CONSTRUCTORS.get(kind.name)
    if ctor is None:
        raise PreconditionError(f"unknown family {kind.name!r}")
    try:
        return ctor(*kind.params)
    except TypeError:
        raise PreconditionError(
            f"bad parameters for {kind.name}: {kind.params!r}"
        ) from None


# ---------------------------------------------------------------------------
# generation

_NET_EDGES = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]


def _sun_edges(k: int) -> list[tuple[int, int]]:
    edges = [(i, (i + 1) % (2 * k)) for i in range(2 * k)]
    edges += [(2 * i, 2 * j) for i in range(k) for j in range(i + 1, k)]
    return edges


def _theta_edges(lengths: tuple[int, ...]) -> tuple[int, list[tuple[int, int]]]:
    # branch vertices 0 and 1; interiors numbered path by path
    edges = []
    nxt = 2
    for length in lengths:
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return nxt, edges


def generate(kind: ObstructionKind) -> Graph:
    """Canonical labeled construction of a family member.

    Cycle/path vertices come first, then any apex or hub.  Raises
    PreconditionError for invalid parameters or an unknown family name.
    """
    kind = _revalidated(kind)
    name, params = kind.name, kind.params
    if name == "claw":
        return Graph(4, [(0, 1), (0, 2), (0, 3)])
    if name == "net":
        return Graph(6, _NET_EDGES)
    if name == "snare":
        return Graph(7, _NET_EDGES + [(v, 6) for v in range(6)])
    if name == "sun":
        (k,) = params
        return Graph(2 * k, _sun_edges(k))
    if name == "nova":
        (k,) = params
        return Graph(2 * k + 1, _sun_edges(k) + [(2 * i, 2 * k) for i in range(k)])
    if name == "theta":
        n, edges = _theta_edges(params)
        return Graph(n, edges)
    if name == "closed-theta":
        n, edges = _theta_edges(params)
        return Graph(n, edges + [(0, 1)])
    m, spokes = params
    rim = [(i, (i + 1) % m) for i in range(m)]
    return Graph(m + 1, rim + [(s, m) for s in spokes])


# ---------------------------------------------------------------------------
# recognition


def _match_claw(g: Graph):
    # 4 vertices, 3 edges, degrees (3,1,1,1) force the star
    if g.n == 4 and g.edge_count == 3 and g.degree_sequence() == (1, 1, 1, 3):
        return claw()
    return None


def _match_net(g: Graph):
    if g.n == 6 and g.edge_count == 6 and g.degree_sequence() == (1, 1, 1, 3, 3, 3):
        if is_isomorphic(g, generate(net())):
            return net()
    return None


def _match_snare(g: Graph):
    if g.n == 7 and g.edge_count == 12 and g.degree_sequence() == (2, 2, 2, 4, 4, 4, 6):
        if is_isomorphic(g, generate(snare())):
            return snare()
    return None


def _match_sun(g: Graph):
    n = g.n
    if n < 4 or n % 2:
        return None
    k = n // 2
    if g.degree_sequence() != tuple(sorted([2] * k + [k + 1] * k)):
        return None
    evens = [v for v in range(n) if g.degree(v) == k + 1]
    odds = [v for v in range(n) if g.degree(v) == 2]
    if len(evens) != k:
        return None
    even_mask = sum(1 << e for e in evens)
    for a, b in combinations(evens, 2):
        if not g.has_edge(a, b):
            return None
    for o in odds:
        if g.adjacency_mask(o) & ~even_mask:
            return None
    incident = {e: [o for o in odds if g.has_edge(e, o)] for e in evens}
    if any(len(pair) != 2 for pair in incident.values()):
        return None
    # treat each degree-2 vertex as an edge of a multigraph on the clique;
    # a sun is exactly the case where those edges trace one cycle through
    # all k clique vertices (for k = 2 that cycle is a doubled edge)
    start = evens[0]
    o = incident[start][0]
    cur = start
    seen_evens, seen_odds = 1, 1
    while True:
        a, b = g.neighbors(o)
        nxt = b if a == cur else a
        if nxt == start:
            break
        seen_evens += 1
        if seen_evens > k:
            return None
        p, q = incident[nxt]
        o = q if p == o else p
        seen_odds += 1
        cur = nxt
    if seen_evens != k or seen_odds != k:
        return None
    return sun(k)


def _match_nova(g: Graph):
    n = g.n
    if n < 5 or n % 2 == 0:
        return None
    k = (n - 1) // 2
    if g.degree_sequence() != tuple(sorted([2] * k + [k] + [k + 2] * k)):
        return None
    # k = 2 leaves the apex degree equal to the cycle degrees, so several
    # candidates may need a try; for k >= 3 the degree-k vertex is unique
    for apex in (v for v in range(n) if g.degree(v) == k):
        evens = g.neighbors(apex)
        if len(evens) != k or any(g.degree(e) != k + 2 for e in evens):
            continue
        sub, _ = induced_subgraph(g, [v for v in range(n) if v != apex])
        if _match_sun(sub) == sun(k):
            return nova(k)
    return None


def _chain_walk(g: Graph, start: int, first: int) -> tuple[int, list[int]]:
    """Follow a chain of degree-2 vertices from ``start`` through ``first``.

    Returns the first vertex of degree != 2 reached and the interior chain.
    """
    prev, cur = start, first
    interior = []
    while g.degree(cur) == 2:
        interior.append(cur)
        a, b = g.neighbors(cur)
        prev, cur = cur, (b if a == prev else a)
    return cur, interior


def _theta_walks(g: Graph, u: int, v: int, skip_edge: bool):
    """Path lengths of the three chains from u to v, or None."""
    lengths = []
    seen = 2
    for first in g.neighbors(u):
        if skip_edge and first == v:
            continue
        end, interior = _chain_walk(g, u, first)
        if end != v:
            return None
        lengths.append(len(interior) + 1)
        seen += len(interior)
    if seen != g.n:
        return None
    return lengths


def _match_theta(g: Graph):
    n = g.n
    if n < 5 or g.edge_count != n + 1:
        return None
    branch = [w for w in range(n) if g.degree(w) == 3]
    if len(branch) != 2 or any(g.degree(w) not in (2, 3) for w in range(n)):
        return None
    u, v = branch
    if g.has_edge(u, v):
        return None
    lengths = _theta_walks(g, u, v, skip_edge=False)
    return None if lengths is None else theta(*lengths)


def _match_closed_theta(g: Graph):
    n = g.n
    if n < 5 or g.edge_count != n + 2:
        return None
    branch = [w for w in range(n) if g.degree(w) == 4]
    if len(branch) != 2 or any(g.degree(w) not in (2, 4) for w in range(n)):
        return None
    u, v = branch
    if not g.has_edge(u, v):
        return None
    lengths = _theta_walks(g, u, v, skip_edge=True)
    return None if lengths is None else closed_theta(*lengths)


def _rim_cycle_order(g: Graph, hub: int):
    """Vertex order of g - hub if that is a single cycle, else None."""
    n = g.n
    rim_mask = ((1 << n) - 1) ^ (1 << hub)
    rim = [v for v in range(n) if v != hub]
    for v in rim:
        if (g.adjacency_mask(v) & rim_mask).bit_count() != 2:
            return None
    start = rim[0]
    order = [start]
    prev = start
    cur = min(x for x in g.neighbors(start) if x != hub)
    while cur != start:
        order.append(cur)
        a, b = (x for x in g.neighbors(cur) if x != hub)
        prev, cur = cur, (b if a == prev else a)
    return order if len(order) == len(rim) else None


def _match_wheel(g: Graph):
    n = g.n
    if n < 5:
        return None
    # several vertices may qualify as the hub; taking the least normalized
    # spoke set keeps the answer independent of the input labeling
    best = None
    for hub in range(n):
        if g.degree(hub) < 3:
            continue
        order = _rim_cycle_order(g, hub)
        if order is None:
            continue
        hub_mask = g.adjacency_mask(hub)
        positions = tuple(i for i, v in enumerate(order) if hub_mask >> v & 1)
        spokes = _normalize_spokes(n - 1, positions)
        if best is None or spokes < best:
            best = spokes
    return None if best is None else ObstructionKind("wheel", (n - 1, best))


_MATCHERS = (
    _match_claw,
    _match_net,
    _match_snare,
    _match_sun,
    _match_nova,          # before closed theta: nova(2) is also closed-theta(2,2,2)
    _match_theta,
    _match_closed_theta,
    _match_wheel,
)


def recognize_obstruction(g: Graph):
    """The family kind ``g`` is isomorphic to, or None.

    One graph lies in two families: the 2-nova coincides with the closed
    theta of three length-2 paths.  Novae take precedence, so that graph is
    reported as nova(2).
    """
    for matcher in _MATCHERS:
        kind = matcher(g)
        if kind is not None:
            return kind
    return None


# ---------------------------------------------------------------------------
# triangles


def is_triangle_free(g: Graph) -> tuple[bool, tuple[int, int, int] | None]:
    """Exact triangle test; reports the lexicographically least triangle."""
    for u in range(g.n):
        mu = g.adjacency_mask(u)
        for v in g.neighbors(u):
            if v <= u:
                continue
            common = (mu & g.adjacency_mask(v)) >> (v + 1)
            if common:
                w = (common & -common).bit_length() + v
                return False, (u, v, w)
    return True, None
