"""Induced-pattern search: fixed patterns and parametric family members.

``find_induced`` is a generic backtracking embedder.  The two family
searches are shaped differently on purpose: the split side loops a short,
linear list of generated patterns through the generic embedder, while the
triangle-free side enumerates branch vertices, chordless paths and spoked
chordless cycles directly, because its pattern space (all wheels, all path
length triples) grows too fast to instantiate.

Every embedding is induced: adjacency and non-adjacency both carry over.
All searches scan candidates in ascending vertex order, so witnesses are
deterministic for a given labeled host.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantError, PreconditionError
from .families import (
    ObstructionKind,
    closed_theta,
    generate,
    is_triangle_free,
    nova,
    snare,
    theta,
    wheel,
)
from .graphs import Graph


@dataclass(frozen=True)
class Embedding:
    """An induced copy of ``pattern`` inside some host.

    ``mapping[i]`` is the host vertex playing pattern vertex ``i``.  When the
    pattern came from a named family, ``kind`` carries its parameters and
    ``pattern`` equals ``generate(kind)``.
    """

    pattern: Graph
    mapping: tuple[int, ...]
    kind: ObstructionKind | None = None

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(self.mapping))

    def validate(self, g: Graph) -> bool:
        p, m = self.pattern, self.mapping
        if len(m) != p.n or len(set(m)) != p.n:
            return False
        if any(not 0 <= v < g.n for v in m):
            return False
        for i in range(p.n):
            for j in range(i + 1, p.n):
                if p.has_edge(i, j) != g.has_edge(m[i], m[j]):
                    return False
        if self.kind is not None and generate(self.kind) != p:
            return False
        return True


def find_induced(g: Graph, pattern: Graph) -> Embedding | None:
    """First induced embedding of ``pattern`` in ``g`` in search order, or None."""
    k, n = pattern.n, g.n
    if k > n:
        return None
    pdeg = [pattern.degree(i) for i in range(k)]
    gmask = [g.adjacency_mask(v) for v in range(n)]
    full = (1 << n) - 1
    mapping = [0] * k

    def place(i: int, used: int) -> bool:
        if i == k:
            return True
        allowed = full & ~used
        for j in range(i):
            if pattern.has_edge(j, i):
                allowed &= gmask[mapping[j]]
            else:
                allowed &= ~gmask[mapping[j]]
        rest = allowed
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            if g.degree(v) < pdeg[i]:
                continue
            mapping[i] = v
            if place(i + 1, used | low):
                return True
        return False

    return Embedding(pattern, tuple(mapping)) if place(0, 0) else None


# ---------------------------------------------------------------------------
# split-side obstructions


def find_split_obstruction(g: Graph) -> Embedding | None:
    """Induced snare or n-nova, searching nova(2), snare, then larger novae."""
    n = g.n
    kinds = []
    if n >= 5:
        kinds.append(nova(2))
    if n >= 7:
        kinds.append(snare())
        kinds.extend(nova(k) for k in range(3, (n - 1) // 2 + 1))
    for kind in kinds:
        found = find_induced(g, generate(kind))
        if found is not None:
            return Embedding(found.pattern, found.mapping, kind)
    return None


# ---------------------------------------------------------------------------
# triangle-free obstructions


def _without_edge(g: Graph, u: int, v: int) -> Graph:
    drop = (min(u, v), max(u, v))
    return Graph(g.n, [e for e in g.edges() if e != drop])


def _chordless_paths(g: Graph, u: int, v: int, allowed: int):
    """Interior tuples of chordless u-v paths of length >= 2.

    Interiors come from ``allowed`` (which must exclude u and v).  A path is
    emitted before any of its extensions, and candidates are scanned in
    ascending order.
    """
    masks = [g.adjacency_mask(w) for w in range(g.n)]

    def rec(w: int, banned: int, interior: list[int]):
        cand = masks[w] & allowed & ~banned
        if interior and masks[w] >> v & 1 and not banned >> v & 1:
            yield tuple(interior)
        while cand:
            low = cand & -cand
            cand ^= low
            x = low.bit_length() - 1
            interior.append(x)
            yield from rec(x, banned | masks[w] | low, interior)
            interior.pop()

    yield from rec(u, 1 << u, [])


def _disjoint_paths(g: Graph, u: int, v: int, allowed: int, want: int):
    """``want`` chordless u-v paths, internally disjoint, no cross edges."""
    if want == 0:
        return []
    for interior in _chordless_paths(g, u, v, allowed):
        imask = 0
        nb = 0
        for x in interior:
            imask |= 1 << x
            nb |= g.adjacency_mask(x)
        rest = _disjoint_paths(g, u, v, allowed & ~imask & ~nb, want - 1)
        if rest is not None:
            return [list(interior)] + rest
    return None


def _theta_embedding(g: Graph, u: int, v: int, paths, closed: bool) -> Embedding:
    paths = sorted(paths, key=lambda p: (len(p), p))
    lengths = [len(p) + 1 for p in paths]
    kind = closed_theta(*lengths) if closed else theta(*lengths)
    mapping = [u, v]
    for p in paths:
        mapping.extend(p)
    return Embedding(generate(kind), tuple(mapping), kind)


def _find_theta_like(g: Graph, closed: bool) -> Embedding | None:
    n = g.n
    need = 4 if closed else 3
    full = (1 << n) - 1
    for u in range(n):
        if g.degree(u) < need:
            continue
        for v in range(u + 1, n):
            if g.degree(v) < need or g.has_edge(u, v) != closed:
                continue
            # for a closed theta the uv edge is a chord of every branch
            # path, so the path search runs with that edge removed
            h = _without_edge(g, u, v) if closed else g
            allowed = full ^ (1 << u) ^ (1 << v)
            paths = _disjoint_paths(h, u, v, allowed, 3)
            if paths is not None:
                return _theta_embedding(g, u, v, paths, closed)
    return None


def _spoked_cycle(g: Graph, hub: int):
    """A chordless cycle avoiding ``hub`` with >= 3 hub neighbours on it."""
    n = g.n
    masks = [g.adjacency_mask(w) for w in range(n)]
    spoke_mask = masks[hub]

    def rec(a: int, w: int, banned: int, path: list[int]):
        cand = masks[w] & ~banned
        if len(path) >= 2:
            closers = cand & masks[a]
            while closers:
                low = closers & -closers
                closers ^= low
                x = low.bit_length() - 1
                cyc = (a, *path, x)
                cmask = 0
                for y in cyc:
                    cmask |= 1 << y
                if (cmask & spoke_mask).bit_count() >= 3:
                    return cyc
        # interior vertices must stay off N(a): only the final vertex of
        # the cycle may close back to the anchor
        ext = cand & ~masks[a]
        while ext:
            low = ext & -ext
            ext ^= low
            x = low.bit_length() - 1
            found = rec(a, x, banned | masks[w] | low, path + [x])
            if found is not None:
                return found
        return None

    for a in range(n):
        if a == hub:
            continue
        # anchor at the least cycle vertex: everything else stays above a
        base = ((1 << (a + 1)) - 1) | (1 << hub)
        firsts = masks[a] & ~base
        while firsts:
            low = firsts & -firsts
            firsts ^= low
            c1 = low.bit_length() - 1
            found = rec(a, c1, base | low, [c1])
            if found is not None:
                return found
    return None


def _wheel_embedding(g: Graph, hub: int, cycle: tuple[int, ...]) -> Embedding:
    m = len(cycle)
    hmask = g.adjacency_mask(hub)
    positions = tuple(i for i, w in enumerate(cycle) if hmask >> w & 1)
    kind = wheel(m, positions)
    target = kind.params[1]
    # rotate/reflect the host cycle until the spokes land on the
    # normalized positions the generated pattern uses
    for ordr in (list(cycle), [cycle[0]] + list(reversed(cycle[1:]))):
        for r in range(m):
            rim = ordr[r:] + ordr[:r]
            pos = tuple(sorted(i for i, w in enumerate(rim) if hmask >> w & 1))
            if pos == target:
                return Embedding(generate(kind), tuple(rim) + (hub,), kind)
    raise InternalInvariantError("wheel spoke alignment failed", (cycle, positions))


def _find_wheel(g: Graph) -> Embedding | None:
    for hub in range(g.n):
        if g.degree(hub) < 3:
            continue
        cycle = _spoked_cycle(g, hub)
        if cycle is not None:
            return _wheel_embedding(g, hub, cycle)
    return None


def find_tf_obstruction(g: Graph) -> Embedding | None:
    """Induced theta, closed theta, or wheel in a triangle-free host.

    Raises PreconditionError when the host has a triangle; in triangle-free
    hosts every closed theta and wheel found is automatically triangle-free.
    """
    ok, tri = is_triangle_free(g)
    if not ok:
        raise PreconditionError(f"host is not triangle-free: triangle {tri}")
    emb = _find_theta_like(g, closed=False)
    if emb is None:
        emb = _find_theta_like(g, closed=True)
    if emb is None:
        emb = _find_wheel(g)
    return emb
