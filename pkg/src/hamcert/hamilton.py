"""Exact Hamiltonian cycle and path search.

Backtracking with three sound prunes: the not-yet-visited region must stay
connected (together with the current endpoint and the anchor), every
unvisited vertex must keep two usable cycle neighbours, and the anchor must
keep an unvisited neighbour to close through.  Degree-2 vertices force both
their edges into any Hamiltonian cycle, which gives a cheap static
infeasibility test before the search starts.

Branching is deterministic (anchor 0, neighbours ascending), so for a fixed
input the returned certificate is always the same.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph


@dataclass(frozen=True)
class HamCycle:
    """A spanning cycle, as the vertex order (0, ...)."""

    order: tuple[int, ...]

    def validate(self, g: Graph) -> bool:
        n = g.n
        if n < 3 or len(self.order) != n or sorted(self.order) != list(range(n)):
            return False
        return all(
            g.has_edge(self.order[i], self.order[(i + 1) % n]) for i in range(n)
        )


@dataclass(frozen=True)
class HamPath:
    """A spanning path, as the vertex order."""

    order: tuple[int, ...]

    def validate(self, g: Graph) -> bool:
        n = g.n
        if n < 1 or len(self.order) != n or sorted(self.order) != list(range(n)):
            return False
        return all(g.has_edge(self.order[i], self.order[i + 1]) for i in range(n - 1))


def canonical_cycle_order(order: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate to start at 0 and fix the direction (second < last)."""
    i = order.index(0)
    rotated = order[i:] + order[:i]
    if len(rotated) > 2 and rotated[1] > rotated[-1]:
        rotated = rotated[:1] + tuple(reversed(rotated[1:]))
    return rotated


def _connected_within(masks, allowed: int, start: int) -> bool:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            f ^= low
            nxt |= masks[low.bit_length() - 1]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen & allowed == allowed


def _forced_edges_infeasible(g: Graph) -> bool:
    """Edges at degree-2 vertices lie on every Hamiltonian cycle; reject
    early when they already overload a vertex or close a short cycle."""
    n = g.n
    forced: set[tuple[int, int]] = set()
    for v in range(n):
        if g.degree(v) == 2:
            for u in g.neighbors(v):
                forced.add((min(u, v), max(u, v)))
    deg = [0] * n
    for u, v in forced:
        deg[u] += 1
        deg[v] += 1
        if deg[u] > 2 or deg[v] > 2:
            return True
    # forced edges all have degree <= 2 here: any cycle they form must span
    adj: dict[int, list[int]] = {}
    for u, v in forced:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen: set[int] = set()
    for s in adj:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        edges = 0
        while stack:
            x = stack.pop()
            for y in adj.get(x, ()):
                edges += 1
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        if edges // 2 == len(comp) and len(comp) < n:
            return True
    return False


def hamiltonian_cycle(g: Graph) -> HamCycle | None:
    """A Hamiltonian cycle if one exists, else None.  Exact."""
    n = g.n
    if n < 3:
        return None
    masks = [g.adjacency_mask(v) for v in range(n)]
    if any(m.bit_count() < 2 for m in masks):
        return None
    full = (1 << n) - 1
    if not _connected_within(masks, full, 0):
        return None
    if _forced_edges_infeasible(g):
        return None

    path = [0]

    def extend(v: int, visited: int) -> bool:
        unvisited = full & ~visited
        if unvisited == 0:
            return bool(masks[v] >> 0 & 1)
        if masks[0] & unvisited == 0:
            return False
        region = unvisited | (1 << v) | 1
        if not _connected_within(masks, region, v):
            return False
        rest = unvisited
        while rest:
            low = rest & -rest
            rest ^= low
            if (masks[low.bit_length() - 1] & region).bit_count() < 2:
                return False
        cand = masks[v] & unvisited
        while cand:
            low = cand & -cand
            cand ^= low
            u = low.bit_length() - 1
            path.append(u)
            if extend(u, visited | low):
                return True
            path.pop()
        return False

    if extend(0, 1):
        return HamCycle(canonical_cycle_order(tuple(path)))
    return None


def hamiltonian_path(g: Graph) -> HamPath | None:
    """A Hamiltonian path if one exists, else None.  Exact.

    Reduces to the cycle search: a spanning path exists exactly when the
    graph plus one vertex adjacent to everything has a spanning cycle.
    """
    n = g.n
    if n == 0:
        return None
    if n == 1:
        return HamPath((0,))
    apex = n
    edges = list(g.edges()) + [(v, apex) for v in range(n)]
    cyc = hamiltonian_cycle(Graph(n + 1, edges))
    if cyc is None:
        return None
    i = cyc.order.index(apex)
    order = cyc.order[i + 1 :] + cyc.order[:i]
    if order[0] > order[-1]:
        order = tuple(reversed(order))
    return HamPath(order)
