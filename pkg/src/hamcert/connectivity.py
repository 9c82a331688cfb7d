"""Connectivity predicates and subset-removal witnesses of non-Hamiltonicity.

A ``ToughnessWitness`` is a vertex set X whose removal leaves more than |X|
connected components.  Removing the vertices of any spanning cycle splits it
into at most max(1, |X|) arcs, so such an X proves the graph has no
Hamiltonian cycle.  Witnesses carry everything needed to re-check them
without trusting the search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph

DISCONNECTED = "disconnected"
CUT_VERTEX = "cut-vertex"
TOO_SMALL = "too-small"


@dataclass(frozen=True)
class CutWitness:
    """Evidence that a graph is not 2-connected.

    kind is one of:
      - "disconnected": ``vertices`` holds two vertices in different components
      - "cut-vertex":   ``vertices`` holds one vertex whose removal disconnects
      - "too-small":    fewer than three vertices, no witness vertices needed
    """

    kind: str
    vertices: tuple[int, ...] = ()

    def validate(self, g: Graph) -> bool:
        if self.kind == TOO_SMALL:
            return g.n < 3
        if self.kind == DISCONNECTED:
            if len(self.vertices) != 2:
                return False
            u, v = self.vertices
            return _component_of(g, u, exclude=-1).isdisjoint({v})
        if self.kind == CUT_VERTEX:
            if len(self.vertices) != 1:
                return False
            (v,) = self.vertices
            rest = [u for u in range(g.n) if u != v]
            if not rest:
                return False
            reached = _component_of(g, rest[0], exclude=v)
            return len(reached) < len(rest)
        return False


@dataclass(frozen=True)
class ToughnessWitness:
    """X and the components of G - X, with more components than |X|."""

    x: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]

    def validate(self, g: Graph) -> bool:
        xs = set(self.x)
        if len(xs) != len(self.x):
            return False
        if len(self.components) <= len(self.x) or len(self.components) < 2:
            return False
        listed = [v for comp in self.components for v in comp]
        if sorted(listed) != sorted(set(range(g.n)) - xs):
            return False
        actual = _components_without(g, xs)
        return sorted(self.components) == sorted(tuple(c) for c in actual)


def _component_of(g: Graph, start: int, exclude: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u != exclude and u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def _components_without(g: Graph, removed: set[int]) -> list[list[int]]:
    seen = set(removed)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = []
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Maximal connected pieces, each sorted, ordered by minimum vertex."""
    return [tuple(c) for c in _components_without(g, set())]


def is_two_connected(g: Graph) -> tuple[bool, CutWitness | None]:
    """Decide 2-connectivity; on failure return an independently checkable witness.

    A triangle counts as 2-connected; graphs on fewer than three vertices do
    not.  Uses the DFS lowpoint method; when several cut vertices exist the
    lowest-indexed one is reported.
    """
    n = g.n
    if n < 3:
        return False, CutWitness(TOO_SMALL)
    comps = connected_components(g)
    if len(comps) > 1:
        return False, CutWitness(DISCONNECTED, (comps[0][0], comps[1][0]))

    num = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cuts = set()
    counter = 0
    # iterative DFS from 0; neighbors ascending keeps the result deterministic
    stack: list[tuple[int, int]] = [(0, 0)]
    order: list[int] = []
    root_children = 0
    while stack:
        v, i = stack.pop()
        if i == 0:
            num[v] = low[v] = counter
            counter += 1
            order.append(v)
        nbrs = g.neighbors(v)
        while i < len(nbrs):
            u = nbrs[i]
            i += 1
            if num[u] == -1:
                parent[u] = v
                if v == 0:
                    root_children += 1
                stack.append((v, i))
                stack.append((u, 0))
                break
            if u != parent[v]:
                low[v] = min(low[v], num[u])
        else:
            p = parent[v]
            if p != -1:
                low[p] = min(low[p], low[v])
                if p != 0 and low[v] >= num[p]:
                    cuts.add(p)
    if root_children >= 2:
        cuts.add(0)
    if cuts:
        return False, CutWitness(CUT_VERTEX, (min(cuts),))
    return True, None


def toughness_witness(g: Graph, max_size: int) -> ToughnessWitness | None:
    """Smallest X (then lexicographically first) with c(G - X) > |X|.

    Searches subsets exhaustively in increasing size up to max_size (clamped
    to n).  X = {} qualifies only when the graph is already disconnected:
    deleting k >= 1 vertices of a spanning cycle leaves at most k arcs, while
    deleting none leaves one, so a valid witness always has at least two
    components.  A returned witness proves there is no Hamiltonian cycle.
    """
    bound = min(max_size, g.n)
    for size in range(bound + 1):
        for xs in combinations(range(g.n), size):
            comps = _components_without(g, set(xs))
            if len(comps) > size and len(comps) >= 2:
                return ToughnessWitness(tuple(xs), tuple(tuple(c) for c in comps))
    return None
