"""Core graph type, graph6 I/O, DOT export, isomorphism and canonical forms.

Vertices are dense integers ``0..n-1``.  ``Graph`` instances are immutable
after construction: every operation returns a new value, so graphs are safe
to share between threads, to reuse as dictionary keys, and to pass to worker
processes.

The isomorphism routines are exact.  ``canonical_form`` is intended for
graphs with at most 12 vertices; ``is_isomorphic`` has no hard cap but is
exponential in the worst case and meant for the same desk scale.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import Graph6Error, UnsupportedGraphError

GRAPH6_PREFIX = ">>graph6<<"


class Graph:
    """Simple undirected graph with constant-time edge membership.

    Neighbour sets are exposed both as sorted tuples (ascending iteration
    order, which every search in the package relies on for determinism) and
    as integer bitmasks (fast subset arithmetic).
    """

    __slots__ = ("n", "_masks", "_nbrs", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self._masks = tuple(masks)
        self._nbrs = tuple(tuple(_bits(m)) for m in masks)
        self._m = sum(m.bit_count() for m in masks) // 2

    @property
    def edge_count(self) -> int:
        return self._m

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees in nondecreasing order."""
        return tuple(sorted(len(nb) for nb in self._nbrs))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def adjacency_mask(self, v: int) -> int:
        return self._masks[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            for v in self._nbrs[u]:
                if v > u:
                    yield (u, v)

    def with_edge(self, u: int, v: int) -> "Graph":
        """New graph with one extra edge."""
        return Graph(self.n, list(self.edges()) + [(u, v)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {list(self.edges())!r})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _pair_order(n: int) -> list[tuple[int, int]]:
    # Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    return [(i, j) for j in range(1, n) for i in range(j)]


# ---------------------------------------------------------------------------
# graph6


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 record (short form, n <= 62).

    Raises Graph6Error with a distinct message for each failure mode:
    malformed/long-form header, payload length mismatch, byte out of range,
    nonzero padding bits.
    """
    line = text.strip()
    if line.startswith(GRAPH6_PREFIX):
        line = line[len(GRAPH6_PREFIX):]
    if not line:
        raise Graph6Error("malformed header: empty record")
    data = line.encode("ascii", errors="replace")
    head = data[0]
    if head == 126:
        raise Graph6Error("malformed header: long-form (n > 62) not supported")
    if not 63 <= head <= 125:
        raise Graph6Error(f"malformed header: byte {head} outside 63..125")
    n = head - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[1:]
    if len(payload) != need:
        raise Graph6Error(
            f"payload length mismatch: expected {need} bytes for n={n}, got {len(payload)}"
        )
    bits = 0
    for b in payload:
        if not 63 <= b <= 126:
            raise Graph6Error(f"payload byte {b} out of range 63..126")
        bits = bits << 6 | (b - 63)
    total = need * 6
    pad = total - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    edges = []
    for k, (i, j) in enumerate(_pair_order(n)):
        if bits >> (total - 1 - k) & 1:
            edges.append((i, j))
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 record (n <= 62)."""
    n = g.n
    if n > 62:
        raise UnsupportedGraphError(f"graph6 short form requires n <= 62, got {n}")
    out = [chr(63 + n)]
    acc = 0
    filled = 0
    for i, j in _pair_order(n):
        acc = acc << 1 | (1 if g.has_edge(i, j) else 0)
        filled += 1
        if filled == 6:
            out.append(chr(63 + acc))
            acc, filled = 0, 0
    if filled:
        out.append(chr(63 + (acc << (6 - filled))))
    return "".join(out)


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a newline-delimited graph6 stream, skipping blank lines."""
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


# ---------------------------------------------------------------------------
# DOT export


def write_dot(g: Graph, highlight: Iterable[int] = (), name: str = "G") -> str:
    """Render one graph in DOT format, vertex labels = indices.

    ``highlight`` vertices are drawn filled; used to mark certificate
    witnesses in exported figures.
    """
    marked = set(highlight)
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(g.n):
        if v in marked:
            lines.append(f"  {v} [style=filled, fillcolor=lightblue];")
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# induced subgraphs


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on a vertex subset, relabelled to 0..k-1.

    New indices follow the sorted order of ``vertices``.  Returns the
    subgraph together with the old->new index map.
    """
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(vs)}
    edges = [
        (index[u], index[v])
        for u in vs
        for v in g.neighbors(u)
        if v > u and v in index
    ]
    return Graph(len(vs), edges), index


# ---------------------------------------------------------------------------
# colour refinement, isomorphism, canonical form


def _refine(n: int, masks: tuple[int, ...], colors: list[int]) -> list[int]:
    """Equitable refinement of a colouring; order-invariant and structural."""
    while True:
        ncol = max(colors) + 1
        cmasks = [0] * ncol
        for v, c in enumerate(colors):
            cmasks[c] |= 1 << v
        sigs = [
            (colors[v],) + tuple((masks[v] & cm).bit_count() for cm in cmasks)
            for v in range(n)
        ]
        rank = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [rank[sigs[v]] for v in range(n)]
        if new == colors:
            return colors
        colors = new


def _cells(colors: list[int]) -> list[list[int]]:
    out: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        out.setdefault(c, []).append(v)
    return [out[c] for c in sorted(out)]


def canonical_form(g: Graph) -> bytes:
    """Canonical byte string: equal iff graphs are isomorphic.  Exact, n <= 12."""
    if g.n > 12:
        raise UnsupportedGraphError(f"canonical_form supports n <= 12, got {g.n}")
    return _canonical_key(g.n, g._masks)


def _canonical_key(n: int, masks: tuple[int, ...]) -> bytes:
    if n <= 1:
        return bytes([n])
    full = (1 << n) - 1
    if all(masks[v] == (full ^ (1 << v)) for v in range(n)) or all(
        m == 0 for m in masks
    ):
        # Complete and empty graphs: every labelling gives the same form.
        cols = _perm_columns(n, masks, list(range(n)))
        return _pack_columns(n, cols)

    colors = _refine(n, masks, [0] * n)
    best: list[tuple[int, ...]] = []

    def descend(colors: list[int]) -> None:
        cells = _cells(colors)
        prefix: list[int] = []
        target: list[int] | None = None
        for cell in cells:
            if len(cell) == 1:
                prefix.append(cell[0])
            else:
                target = cell
                break
        # Columns among the fixed prefix are final; prune against the best.
        if best:
            cols = _perm_columns(len(prefix), masks, prefix)
            b = best[0]
            for j, c in enumerate(cols):
                if c > b[j]:
                    return
                if c < b[j]:
                    break
        if target is None:
            perm = [v for cell in cells for v in cell]
            cand = tuple(_perm_columns(n, masks, perm))
            if not best or cand < best[0]:
                best[:] = [cand]
            return
        for v in target:
            nxt = [2 * c for c in colors]
            nxt[v] -= 1
            descend(_refine(n, masks, nxt))

    descend(colors)
    return _pack_columns(n, list(best[0]))


def _perm_columns(upto: int, masks: tuple[int, ...], perm: list[int]) -> list[int]:
    """Adjacency columns (one int per position j, bits i < j) under ``perm``."""
    cols = []
    for j in range(1, upto):
        mj = masks[perm[j]]
        c = 0
        for i in range(j):
            c = c << 1 | (mj >> perm[i] & 1)
        cols.append(c)
    return cols


def _pack_columns(n: int, cols: list[int]) -> bytes:
    bits: list[int] = []
    for j, c in enumerate(cols, start=1):
        bits.extend(c >> (j - 1 - i) & 1 for i in range(j))
    out = bytearray([n])
    acc = 0
    filled = 0
    for b in bits:
        acc = acc << 1 | b
        filled += 1
        if filled == 8:
            out.append(acc)
            acc, filled = 0, 0
    if filled:
        out.append(acc << (8 - filled))
    return bytes(out)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test: colour refinement plus backtracking."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    n = g.n
    if n == 0:
        return True
    cg = _refine(n, g._masks, [0] * n)
    ch = _refine(n, h._masks, [0] * n)
    if sorted(cg) != sorted(ch):
        return False

    order = sorted(range(n), key=lambda v: (cg[v], v))
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(ch[v], []).append(v)

    mapping = [-1] * n
    used = 0

    def place(idx: int) -> bool:
        nonlocal used
        if idx == n:
            return True
        gv = order[idx]
        gmask = g._masks[gv]
        for hv in by_color.get(cg[gv], ()):
            if used >> hv & 1:
                continue
            ok = True
            for prev in order[:idx]:
                if (gmask >> prev & 1) != (h._masks[hv] >> mapping[prev] & 1):
                    ok = False
                    break
            if ok:
                mapping[gv] = hv
                used |= 1 << hv
                if place(idx + 1):
                    return True
                used ^= 1 << hv
                mapping[gv] = -1
        return False

    return place(0)
