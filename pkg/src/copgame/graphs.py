"""Immutable simple graphs on vertex set {0..n-1} with bitmask adjacency.

The module bundles the graph type, the graph6 codec, BFS-based metrics, and
the induced-subgraph detectors (mK2, short cycles, paths) plus the small
vertex-set predicates the structural decompositions are phrased in. Vertex
sets are passed around as Python int bitmasks; ``bits``/``mask_of`` convert
between masks and vertex iterables.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import GraphParseError, NotConnectedError, UnsupportedSizeError

GRAPH6_MAX_N = 62
_G6_HEADER = ">>graph6<<"


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Undirected simple graph; ``adj[v]`` is the neighbour bitmask of v.

    Instances are immutable after construction (the adjacency is stored as a
    tuple) and hashable, so graphs can key dicts and sets directly.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_adj(cls, rows: Iterable[int]) -> "Graph":
        """Build from adjacency bitmask rows (validated for symmetry/loops)."""
        rows = tuple(rows)
        n = len(rows)
        g = cls(n)
        for v, row in enumerate(rows):
            if row >> n:
                raise IndexError(f"adjacency row {v} references vertices >= {n}")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v} not allowed")
            for u in bits(row):
                if not (rows[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(g, "adj", rows)
        return g

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                yield (u, u + 1 + v)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())!r})"


# ---------------------------------------------------------------------------
# graph6 codec (short form only: 1 <= n <= 62)
# ---------------------------------------------------------------------------

def write_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 short form.

    The byte layout is chr(63+n) followed by the upper triangle read in
    column-major order ((0,1), (0,2), (1,2), (0,3), ...), packed into 6-bit
    groups most-significant bit first, each group offset by 63.
    """
    if g.n > GRAPH6_MAX_N:
        raise UnsupportedSizeError(
            f"graph6 short form supports at most {GRAPH6_MAX_N} vertices, got {g.n}"
        )
    out = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        col = g.adj[v]
        for u in range(v):
            acc = (acc << 1) | ((col >> u) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 short-form record; strict about length and padding.

    Accepts an optional ``>>graph6<<`` header and a single trailing newline,
    nothing else. Faults carry the byte offset of the offending character.
    """
    s = text
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    s = s.rstrip("\r\n")
    if not s:
        raise GraphParseError("empty graph6 input", offset=0)
    c0 = ord(s[0])
    if c0 == 126:
        raise UnsupportedSizeError(
            "extended graph6 length prefix '~' (n > 62) is not supported"
        )
    if not 63 <= c0 <= 125:
        raise GraphParseError(f"size byte {c0} outside graph6 range", offset=0)
    n = c0 - 63
    if n == 0:
        raise GraphParseError("graphs need at least one vertex (n=0 record)", offset=0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) - 1 < need:
        raise GraphParseError(
            f"truncated graph6 record: need {need} data bytes, got {len(s) - 1}",
            offset=len(s),
        )
    if len(s) - 1 > need:
        raise GraphParseError("trailing bytes after graph6 record", offset=1 + need)
    rows = [0] * n
    u = 0
    v = 1
    for i in range(need):
        val = ord(s[1 + i]) - 63
        if not 0 <= val <= 63:
            raise GraphParseError(f"data byte {ord(s[1 + i])} outside graph6 range", offset=1 + i)
        for j in range(6):
            bit = (val >> (5 - j)) & 1
            if 6 * i + j < nbits:
                if bit:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                u += 1
                if u == v:
                    u = 0
                    v += 1
            elif bit:
                raise GraphParseError("nonzero padding bits", offset=1 + i)
    g = Graph(n)
    object.__setattr__(g, "adj", tuple(rows))
    return g


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a stream of graph6 records, one per line; blank lines skipped."""
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


# ---------------------------------------------------------------------------
# Connectivity, BFS layers, distances
# ---------------------------------------------------------------------------

def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full_mask


def bfs_layers(g: Graph, root: int) -> list[int]:
    """Distance layers from ``root`` as bitmasks; layers[d] = vertices at d.

    Requires a connected graph (the layers must partition the vertex set).
    """
    if not 0 <= root < g.n:
        raise IndexError(f"root {root} out of range for n={g.n}")
    layers = []
    seen = 1 << root
    frontier = seen
    while frontier:
        layers.append(frontier)
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    if seen != g.full_mask:
        raise NotConnectedError("bfs_layers requires a connected graph")
    return layers


def bfs_dist(g: Graph, src: int) -> list[int]:
    """Distances from ``src``; -1 for vertices in other components."""
    dist = [-1] * g.n
    dist[src] = 0
    seen = 1 << src
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        for v in bits(frontier):
            dist[v] = d
    return dist


def diameter(g: Graph) -> int:
    if not is_connected(g):
        raise NotConnectedError("diameter of a disconnected graph is undefined")
    best = 0
    for v in range(g.n):
        best = max(best, max(bfs_dist(g, v)))
    return best


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph.from_adj(full & ~row & ~(1 << v) for v, row in enumerate(g.adj))


# ---------------------------------------------------------------------------
# Vertex-set predicates (arguments are bitmasks or vertex iterables)
# ---------------------------------------------------------------------------

def _as_mask(g: Graph, s) -> int:
    m = s if isinstance(s, int) else mask_of(s)
    if m < 0 or m & ~g.full_mask:
        raise IndexError(f"vertex set {bin(m)} out of range for n={g.n}")
    return m


def is_stable(g: Graph, s) -> bool:
    m = _as_mask(g, s)
    return all(not g.adj[v] & m for v in bits(m))


def is_clique(g: Graph, s) -> bool:
    m = _as_mask(g, s)
    return all(not (m & ~(1 << v)) & ~g.adj[v] for v in bits(m))


def complete_between(g: Graph, a, b) -> bool:
    """True iff every a-b pair is an edge; the two sets must be disjoint."""
    am, bm = _as_mask(g, a), _as_mask(g, b)
    if am & bm:
        raise ValueError("complete_between requires disjoint sets")
    return all((g.adj[v] & bm) == bm for v in bits(am))


def anticomplete_between(g: Graph, a, b) -> bool:
    """True iff no edges run between the two (disjoint) sets."""
    am, bm = _as_mask(g, a), _as_mask(g, b)
    if am & bm:
        raise ValueError("anticomplete_between requires disjoint sets")
    return all(not g.adj[v] & bm for v in bits(am))


# ---------------------------------------------------------------------------
# Induced-subgraph detectors
# ---------------------------------------------------------------------------

def has_induced_mk2(g: Graph, m: int) -> bool:
    """Does ``g`` contain an induced matching of m edges (an mK2)?

    Edges are picked in lexicographic order and each pick bans the closed
    neighbourhoods of both endpoints, which is exactly the condition for the
    chosen edges to induce a perfect matching on their 2m endpoints.
    """
    if m < 1:
        raise ValueError(f"pattern size m must be >= 1, got {m}")
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    edges = list(g.edges())

    def extend(start: int, chosen: int, banned: int) -> bool:
        if chosen == m:
            return True
        for i in range(start, len(edges)):
            u, v = edges[i]
            if (banned >> u) & 1 or (banned >> v) & 1:
                continue
            if extend(i + 1, chosen + 1, banned | closed[u] | closed[v]):
                return True
        return False

    return extend(0, 0, 0)


def _has_triangle(g: Graph) -> bool:
    for u, v in g.edges():
        if g.adj[u] & g.adj[v]:
            return True
    return False


def _has_induced_c4(g: Graph) -> bool:
    # An induced C4 is a non-adjacent pair with two non-adjacent common
    # neighbours.
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if (g.adj[u] >> w) & 1:
                continue
            common = g.adj[u] & g.adj[w]
            for x in bits(common):
                if common & ~(g.adj[x] | (1 << x)):
                    return True
    return False


def _has_induced_c5(g: Graph) -> bool:
    adj = g.adj
    full = g.full_mask
    for v0 in range(g.n):
        above0 = full & (-1 << (v0 + 1))
        for v1 in bits(adj[v0] & above0):
            cl1 = adj[v1] | (1 << v1)
            for v4 in bits(adj[v0] & above0 & ~cl1 & (-1 << (v1 + 1))):
                cl4 = adj[v4] | (1 << v4)
                cl0 = adj[v0] | (1 << v0)
                for v2 in bits(adj[v1] & above0 & ~cl0 & ~cl4):
                    for _ in bits(adj[v2] & adj[v4] & above0 & ~cl0 & ~cl1):
                        return True
    return False


def has_induced_cycle(g: Graph, k: int) -> bool:
    """Induced C_k test for the short cycles the structure theory cares about."""
    if k == 3:
        return _has_triangle(g)
    if k == 4:
        return _has_induced_c4(g)
    if k == 5:
        return _has_induced_c5(g)
    raise ValueError(f"only induced C3/C4/C5 detection is provided, got k={k}")


def induces_c5(g: Graph, vertices) -> bool:
    """Do the five given vertices induce a 5-cycle?

    A 5-vertex graph is a C5 iff every vertex has degree exactly 2 in it
    (degree sum 10 forces a union of cycles; on 5 vertices only C5 fits).
    """
    m = _as_mask(g, vertices)
    if m.bit_count() != 5:
        return False
    return all((g.adj[v] & m).bit_count() == 2 for v in bits(m))


def find_induced_c5(g: Graph) -> int | None:
    """Lexicographically least 5-set inducing a C5, as a bitmask; None if none.

    Sets are compared as sorted vertex tuples; the search enumerates them in
    that order and stops at the first hit, so the choice is canonical for a
    given labelled graph.
    """
    from itertools import combinations

    for combo in combinations(range(g.n), 5):
        m = mask_of(combo)
        if all((g.adj[v] & m).bit_count() == 2 for v in combo):
            return m
    return None


def has_induced_path(g: Graph, t: int) -> bool:
    """Does ``g`` contain an induced path on t vertices?

    Backtracking over partial paths: the next vertex must be adjacent to the
    current endpoint and non-adjacent to everything earlier. Paths are only
    counted with first endpoint < last endpoint to halve the work.
    """
    if t < 1:
        raise ValueError(f"path length t must be >= 1, got {t}")
    if t == 1:
        return g.n >= 1
    adj = g.adj

    def extend(first: int, last: int, banned: int, depth: int) -> bool:
        if depth == t:
            return last > first
        for w in bits(adj[last] & ~banned):
            if extend(first, w, banned | adj[last] | (1 << w), depth + 1):
                return True
        return False

    return any(extend(v0, v0, 1 << v0, 1) for v0 in range(g.n))
