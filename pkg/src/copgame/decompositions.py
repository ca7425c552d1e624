"""Structural decompositions behind the two-cop strategies.

Each constructor certifies what it returns: the structural facts a strategy
later leans on are re-verified on the concrete graph before the object comes
back, and a failed check raises :class:`StructureError` naming the check.
For a connected input that error certifies the graph lies outside the class
the decomposition is defined for (e.g. it contains an induced 2K2).

Vertex sets in the result objects are bitmasks; ``to_json`` renders them as
sorted vertex lists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError, StructureError
from .graphs import (
    Graph,
    anticomplete_between,
    bfs_dist,
    bfs_layers,
    bits,
    complete_between,
    find_induced_c5,
    has_induced_cycle,
    induces_c5,
    is_clique,
    is_connected,
    is_stable,
)


def _verts(mask: int) -> list[int]:
    return list(bits(mask))


@dataclass(frozen=True)
class Diam3Layers:
    """BFS layering of a diameter-3 graph from a fixed geodesic endpoint.

    v0..v3 is a geodesic realising the diameter; L0..L3 are the distance
    layers from v0. Inside L2, B holds the vertices with a neighbour in L3
    and A the rest; A splits into A1 (adjacent to v1) and A2 (not).
    """

    v0: int
    v1: int
    v2: int
    v3: int
    L0: int
    L1: int
    L2: int
    L3: int
    B: int
    A: int
    A1: int
    A2: int

    def to_json(self) -> dict:
        return {
            "v0": self.v0, "v1": self.v1, "v2": self.v2, "v3": self.v3,
            "L0": _verts(self.L0), "L1": _verts(self.L1),
            "L2": _verts(self.L2), "L3": _verts(self.L3),
            "B": _verts(self.B), "A": _verts(self.A),
            "A1": _verts(self.A1), "A2": _verts(self.A2),
        }


def diam3_decompose(g: Graph) -> Diam3Layers:
    """Layer a connected diameter-3 graph and verify the pursuit claims.

    The geodesic is pinned deterministically: (v0, v3) is the
    lexicographically least distance-3 pair, and v1, v2 are the
    smallest-index neighbours advancing along it. Verified claims (all are
    forced when the graph has no induced 2K2):

    - L3 is a stable set;
    - every vertex of B is adjacent to every vertex of L1;
    - A2 is a stable set;
    - every edge inside A has an endpoint adjacent to v2.
    """
    if not is_connected(g):
        raise PreconditionError("diameter-3 layering needs a connected graph")
    dist = [bfs_dist(g, v) for v in range(g.n)]
    diam = max(max(row) for row in dist)
    if diam != 3:
        raise PreconditionError(f"diameter is {diam}, need exactly 3")
    v0, v3 = next(
        (a, b)
        for a in range(g.n)
        for b in range(a + 1, g.n)
        if dist[a][b] == 3
    )
    v1 = next(w for w in bits(g.adj[v0]) if dist[w][v3] == 2)
    v2 = next(w for w in bits(g.adj[v1]) if dist[w][v3] == 1)
    layers = bfs_layers(g, v0)
    assert len(layers) == 4  # ecc(v0) >= dist(v0,v3) = 3 = diameter
    l0, l1, l2, l3 = layers
    b_side = 0
    for v in bits(l2):
        if g.adj[v] & l3:
            b_side |= 1 << v
    a_side = l2 & ~b_side
    a1 = a_side & g.adj[v1]
    a2 = a_side & ~g.adj[v1]

    if not is_stable(g, l3):
        raise StructureError("L3_stable", "L3 contains an edge; g has an induced 2K2")
    if not complete_between(g, b_side, l1):
        raise StructureError("B_complete_to_L1", "missing B-L1 edge; g has an induced 2K2")
    if not is_stable(g, a2):
        raise StructureError("A2_stable", "A2 contains an edge; g has an induced 2K2")
    for u in bits(a_side):
        for w in bits(a_side & g.adj[u]):
            if w <= u:
                continue
            if not (g.has_edge(v2, u) or g.has_edge(v2, w)):
                raise StructureError(
                    "A_edge_meets_N_v2",
                    f"edge ({u},{w}) inside A avoids N(v2); g has an induced 2K2",
                )
    return Diam3Layers(v0, v1, v2, v3, l0, l1, l2, l3, b_side, a_side, a1, a2)


@dataclass(frozen=True)
class C4FreeStructure:
    """Five-cycle / clique / stable-set partition of a C4-free graph.

    A is the (unique) induced five-cycle, empty when the graph is split;
    B is a clique complete to A; C is a stable set anticomplete to A.
    Edges between B and C are unconstrained.
    """

    A: int
    B: int
    C: int

    def to_json(self) -> dict:
        return {"A": _verts(self.A), "B": _verts(self.B), "C": _verts(self.C)}


def _split_partition(g: Graph) -> tuple[int, int]:
    """Degree-sequence split test; returns (clique, stable) bitmasks.

    Classic threshold criterion: with degrees d1 >= ... >= dn and
    m = max{i : di >= i-1}, the graph is split iff
    sum_{i<=m} di = m(m-1) + sum_{i>m} di, and then the m largest-degree
    vertices (any tie order) form a clique with the rest stable.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    d = [g.degree(v) for v in order]
    m = max(i for i in range(1, g.n + 1) if d[i - 1] >= i - 1)
    if sum(d[:m]) != m * (m - 1) + sum(d[m:]):
        raise StructureError("split_degrees", "degree sequence fails the split criterion")
    clique = 0
    for v in order[:m]:
        clique |= 1 << v
    return clique, g.full_mask & ~clique


def c4free_decompose(g: Graph) -> C4FreeStructure:
    """Partition a connected 2K2- and C4-free graph as C5 + clique + stable.

    When an induced five-cycle exists it is unique as a vertex set in this
    class, B collects the vertices complete to it and C the rest; without
    one the graph must be split and the degree criterion produces (B, C)
    directly with A empty. All claimed relations are verified before
    returning.
    """
    if not is_connected(g):
        raise PreconditionError("decomposition needs a connected graph")
    if has_induced_cycle(g, 4):
        raise StructureError("no_induced_c4", "graph has an induced C4")
    a = find_induced_c5(g)
    if a is None:
        b, c = _split_partition(g)
        a = 0
    else:
        b = 0
        c = 0
        for v in bits(g.full_mask & ~a):
            if (g.adj[v] & a) == a:
                b |= 1 << v
            else:
                c |= 1 << v
    if a and not induces_c5(g, a):
        raise StructureError("A_induces_c5", "A does not induce a five-cycle")
    if not is_clique(g, b):
        raise StructureError("B_clique", "B is not a clique")
    if not is_stable(g, c):
        raise StructureError("C_stable", "C is not a stable set")
    if not complete_between(g, a, b):
        raise StructureError("A_complete_to_B", "some A-B pair is not an edge")
    if not anticomplete_between(g, a, c):
        raise StructureError("A_anticomplete_to_C", "some A-C pair is an edge")
    return C4FreeStructure(a, b, c)


@dataclass(frozen=True)
class EdgePartition:
    """Neighbourhood partition along an edge (u, v).

    A: private neighbours of u; B: private neighbours of v; C: common
    neighbours; D: everything else. In a 2K2-free graph D is stable (an edge
    inside D together with uv would induce a 2K2).
    """

    u: int
    v: int
    A: int
    B: int
    C: int
    D: int

    def to_json(self) -> dict:
        return {
            "u": self.u, "v": self.v,
            "A": _verts(self.A), "B": _verts(self.B),
            "C": _verts(self.C), "D": _verts(self.D),
        }


def edge_partition(g: Graph, u: int, v: int) -> EdgePartition:
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    a = g.adj[u] & ~g.adj[v] & ~(1 << v)
    b = g.adj[v] & ~g.adj[u] & ~(1 << u)
    c = g.adj[u] & g.adj[v]
    d = g.full_mask & ~a & ~b & ~c & ~(1 << u) & ~(1 << v)
    return EdgePartition(u, v, a, b, c, d)


@dataclass(frozen=True)
class Blowup5:
    """Blow-up of the five-cycle: parts are stable, consecutive parts are
    completely joined, non-consecutive parts see no edges.

    ``parts`` is cyclically ordered starting at the class of vertex 0,
    oriented toward its smaller-indexed neighbouring class.
    """

    parts: tuple[int, int, int, int, int]

    def to_json(self) -> dict:
        return {"parts": [_verts(p) for p in self.parts]}


def recognize_blowup_c5(g: Graph) -> Blowup5 | None:
    """Recognise blow-ups of the five-cycle via false-twin classes.

    Vertices with identical open neighbourhoods are collapsed; the graph is
    such a blow-up iff exactly five classes remain and their quotient is the
    five-cycle. Returns None otherwise.
    """
    groups: dict[int, int] = {}
    for v in range(g.n):
        groups[g.adj[v]] = groups.get(g.adj[v], 0) | (1 << v)
    if len(groups) != 5:
        return None
    classes = list(groups.values())
    reps = [next(bits(c)) for c in classes]
    nbr_classes: list[list[int]] = []
    for i in range(5):
        row = [
            j
            for j in range(5)
            if j != i and g.has_edge(reps[i], reps[j])
        ]
        if len(row) != 2:
            return None
        nbr_classes.append(row)
    # Five nodes, all of quotient degree 2: the quotient is a single
    # five-cycle as long as walking it comes back after five steps.
    start = next(i for i in range(5) if (classes[i] >> 0) & 1)
    first = min(nbr_classes[start], key=lambda j: next(bits(classes[j])))
    cycle = [start, first]
    while len(cycle) < 5:
        a, b = nbr_classes[cycle[-1]]
        cycle.append(a if a != cycle[-2] else b)
    if len(set(cycle)) != 5 or cycle[0] not in nbr_classes[cycle[-1]]:
        return None
    parts = tuple(classes[i] for i in cycle)
    for i in range(5):
        if not is_stable(g, parts[i]):
            return None
        if not complete_between(g, parts[i], parts[(i + 1) % 5]):
            return None
        if not anticomplete_between(g, parts[i], parts[(i + 2) % 5]):
            return None
    return Blowup5(parts)
