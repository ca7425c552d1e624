"""Canonical labelling for small graphs.

Equitable-partition refinement plus individualization branching; the
canonical form is the lexicographically least adjacency-row tuple over all
discrete partitions the search reaches. Exhaustive over the branch tree, so
correct on every input; twin-skipping keeps the tree small on the dense and
highly symmetric graphs where naive branching would explode.
"""

from __future__ import annotations

from .graphs import Graph, bits, write_graph6


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Refine an ordered partition (list of cell bitmasks) to equitability.

    A cell splits when its members have different edge counts into some cell;
    fragments are ordered by that signature so the result only depends on the
    input partition, not on vertex labels within cells.
    """
    while True:
        out: list[int] = []
        changed = False
        for cm in cells:
            if cm & (cm - 1) == 0:
                out.append(cm)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in bits(cm):
                sig = tuple((adj[v] & other).bit_count() for other in cells)
                groups[sig] = groups.get(sig, 0) | (1 << v)
            if len(groups) == 1:
                out.append(cm)
            else:
                changed = True
                out.extend(groups[sig] for sig in sorted(groups))
        cells = out
        if not changed:
            return cells


def _relabelled_rows(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        m = 0
        for u in bits(adj[v]):
            m |= 1 << pos[u]
        rows.append(m)
    return tuple(rows)


def canonical_relabel(g: Graph) -> Graph:
    """Return the canonical representative of g's isomorphism class.

    Two graphs are isomorphic iff their canonical relabellings are equal.
    """
    n, adj = g.n, g.adj
    if n == 1:
        return Graph(1)
    best: tuple[int, ...] | None = None

    def search(cells: list[int]) -> None:
        nonlocal best
        cells = _refine(adj, cells)
        for i, cm in enumerate(cells):
            if cm & (cm - 1) == 0:
                continue
            # Branch on each vertex of the first non-singleton cell, skipping
            # vertices that are twins of one already tried (swapping twins is
            # an automorphism, so their subtrees yield identical minima).
            tried: list[int] = []
            for v in bits(cm):
                if any(
                    (adj[v] & ~(1 << u)) == (adj[u] & ~(1 << v)) for u in tried
                ):
                    continue
                tried.append(v)
                search(cells[:i] + [1 << v, cm ^ (1 << v)] + cells[i + 1:])
            return
        order = [c.bit_length() - 1 for c in cells]
        key = _relabelled_rows(adj, order)
        if best is None or key < best:
            best = key

    search([g.full_mask])
    assert best is not None
    return Graph.from_adj(best)


def canonical_graph6(g: Graph) -> str:
    """graph6 string of the canonical relabelling; equal iff isomorphic."""
    return write_graph6(canonical_relabel(g))
