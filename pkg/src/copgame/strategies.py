"""Certified cop strategies for connected 2K2-free graphs.

A :class:`Strategy` is a positional plan: a start placement, a ``latch``
that inspects the robber's initial vertex once and fixes a branch token, and
a deterministic ``policy`` mapping (branch, cop positions, robber position)
to the next cop positions. Cop tuples here are role-ordered — role i keeps
index i for the whole play — which is what lets the one-shot manoeuvres
(corner / trap / pinch) say "the cop standing on v2 goes to y".

Every constructor checks its class hypotheses and refuses out-of-class
graphs with :class:`NotInClassError`; the structural facts each policy leans
on are certified by the decomposition it embeds as ``witness``.
``select_strategy`` dispatches first-match over the families and falls back
to exact-solver play when no structural family applies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .decompositions import (
    Blowup5,
    C4FreeStructure,
    Diam3Layers,
    c4free_decompose,
    diam3_decompose,
    edge_partition,
    recognize_blowup_c5,
)
from .errors import NotInClassError
from .graphs import (
    Graph,
    bfs_dist,
    bits,
    diameter,
    has_induced_cycle,
    has_induced_mk2,
    is_connected,
)
from .solver import GameState, Turn, cop_number, optimal_cop_move, solve

PIN3 = "PIN3"
DIAM3 = "DIAM3"
C4FREE = "C4FREE"
C5FREE = "C5FREE"
BLOWUP5 = "BLOWUP5"
SOLVER_FALLBACK = "SOLVER_FALLBACK"


@dataclass(frozen=True)
class Strategy:
    """Deterministic cop plan; see the module notes for the role convention."""

    k: int
    placement: tuple[int, ...]
    provenance: str
    latch: Callable[[int], tuple] = field(repr=False)
    policy: Callable[[tuple, tuple[int, ...], int], tuple[int, ...]] = field(repr=False)
    witness: object = field(default=None, repr=False)


def branch_label(branch: tuple) -> str:
    return ":".join(str(p) for p in branch)


def _require_class(g: Graph) -> None:
    if not is_connected(g):
        raise NotInClassError("strategy classes contain only connected graphs")
    if has_induced_mk2(g, 2):
        raise NotInClassError("graph has an induced 2K2")


def _capture_step(g: Graph, cops: tuple[int, ...], r: int) -> tuple[int, ...] | None:
    """Rule-2 move: the lowest-index cop adjacent to the robber takes it."""
    if r in cops:
        return tuple(cops)
    for i, c in enumerate(cops):
        if g.has_edge(c, r):
            return cops[:i] + (r,) + cops[i + 1:]
    return None


def _step_toward(g: Graph, src: int, dst: int) -> int:
    """One BFS step from src toward dst (smallest-index tie-break)."""
    if src == dst:
        return src
    dist = bfs_dist(g, dst)
    return min(bits(g.adj[src]), key=lambda w: (dist[w], w))


def _walker(g: Graph) -> Callable[[tuple, tuple[int, ...], int], tuple[int, ...]]:
    # Shared default policy: capture if possible, else the last cop walks
    # toward the robber while the others hold their posts.
    def policy(branch: tuple, cops: tuple[int, ...], r: int) -> tuple[int, ...]:
        step = _capture_step(g, cops, r)
        if step is not None:
            return step
        return cops[:-1] + (_step_toward(g, cops[-1], r),)

    return policy


def strategy_pin3(g: Graph) -> Strategy:
    """Three cops, any connected 2K2-free graph: pin an edge, walk the rest.

    Two cops sit on the lexicographically least edge (u, v) for the whole
    play. Outside N[u] ∪ N[v] only a stable set remains (an edge out there
    would form a 2K2 with uv), so the robber is frozen: it either waits for
    the third cop's walk or steps into a pinned cop's neighbourhood.
    Captures within 4 cop moves (walk <= diameter <= 3, plus the take).
    """
    _require_class(g)
    if g.edge_count() == 0:
        return Strategy(3, (0, 0, 0), PIN3, lambda r0: ("lone",), _walker(g))
    u, v = next(g.edges())
    return Strategy(3, (u, v, u), PIN3, lambda r0: ("pin",), _walker(g))


def strategy_diam3(g: Graph, layers: Diam3Layers | None = None) -> Strategy:
    """Two cops for connected 2K2-free graphs of diameter exactly 3.

    Cops start on v1 and v2 of the layering geodesic. The branch latched
    from the robber's start:

    - ``adjacent``: a cop already covers it; take it on move one.
    - ``runner`` (robber in L3): v1 holds — any hop into L2 lands in B,
      which is complete to L1 — while the v2 cop walks L3 down.
    - ``corner`` (robber in A2): one-shot manoeuvre (v1,v2) -> (v2,y) with
      y the robber's smallest L1-neighbour; every exit from the A2 vertex
      then lies under v2 (L1 and its A-edges) or under y (B and staying).
    - ``chase`` (robber in L1 off v1): v2 is complete to L1, so the first
      move already takes it.
    """
    _require_class(g)
    d = layers if layers is not None else diam3_decompose(g)
    v1, v2 = d.v1, d.v2
    dom = g.adj[v1] | g.adj[v2] | (1 << v1) | (1 << v2)
    walker = _walker(g)

    def latch(r0: int) -> tuple:
        if (dom >> r0) & 1:
            return ("adjacent",)
        if (d.L3 >> r0) & 1:
            return ("runner",)
        if (d.A2 >> r0) & 1:
            y = next(bits(g.adj[r0] & d.L1))
            return ("corner", y)
        return ("chase",)

    def policy(branch: tuple, cops: tuple[int, ...], r: int) -> tuple[int, ...]:
        if branch[0] == "corner" and cops == (v1, v2):
            step = _capture_step(g, cops, r)
            if step is not None:
                return step
            return (v2, branch[1])
        return walker(branch, cops, r)

    return Strategy(2, (v1, v2), DIAM3, latch, policy, witness=d)


def strategy_c4free(g: Graph, structure: C4FreeStructure | None = None) -> Strategy:
    """Two cops for connected 2K2-free graphs without an induced C4.

    With the C5+clique+stable partition (A, B, C): both cops start on the
    smallest clique vertex b, whose closed neighbourhood swallows A and B
    entirely. The robber is confined to the stable set C, where it can only
    wait for the walking cop or step into B (= into N[b]). When B is empty
    the whole graph is the five-cycle and the blow-up pinch play is used,
    keeping this family's provenance.
    """
    _require_class(g)
    if has_induced_cycle(g, 4):
        raise NotInClassError("graph has an induced C4")
    s = structure if structure is not None else c4free_decompose(g)
    if s.B == 0:
        inner = strategy_blowup_c5(g)
        return Strategy(2, inner.placement, C4FREE, inner.latch, inner.policy, witness=s)
    b = next(bits(s.B))
    closed_b = g.adj[b] | (1 << b)

    def latch(r0: int) -> tuple:
        return ("adjacent",) if (closed_b >> r0) & 1 else ("walk",)

    return Strategy(2, (b, b), C4FREE, latch, _walker(g), witness=s)


def strategy_c5free(g: Graph) -> Strategy:
    """Two cops for connected 2K2-free graphs without an induced C5.

    Cops start on the lexicographically least edge (u, v). A robber outside
    N[u] ∪ N[v] sits in the stable residue D of the edge partition. If it
    has a neighbour y among the private neighbourhoods A ∪ B, the one-shot
    trap re-posts the cops on {y} and the far endpoint: C5-freeness forces
    every A-B fork out of the robber's vertex to close into y, so all its
    exits are covered. With y on u's side the cops swap roles, which the
    branch token records. A robber whose exits all lead to common
    neighbours is simply walked down while u holds.
    """
    _require_class(g)
    if has_induced_cycle(g, 5):
        raise NotInClassError("graph has an induced C5")
    if g.edge_count() == 0:
        return Strategy(2, (0, 0), C5FREE, lambda r0: ("lone",), _walker(g))
    u, v = next(g.edges())
    ep = edge_partition(g, u, v)
    dom = g.adj[u] | g.adj[v] | (1 << u) | (1 << v)
    walker = _walker(g)

    def latch(r0: int) -> tuple:
        if (dom >> r0) & 1:
            return ("adjacent",)
        fork = g.adj[r0] & (ep.A | ep.B)
        if fork:
            y = next(bits(fork))
            swapped = bool((ep.A >> y) & 1)
            return ("trap", y, "swapped") if swapped else ("trap", y, "direct")
        return ("chase",)

    def policy(branch: tuple, cops: tuple[int, ...], r: int) -> tuple[int, ...]:
        if branch[0] == "trap" and cops == (u, v):
            step = _capture_step(g, cops, r)
            if step is not None:
                return step
            y = branch[1]
            return (y, u) if branch[2] == "swapped" else (v, y)
        return walker(branch, cops, r)

    return Strategy(2, (u, v), C5FREE, latch, policy, witness=ep)


def strategy_blowup_c5(g: Graph, quotient: Blowup5 | None = None) -> Strategy:
    """Two cops on a blow-up of the five-cycle.

    With parts V1..V5 in cyclic order, cops start on x = min V1 and
    y = min V3; together they dominate V2, V4, V5. Against a robber in V1
    the y-cop pinches into V2 (adjacent to all of V1), and symmetrically
    for V3; parts are stable, so the robber cannot sidestep within its part
    and every exit is already dominated. Captures within 3 cop moves.
    """
    bl = quotient if quotient is not None else recognize_blowup_c5(g)
    if bl is None:
        raise NotInClassError("graph is not a blow-up of the five-cycle")
    v1m, v2m, v3m, _, _ = bl.parts
    x = next(bits(v1m))
    y = next(bits(v3m))
    w2 = next(bits(v2m))
    dom = g.adj[x] | g.adj[y] | (1 << x) | (1 << y)
    walker = _walker(g)

    def latch(r0: int) -> tuple:
        if (dom >> r0) & 1:
            return ("adjacent",)
        if (v1m >> r0) & 1:
            return ("pinch", 1, w2)
        if (v3m >> r0) & 1:
            return ("pinch", 0, w2)
        return ("chase",)

    def policy(branch: tuple, cops: tuple[int, ...], r: int) -> tuple[int, ...]:
        if branch[0] == "pinch" and cops == (x, y):
            step = _capture_step(g, cops, r)
            if step is not None:
                return step
            mover, w = branch[1], branch[2]
            return (w, cops[1]) if mover == 0 else (cops[0], w)
        return walker(branch, cops, r)

    return Strategy(2, (x, y), BLOWUP5, latch, policy, witness=bl)


def strategy_solver(g: Graph, k_max: int = 3) -> Strategy:
    """Exact-solver play: optimal placement and table-driven cop moves."""
    k = cop_number(g, k_max)
    res = solve(g, k)
    assert res.best_initial is not None

    def policy(branch: tuple, cops: tuple[int, ...], r: int) -> tuple[int, ...]:
        return optimal_cop_move(res, GameState(tuple(sorted(cops)), r, Turn.COP_MOVE))

    return Strategy(k, res.best_initial, SOLVER_FALLBACK,
                    lambda r0: ("solver",), policy, witness=res)


def select_strategy(g: Graph) -> Strategy:
    """First-match dispatch over the strategy families.

    Order: diameter exactly 3, then C4-free, then C5-free, then the
    triangle-free C5 blow-ups; connected 2K2-free graphs matching none of
    those (all of diameter <= 2 with triangles and both short cycles) get
    exact-solver play.
    """
    _require_class(g)
    if diameter(g) == 3:
        return strategy_diam3(g)
    if not has_induced_cycle(g, 4):
        return strategy_c4free(g)
    if not has_induced_cycle(g, 5):
        return strategy_c5free(g)
    if not has_induced_cycle(g, 3):
        return strategy_blowup_c5(g)
    return strategy_solver(g)
