"""Enumeration, generation, adversarial verification and conjecture sweeps.

``verify_adversarial`` is the referee: it plays a :class:`Strategy` against
a robber that places and replies exactly optimally (read off the solver
table), enforces move legality, and returns either a capture trace or an
escape witness — a repeated position is a certified escape, since both
sides are deterministic from there. Sweeps run that referee plus exact cop
numbers over graph streams and report bound violations as data, not
exceptions.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable

from .canon import canonical_graph6, canonical_relabel
from .errors import (
    BoundExceededError,
    BudgetError,
    GraphParseError,
    IllegalMoveError,
    UnsupportedSizeError,
)
from .graphs import (
    Graph,
    bits,
    diameter,
    has_induced_cycle,
    has_induced_mk2,
    has_induced_path,
    is_connected,
    parse_graph6,
    write_graph6,
)
from .solver import GameState, SolveResult, Turn, best_robber_response, cop_number, solve
from .strategies import Strategy, branch_label, select_strategy

ENUM_MAX_N = 8

CONJ1 = "conj1"
CONJ2 = "conj2"
DIAM2 = "diam2"
MK2 = "mk2"
_CONJ_MODES = (CONJ1, CONJ2, DIAM2)


# ---------------------------------------------------------------------------
# Graph streams
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _connected_canonical(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    # Every connected graph on n >= 2 keeps a connected subgraph when a
    # spanning-tree leaf is deleted, so extending each (n-1)-vertex graph by
    # one vertex with a nonempty neighbourhood reaches everything.
    out: dict[str, Graph] = {}
    for parent in _connected_canonical(n - 1):
        base = list(parent.edges())
        for nb in range(1, 1 << (n - 1)):
            g = Graph(n, base + [(v, n - 1) for v in bits(nb)])
            key = canonical_graph6(g)
            if key not in out:
                out[key] = canonical_relabel(g)
    return tuple(out[k] for k in sorted(out))


def enumerate_connected(n: int) -> list[Graph]:
    """All connected graphs on n vertices, one per isomorphism class.

    Deterministic output: canonical representatives sorted by their graph6
    string. Capped at n = 8 — the sweep scale this package is built for.
    """
    if not 1 <= n <= ENUM_MAX_N:
        raise ValueError(f"n must be in 1..{ENUM_MAX_N}, got {n}")
    return list(_connected_canonical(n))


def _random_split(rng: random.Random, n: int) -> Graph:
    order = list(range(n))
    rng.shuffle(order)
    q = rng.randint(1, n)
    clique, stable = order[:q], order[q:]
    edges = [(a, b) for i, a in enumerate(clique) for b in clique[i + 1:]]
    for s in stable:
        for c in rng.sample(clique, rng.randint(1, q)):
            edges.append((s, c))
    return Graph(n, edges)


def _random_gnp(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def random_2k2free(n: int, seed, max_tries: int = 400) -> Graph:
    """Seeded random connected graph with no induced 2K2.

    Mixes rejection sampling from G(n, p) at escalating density with a
    constructive split-graph draw (split graphs are always 2K2-free), so
    the retry budget is effectively never exhausted.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if max_tries < 1:
        raise ValueError(f"max_tries must be >= 1, got {max_tries}")
    if n == 1:
        return Graph(1)
    rng = random.Random(seed)
    for t in range(max_tries):
        if rng.random() < 0.3:
            g = _random_split(rng, n)
        else:
            p = min(0.9, 0.4 + 0.5 * t / max_tries)
            g = _random_gnp(rng, n, p)
        if is_connected(g) and not has_induced_mk2(g, 2):
            return g
    raise BudgetError(f"no connected 2K2-free graph found in {max_tries} draws")


# ---------------------------------------------------------------------------
# Adversarial verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StrategyTrace:
    """A captured play: positions after every half-move, cop moves counted."""

    placement: tuple[int, ...]
    robber_start: int
    branch: str
    rounds: tuple[tuple[tuple[int, ...], int], ...]
    captured: bool
    cop_phases: int

    def to_json(self) -> dict:
        return {
            "placement": list(self.placement),
            "robber_start": self.robber_start,
            "branch": self.branch,
            "rounds": [{"cops": list(c), "robber": r} for c, r in self.rounds],
            "captured": self.captured,
            "cop_phases": self.cop_phases,
        }


@dataclass(frozen=True)
class EscapeWitness:
    """Proof the strategy failed: a repeated position (deterministic loop)
    or survival past the phase cap."""

    placement: tuple[int, ...]
    robber_start: int
    branch: str
    rounds: tuple[tuple[tuple[int, ...], int], ...]
    phases: int
    repeated: tuple[tuple[int, ...], int] | None

    def to_json(self) -> dict:
        rep = None
        if self.repeated is not None:
            rep = {"cops": list(self.repeated[0]), "robber": self.repeated[1]}
        return {
            "placement": list(self.placement),
            "robber_start": self.robber_start,
            "branch": self.branch,
            "rounds": [{"cops": list(c), "robber": r} for c, r in self.rounds],
            "phases": self.phases,
            "repeated": rep,
        }


def _legal_cop_move(g: Graph, old: tuple[int, ...], new: tuple[int, ...]) -> bool:
    # Role order is the strategy's business; the rules only care that some
    # assignment moves every cop by at most one edge.
    if len(old) != len(new):
        return False
    return any(
        all(o == new[p] or g.has_edge(o, new[p]) for o, p in zip(old, perm))
        for perm in permutations(range(len(new)))
    )


def _adversarial_start(res: SolveResult, placement: tuple[int, ...]) -> int:
    # Worst vertex for the cops: unreachable-by-cops beats any finite label,
    # ties to the smallest index.
    best_r = 0
    best_val = -1
    for r in range(res.graph.n):
        val = res.label(placement, r)
        if val is None:
            return r
        if val > best_val:
            best_val = val
            best_r = r
    return best_r


def verify_adversarial(
    g: Graph,
    strategy: Strategy,
    phase_cap: int | None = None,
    solve_result: SolveResult | None = None,
) -> StrategyTrace | EscapeWitness:
    """Play ``strategy`` against an exactly optimal robber.

    The robber places on the worst vertex for the given placement and
    replies with ``best_robber_response`` each round. Returns a
    :class:`StrategyTrace` on capture; an :class:`EscapeWitness` when a
    position repeats after a robber move (both sides are deterministic, so
    the play loops forever) or the phase cap (default n^2) runs out.
    Illegal strategy moves raise :class:`IllegalMoveError`.
    """
    cap = g.n * g.n if phase_cap is None else phase_cap
    if cap < 1:
        raise ValueError(f"phase_cap must be >= 1, got {cap}")
    res = solve_result if solve_result is not None else solve(g, strategy.k)
    cops = tuple(strategy.placement)
    r = _adversarial_start(res, cops)
    branch = strategy.latch(r)
    label = branch_label(branch)
    rounds: list[tuple[tuple[int, ...], int]] = [(cops, r)]
    if r in cops:
        return StrategyTrace(cops, r, label, tuple(rounds), True, 0)
    seen = {(cops, r)}
    phases = 0
    while phases < cap:
        nxt = tuple(strategy.policy(branch, cops, r))
        if not _legal_cop_move(g, cops, nxt):
            raise IllegalMoveError(
                f"strategy moved cops {cops} -> {nxt}, which the rules do not allow"
            )
        cops = nxt
        phases += 1
        rounds.append((cops, r))
        if r in cops:
            return StrategyTrace(tuple(strategy.placement), rounds[0][1], label,
                                 tuple(rounds), True, phases)
        r = best_robber_response(res, GameState(tuple(sorted(cops)), r, Turn.ROBBER_MOVE))
        rounds.append((cops, r))
        if r in cops:
            # Only possible when every robber option was a cop vertex.
            return StrategyTrace(tuple(strategy.placement), rounds[0][1], label,
                                 tuple(rounds), True, phases)
        if (cops, r) in seen:
            return EscapeWitness(tuple(strategy.placement), rounds[0][1], label,
                                 tuple(rounds), phases, (cops, r))
        seen.add((cops, r))
    return EscapeWitness(tuple(strategy.placement), rounds[0][1], label,
                         tuple(rounds), phases, None)


def play_random_robber(
    g: Graph, strategy: Strategy, seed, phase_cap: int | None = None
) -> StrategyTrace | EscapeWitness:
    """Play the strategy against a seeded random (never suicidal) robber."""
    cap = g.n * g.n if phase_cap is None else phase_cap
    rng = random.Random(seed)
    cops = tuple(strategy.placement)
    open_verts = [v for v in range(g.n) if v not in cops]
    r = rng.choice(open_verts) if open_verts else 0
    branch = strategy.latch(r)
    label = branch_label(branch)
    rounds: list[tuple[tuple[int, ...], int]] = [(cops, r)]
    if r in cops:
        return StrategyTrace(cops, r, label, tuple(rounds), True, 0)
    phases = 0
    while phases < cap:
        nxt = tuple(strategy.policy(branch, cops, r))
        if not _legal_cop_move(g, cops, nxt):
            raise IllegalMoveError(
                f"strategy moved cops {cops} -> {nxt}, which the rules do not allow"
            )
        cops = nxt
        phases += 1
        rounds.append((cops, r))
        if r in cops:
            return StrategyTrace(tuple(strategy.placement), rounds[0][1], label,
                                 tuple(rounds), True, phases)
        moves = [w for w in bits(g.adj[r] | (1 << r)) if w not in cops]
        if not moves:
            return StrategyTrace(tuple(strategy.placement), rounds[0][1], label,
                                 tuple(rounds), True, phases)
        r = rng.choice(moves)
        rounds.append((cops, r))
    return EscapeWitness(tuple(strategy.placement), rounds[0][1], label,
                         tuple(rounds), phases, None)


# ---------------------------------------------------------------------------
# Classification and sweeps
# ---------------------------------------------------------------------------

def classify(g: Graph) -> dict:
    """Class flags the sweeps and the CLI report for one graph."""
    connected = is_connected(g)
    level = 0
    while level < g.n // 2 and has_induced_mk2(g, level + 1):
        level += 1
    return {
        "n": g.n,
        "edges": g.edge_count(),
        "connected": connected,
        "diameter": diameter(g) if connected else None,
        "2k2_free": not has_induced_mk2(g, 2),
        "c3_free": not has_induced_cycle(g, 3),
        "c4_free": not has_induced_cycle(g, 4),
        "c5_free": not has_induced_cycle(g, 5),
        "p5_free": not has_induced_path(g, 5),
        "mk2_level": level,
    }


def _in_class(flags: dict, mode: str, m: int | None) -> bool:
    if not flags["connected"]:
        return False
    if mode == CONJ1:
        return flags["2k2_free"]
    if mode == CONJ2:
        return flags["p5_free"]
    if mode == DIAM2:
        return flags["2k2_free"] and flags["diameter"] == 2
    if mode == MK2:
        return flags["mk2_level"] < m
    raise ValueError(f"unknown sweep mode {mode!r}")


def _sweep_record(args: tuple) -> dict:
    g6, mode, m, phase_cap = args
    rec: dict = {"graph6": g6}
    try:
        g = parse_graph6(g6)
    except (GraphParseError, UnsupportedSizeError) as exc:
        rec["error"] = str(exc)
        rec["in_class"] = False
        return rec
    rec["graph6"] = write_graph6(g)
    flags = classify(g)
    rec.update(flags)
    if not flags["connected"]:
        rec["error"] = "not connected"
        rec["in_class"] = False
        return rec
    rec["in_class"] = _in_class(flags, mode, m)
    if not rec["in_class"]:
        return rec
    bound = 2 * m - 1 if mode == MK2 else 2
    k_cap = bound if mode == MK2 else 3
    try:
        cn = cop_number(g, k_cap)
    except BoundExceededError:
        cn = None
    rec["cop_number"] = cn
    rec["bound"] = bound
    rec["bound_satisfied"] = cn is not None and cn <= bound
    if flags["2k2_free"]:
        strat = select_strategy(g)
        rec["provenance"] = strat.provenance
        out = verify_adversarial(g, strat, phase_cap)
        if isinstance(out, StrategyTrace):
            rec["strategy_captured"] = True
            rec["capture_phases"] = out.cop_phases
        else:
            rec["strategy_captured"] = False
            rec["capture_phases"] = None
    return rec


@dataclass
class SweepReport:
    mode: str
    records: list[dict]
    summary: dict

    @property
    def violations(self) -> list[dict]:
        return [r for r in self.records if r.get("in_class") and not r.get("bound_satisfied")]


def _summarize(mode: str, m: int | None, records: list[dict]) -> dict:
    in_class = [r for r in records if r.get("in_class")]
    histogram: dict[str, int] = {}
    for r in in_class:
        key = "escape" if r.get("cop_number") is None else str(r["cop_number"])
        histogram[key] = histogram.get(key, 0) + 1
    cop_numbers = [r["cop_number"] for r in in_class if r.get("cop_number") is not None]
    phases = [
        r["capture_phases"]
        for r in in_class
        if r.get("capture_phases") is not None
    ]
    summary = {
        "mode": mode,
        "bound": 2 * m - 1 if mode == MK2 else 2,
        "total": len(records),
        "errors": sum(1 for r in records if "error" in r),
        "in_class": len(in_class),
        "violations": sorted(
            r["graph6"] for r in in_class if not r.get("bound_satisfied")
        ),
        "max_cop_number": max(cop_numbers, default=None),
        "cop_number_histogram": histogram,
        "strategy_failures": sorted(
            r["graph6"]
            for r in in_class
            if "strategy_captured" in r and not r["strategy_captured"]
        ),
        "max_capture_phases": max(phases, default=None),
    }
    if mode == MK2:
        summary["m"] = m
    return summary


def _run_sweep(entries: Iterable, mode: str, m: int | None,
               phase_cap: int | None, jobs: int) -> SweepReport:
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    items: list[str] = []
    for entry in entries:
        if isinstance(entry, Graph):
            items.append(write_graph6(entry))
        else:
            items.append(str(entry).strip())
    work = [(g6, mode, m, phase_cap) for g6 in items]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_sweep_record, work, chunksize=16))
    else:
        records = [_sweep_record(w) for w in work]
    return SweepReport(mode, records, _summarize(mode, m, records))


def sweep_conjecture(graphs: Iterable, mode: str,
                     phase_cap: int | None = None, jobs: int = 1) -> SweepReport:
    """Check the cop-number bound 2 over a stream of graphs.

    Modes: ``conj1`` (connected 2K2-free), ``conj2`` (connected P5-free),
    ``diam2`` (connected 2K2-free of diameter 2). Out-of-class graphs are
    recorded but not tested; parse failures become per-record errors. For
    every in-class 2K2-free graph the dispatched strategy is additionally
    verified against the adversarial robber.
    """
    if mode not in _CONJ_MODES:
        raise ValueError(f"mode must be one of {_CONJ_MODES}, got {mode!r}")
    return _run_sweep(graphs, mode, None, phase_cap, jobs)


def sweep_mk2(graphs: Iterable, m: int,
              phase_cap: int | None = None, jobs: int = 1) -> SweepReport:
    """Check the cop-number bound 2m-1 over connected mK2-free graphs."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    return _run_sweep(graphs, MK2, m, phase_cap, jobs)
