"""Exact solver for the k-cop pursuit game on small graphs.

Rules: the cops pick start vertices (sharing allowed), then the robber picks
one knowing the cop placement; play alternates starting with the cops; on a
cop turn every cop simultaneously stays put or crosses one edge, and the
robber does the same on its turn. The robber is caught as soon as it shares
a vertex with a cop — moving onto a cop is immediate capture.

``solve`` computes, for every cop-to-move state, the least number of cop
moves that forces capture (backward induction over the full state space);
the play extractors ``optimal_cop_move`` / ``best_robber_response`` read
optimal play off that table. Heavy lifting happens in a kernel module: the
compiled one when the extension is built, else the pure-Python twin. Both
produce identical tables; ``backend=`` forces a choice per call.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations_with_replacement, product

from . import _solver_py
from .errors import (
    BoundExceededError,
    BudgetError,
    NoWinningMoveError,
    NotConnectedError,
)
from .graphs import Graph, bits, is_connected

try:
    from . import _solver_cy
except ImportError:  # extension not built; pure kernel carries everything
    _solver_cy = None

DEFAULT_STATE_BUDGET = 5_000_000

# The compiled kernel packs vertex sets into one machine word.
_CY_MAX_N = 62


class Turn(Enum):
    COP_MOVE = "cop"
    ROBBER_MOVE = "robber"


@dataclass(frozen=True)
class GameState:
    """Position with the side to move; cop tuple is a sorted multiset."""

    cops: tuple[int, ...]
    robber: int
    turn: Turn

    def __post_init__(self):
        if not self.cops:
            raise ValueError("at least one cop required")
        if tuple(sorted(self.cops)) != tuple(self.cops):
            raise ValueError(f"cop tuple must be sorted: {self.cops!r}")


def kernel_backend() -> str:
    """Which kernel ``solve`` picks by default: "cy" if compiled, else "py"."""
    return "cy" if _solver_cy is not None else "py"


def _resolve_kernel(backend: str | None, n: int):
    if backend is None or backend == "auto":
        backend = "cy" if (_solver_cy is not None and n <= _CY_MAX_N) else "py"
    if backend == "py":
        return _solver_py.capture_times, "py"
    if backend == "cy":
        if _solver_cy is None:
            raise ValueError("compiled kernel requested but not built")
        if n > _CY_MAX_N:
            raise ValueError(f"compiled kernel supports n <= {_CY_MAX_N}")
        return _solver_cy.capture_times, "cy"
    raise ValueError(f"unknown backend {backend!r}")


def _csr(g: Graph) -> tuple[array, array]:
    off = array('i', [0]) * (g.n + 1)
    nbr = array('i')
    for v in range(g.n):
        nbr.extend(g.neighbors(v))
        off[v + 1] = len(nbr)
    return off, nbr


class SolveResult:
    """Capture-time table for one (graph, k) pair.

    ``label(cops, r)`` is the number of cop moves needed to force capture
    from the cop-to-move state, 0 iff the robber stands on a cop, and None
    when the cops cannot force capture from there.
    """

    def __init__(self, graph: Graph, k: int, table: array, backend: str):
        self.graph = graph
        self.k = k
        self.backend = backend
        self._table = table
        self._msets = list(combinations_with_replacement(range(graph.n), k))
        self._rank = {ms: i for i, ms in enumerate(self._msets)}
        best: tuple[int, int] | None = None
        n = graph.n
        for i in range(len(self._msets)):
            base = i * n
            worst = 0
            for r in range(n):
                v = table[base + r]
                if v < 0:
                    worst = -1
                    break
                if v > worst:
                    worst = v
            if worst >= 0 and (best is None or (worst, i) < best):
                best = (worst, i)
        #: does the cop side win with k cops (some placement beats every reply)?
        self.cop_win = best is not None
        #: placement minimising worst-case capture time (lex-least tie-break)
        self.best_initial = self._msets[best[1]] if best else None
        #: that worst-case capture time, in cop moves
        self.game_value = best[0] if best else None

    def label(self, cops, robber: int) -> int | None:
        key = tuple(sorted(cops))
        i = self._rank.get(key)
        if i is None:
            raise ValueError(f"invalid cop tuple {cops!r} for n={self.graph.n}, k={self.k}")
        if not 0 <= robber < self.graph.n:
            raise IndexError(f"robber vertex {robber} out of range")
        v = self._table[i * self.graph.n + robber]
        return None if v < 0 else v

    @cached_property
    def labels(self) -> dict[GameState, int | None]:
        """The whole table keyed by cop-to-move GameState."""
        n = self.graph.n
        out: dict[GameState, int | None] = {}
        for i, ms in enumerate(self._msets):
            base = i * n
            for r in range(n):
                v = self._table[base + r]
                out[GameState(ms, r, Turn.COP_MOVE)] = None if v < 0 else v
        return out


def solve(g: Graph, k: int, budget: int | None = None, backend: str | None = None) -> SolveResult:
    """Full backward induction for k cops on a connected graph.

    Refuses up front when n^(k+1) exceeds the state budget (default
    5,000,000) rather than grinding; the kernel additionally guards the cop
    transition count at four times the budget.
    """
    if k < 1:
        raise ValueError(f"need at least one cop, got k={k}")
    if not is_connected(g):
        raise NotConnectedError("solver requires a connected graph")
    limit = DEFAULT_STATE_BUDGET if budget is None else budget
    states = g.n ** (k + 1)
    if states > limit:
        raise BudgetError(
            f"state space n^(k+1) = {states} exceeds budget {limit} (n={g.n}, k={k})"
        )
    kern, name = _resolve_kernel(backend, g.n)
    off, nbr = _csr(g)
    return SolveResult(g, k, kern(g.n, k, off, nbr, 4 * limit), name)


def cop_number(g: Graph, k_max: int = 3, budget: int | None = None,
               backend: str | None = None) -> int:
    """Least k <= k_max with a k-cop win; BoundExceededError beyond that."""
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    for k in range(1, k_max + 1):
        if solve(g, k, budget, backend).cop_win:
            return k
    raise BoundExceededError(f"cop number exceeds k_max={k_max}")


def cop_moves(g: Graph, cops) -> list[tuple[int, ...]]:
    """All cop multiset successors (each cop stays or crosses one edge), sorted."""
    opts = [list(bits(g.adj[c] | (1 << c))) for c in cops]
    return sorted({tuple(sorted(combo)) for combo in product(*opts)})


def _robber_value(res: SolveResult, cops: tuple[int, ...], robber: int) -> int | None:
    # Value once the cops land on ``cops`` with the robber to move: the
    # robber maximises over its closed neighbourhood, where stepping onto a
    # cop is worth 0 and an unlabelled successor means escape (None).
    g = res.graph
    cm = 0
    for c in cops:
        cm |= 1 << c
    if (cm >> robber) & 1:
        return 0
    best = 0
    for r2 in bits(g.adj[robber] | (1 << robber)):
        if (cm >> r2) & 1:
            continue
        v = res.label(cops, r2)
        if v is None:
            return None
        if v > best:
            best = v
    return best


def optimal_cop_move(res: SolveResult, state: GameState) -> tuple[int, ...]:
    """Lexicographically least cop move that keeps the capture-time bound."""
    if state.turn is not Turn.COP_MOVE:
        raise ValueError("optimal_cop_move needs a cop-to-move state")
    cur = res.label(state.cops, state.robber)
    if cur is None:
        raise NoWinningMoveError(
            f"no winning cop move from cops={state.cops} robber={state.robber}"
        )
    if cur == 0:
        return tuple(state.cops)
    for cand in cop_moves(res.graph, state.cops):
        rv = _robber_value(res, cand, state.robber)
        if rv is not None and rv + 1 <= cur:
            return cand
    raise RuntimeError("capture-time table inconsistent")  # pragma: no cover


def best_robber_response(res: SolveResult, state: GameState) -> int:
    """Robber reply maximising capture time.

    Escaping moves (no finite label) beat every finite one; ties go to the
    smallest vertex index. Staying put is always among the options.
    """
    if state.turn is not Turn.ROBBER_MOVE:
        raise ValueError("best_robber_response needs a robber-to-move state")
    g = res.graph
    cm = 0
    for c in state.cops:
        cm |= 1 << c
    best_vertex = -1
    best_val = -1
    for r2 in bits(g.adj[state.robber] | (1 << state.robber)):
        if (cm >> r2) & 1:
            val = 0
        else:
            lab = res.label(state.cops, r2)
            if lab is None:
                return r2  # first escape in ascending order
            val = lab
        if val > best_val:
            best_val = val
            best_vertex = r2
    return best_vertex


def is_dismantlable(g: Graph) -> bool:
    """Corner-elimination test (equivalent to a one-cop win).

    A corner is a vertex whose closed neighbourhood is contained in another
    vertex's closed neighbourhood; the graph dismantles if deleting corners
    one at a time reaches a single vertex.
    """
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    live = g.full_mask
    while live & (live - 1):
        for u in bits(live):
            nu = closed[u] & live
            if any(
                not nu & ~(closed[w] & live)
                for w in bits(live & ~(1 << u))
            ):
                live &= ~(1 << u)
                break
        else:
            return False
    return True
