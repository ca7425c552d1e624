"""Exact cops-and-robbers engine with certified strategies for 2K2-free graphs.

The package splits into five layers:

- :mod:`copgame.graphs`: immutable bitset graphs, graph6 I/O, induced-pattern
  detection (kK2, C3/C4/C5, induced paths).
- :mod:`copgame.solver`: exact retrograde game solver with a compiled kernel
  and a pure-Python fallback, plus optimal move extraction for both sides.
- :mod:`copgame.decompositions`: the structural decompositions the
  constructive strategies rely on (diameter-3 layering, C4-free split/C5
  structure, C5 blow-up recognition).
- :mod:`copgame.strategies`: explicit two-cop strategies per structural case
  and a dispatcher covering every connected 2K2-free graph.
- :mod:`copgame.harness`: exhaustive enumeration, random generation,
  adversarial verification, and conjecture sweeps.
"""

from .errors import (
    BoundExceededError,
    BudgetError,
    CopGameError,
    GraphParseError,
    IllegalMoveError,
    NoWinningMoveError,
    NotConnectedError,
    NotInClassError,
    PreconditionError,
    StructureError,
    UnsupportedSizeError,
)
from .graphs import (
    Graph,
    bfs_dist,
    bfs_layers,
    complement,
    diameter,
    find_induced_c5,
    has_induced_cycle,
    has_induced_mk2,
    has_induced_path,
    is_connected,
    parse_graph6,
    read_graph6_lines,
    write_graph6,
)
from .canon import canonical_graph6, canonical_relabel
from .solver import (
    GameState,
    SolveResult,
    Turn,
    best_robber_response,
    cop_number,
    is_dismantlable,
    kernel_backend,
    optimal_cop_move,
    solve,
)
from .decompositions import (
    Blowup5,
    C4FreeStructure,
    Diam3Layers,
    EdgePartition,
    c4free_decompose,
    diam3_decompose,
    edge_partition,
    recognize_blowup_c5,
)
from .strategies import (
    BLOWUP5,
    C4FREE,
    C5FREE,
    DIAM3,
    PIN3,
    SOLVER_FALLBACK,
    Strategy,
    select_strategy,
    strategy_blowup_c5,
    strategy_c4free,
    strategy_c5free,
    strategy_diam3,
    strategy_pin3,
    strategy_solver,
)
from .harness import (
    EscapeWitness,
    StrategyTrace,
    SweepReport,
    classify,
    enumerate_connected,
    play_random_robber,
    random_2k2free,
    sweep_conjecture,
    sweep_mk2,
    verify_adversarial,
)

__version__ = "0.1.0"

__all__ = [
    "BLOWUP5",
    "BoundExceededError",
    "BudgetError",
    "Blowup5",
    "C4FREE",
    "C4FreeStructure",
    "C5FREE",
    "CopGameError",
    "DIAM3",
    "Diam3Layers",
    "EdgePartition",
    "EscapeWitness",
    "GameState",
    "Graph",
    "GraphParseError",
    "IllegalMoveError",
    "NoWinningMoveError",
    "NotConnectedError",
    "NotInClassError",
    "PIN3",
    "PreconditionError",
    "SOLVER_FALLBACK",
    "SolveResult",
    "Strategy",
    "StrategyTrace",
    "StructureError",
    "SweepReport",
    "Turn",
    "UnsupportedSizeError",
    "best_robber_response",
    "bfs_dist",
    "bfs_layers",
    "c4free_decompose",
    "canonical_graph6",
    "canonical_relabel",
    "classify",
    "complement",
    "cop_number",
    "diam3_decompose",
    "diameter",
    "edge_partition",
    "enumerate_connected",
    "find_induced_c5",
    "has_induced_cycle",
    "has_induced_mk2",
    "has_induced_path",
    "is_connected",
    "is_dismantlable",
    "kernel_backend",
    "optimal_cop_move",
    "parse_graph6",
    "play_random_robber",
    "random_2k2free",
    "read_graph6_lines",
    "recognize_blowup_c5",
    "select_strategy",
    "solve",
    "strategy_blowup_c5",
    "strategy_c4free",
    "strategy_c5free",
    "strategy_diam3",
    "strategy_pin3",
    "strategy_solver",
    "sweep_conjecture",
    "sweep_mk2",
    "verify_adversarial",
    "write_graph6",
]
