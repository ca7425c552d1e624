from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from copgame import (
    BoundExceededError,
    BudgetError,
    GameState,
    Graph,
    NotConnectedError,
    Turn,
    best_robber_response,
    cop_number,
    is_connected,
    is_dismantlable,
    kernel_backend,
    optimal_cop_move,
    solve,
)
from copgame.solver import cop_moves
from test_graphs import graphs


def connected_graphs(min_n=2, max_n=6):
    return graphs(min_n=min_n, max_n=max_n).filter(is_connected)


# ---------------------------------------------------------------------------
# frozen positions (values computed by the minimax oracle in oracles.py)


def test_path3_positions():
    res = solve(oracles.path_graph(3), 1)
    assert res.label((0,), 2) == 2
    assert res.label((1,), 0) == 1
    assert res.label((2,), 2) == 0
    assert res.game_value == 1
    assert res.best_initial == (1,)


def test_path5_single_cop():
    res = solve(oracles.path_graph(5), 1)
    assert res.label((0,), 4) == 4
    assert res.game_value == 2
    assert res.best_initial == (2,)
    assert res.cop_win


def test_cycle4_single_cop_escapes():
    res = solve(oracles.cycle_graph(4), 1)
    assert res.label((0,), 2) is None
    assert res.label((0,), 1) == 1
    assert not res.cop_win
    assert res.best_initial is None
    assert res.game_value is None


def test_cycle4_two_cops():
    res = solve(oracles.cycle_graph(4), 2)
    assert res.label((0, 2), 1) == 1
    assert res.cop_win
    assert res.game_value == 1


def test_cycle5_two_cops_including_stacked():
    res = solve(oracles.cycle_graph(5), 2)
    assert res.label((0, 0), 2) == 2
    assert res.label((0, 2), 4) == 1
    assert res.label((2, 0), 4) == 1  # unsorted input tolerated
    assert res.game_value == 1


def test_named_game_values():
    assert solve(oracles.complete_graph(5), 1).game_value == 1
    assert solve(oracles.star_graph(6), 1).game_value == 1
    assert solve(oracles.cycle_graph(6), 2).game_value == 1


def test_petersen_needs_three_cops():
    pet = oracles.petersen_graph()
    assert not solve(pet, 2).cop_win
    assert solve(pet, 3).cop_win
    assert cop_number(pet) == 3


@pytest.mark.parametrize("g,expect", [
    (oracles.path_graph(2), 1),
    (oracles.path_graph(7), 1),
    (oracles.star_graph(6), 1),
    (oracles.complete_graph(6), 1),
    (oracles.cycle_graph(4), 2),
    (oracles.cycle_graph(6), 2),
    (oracles.blowup_c5((2, 1, 1, 1, 2)), 2),
])
def test_cop_numbers(g, expect):
    assert cop_number(g) == expect


def test_cop_number_bound_exceeded():
    with pytest.raises(BoundExceededError):
        cop_number(oracles.petersen_graph(), k_max=2)


# ---------------------------------------------------------------------------
# input validation and budgets


def test_solve_validates_input():
    with pytest.raises(ValueError):
        solve(oracles.path_graph(3), 0)
    with pytest.raises(NotConnectedError):
        solve(Graph(4, [(0, 1), (2, 3)]), 1)


def test_state_budget():
    with pytest.raises(BudgetError):
        solve(oracles.petersen_graph(), 6)  # 10^7 states
    # explicit budgets are honored
    with pytest.raises(BudgetError):
        solve(oracles.path_graph(5), 2, budget=100)


def test_gamestate_validation():
    with pytest.raises(ValueError):
        GameState((), 0, Turn.COP_MOVE)
    with pytest.raises(ValueError):
        GameState((2, 0), 1, Turn.COP_MOVE)
    res = solve(oracles.path_graph(3), 1)
    with pytest.raises(ValueError):
        res.label((5,), 0)
    with pytest.raises(IndexError):
        res.label((0,), 9)


# ---------------------------------------------------------------------------
# kernels agree with each other and with the oracle


def test_backend_reports_sane_value():
    assert kernel_backend() in ("cy", "py")


@pytest.mark.skipif(kernel_backend() != "cy", reason="compiled kernel not built")
@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=6), st.integers(1, 2))
def test_kernel_parity(g, k):
    a = solve(g, k, backend="py")
    b = solve(g, k, backend="cy")
    assert list(a._table) == list(b._table)
    assert a.game_value == b.game_value
    assert a.best_initial == b.best_initial


@settings(max_examples=25, deadline=None)
@given(connected_graphs(max_n=5), st.integers(1, 2))
def test_table_matches_minimax(g, k):
    res = solve(g, k)
    for state, value in res.labels.items():
        got = oracles.minimax_capture_time(g, state.cops, state.robber,
                                           depth_cap=3 * g.n)
        assert value == got, (state, value, got)


def test_full_table_against_minimax_on_cycle5():
    g = oracles.cycle_graph(5)
    res = solve(g, 2)
    for state, value in res.labels.items():
        assert value == oracles.minimax_capture_time(g, state.cops, state.robber, 15)


# ---------------------------------------------------------------------------
# optimal play extraction


def _referee(g, k):
    """Play optimal cops against optimal robber; return cop move count."""
    res = solve(g, k)
    assert res.cop_win
    cops = res.best_initial
    # adversarial robber placement: worst label
    robber = max(range(g.n),
                 key=lambda r: (res.label(cops, r) is None, res.label(cops, r) or 0, -r))
    moves = 0
    while robber not in cops:
        cops = optimal_cop_move(res, GameState(cops, robber, Turn.COP_MOVE))
        moves += 1
        if robber in cops:
            break
        robber = best_robber_response(res, GameState(cops, robber, Turn.ROBBER_MOVE))
        assert moves <= g.n * g.n, "optimal play must terminate"
    return moves


@pytest.mark.parametrize("g,k", [
    (oracles.path_graph(5), 1),
    (oracles.path_graph(7), 1),
    (oracles.cycle_graph(5), 2),
    (oracles.cycle_graph(6), 2),
    (oracles.petersen_graph(), 3),
    (oracles.blowup_c5((2, 2, 1, 1, 2)), 2),
])
def test_optimal_play_matches_game_value(g, k):
    assert _referee(g, k) == solve(g, k).game_value


def test_optimal_cop_move_decrements_value():
    g = oracles.path_graph(7)
    res = solve(g, 1)
    cops, robber = (0,), 6
    value = res.label(cops, robber)
    while value > 0:
        cops = optimal_cop_move(res, GameState(cops, robber, Turn.COP_MOVE))
        if robber in cops:
            break
        robber_value = max(
            (res.label(cops, m) for m in list(g.neighbors(robber)) + [robber]
             if m not in cops and res.label(cops, m) is not None),
            default=0)
        assert robber_value <= value - 1
        robber = best_robber_response(res, GameState(cops, robber, Turn.ROBBER_MOVE))
        value = res.label(cops, robber)


def test_robber_stays_safe_when_winning():
    res = solve(oracles.cycle_graph(4), 1)
    robber = best_robber_response(res, GameState((0,), 2, Turn.ROBBER_MOVE))
    assert res.label((0,), robber) is None


def test_cop_moves_multiset():
    g = oracles.path_graph(3)
    assert cop_moves(g, (1,)) == [(0,), (1,), (2,)]
    moves = cop_moves(g, (0, 2))
    assert (1, 1) in moves and (0, 2) in moves
    assert all(m == tuple(sorted(m)) for m in moves)


# ---------------------------------------------------------------------------
# single-cop structure theory: cop-win iff dismantlable


def test_dismantlable_examples():
    assert is_dismantlable(oracles.path_graph(6))
    assert is_dismantlable(oracles.complete_graph(5))
    assert is_dismantlable(oracles.star_graph(7))
    assert not is_dismantlable(oracles.cycle_graph(4))
    assert not is_dismantlable(oracles.cycle_graph(5))
    assert not is_dismantlable(oracles.petersen_graph())


def test_copwin_iff_dismantlable(connected_upto6):
    for n, gs in connected_upto6.items():
        for g in gs:
            assert solve(g, 1).cop_win == is_dismantlable(g)
