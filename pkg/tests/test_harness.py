from __future__ import annotations

from math import factorial

import pytest

import oracles
from copgame import (
    BudgetError,
    EscapeWitness,
    Graph,
    IllegalMoveError,
    StrategyTrace,
    canonical_graph6,
    classify,
    enumerate_connected,
    has_induced_mk2,
    is_connected,
    play_random_robber,
    random_2k2free,
    select_strategy,
    strategy_pin3,
    sweep_conjecture,
    sweep_mk2,
    verify_adversarial,
    write_graph6,
)
from copgame.strategies import Strategy, _walker

# one representative per isomorphism class of connected graphs (OEIS A001349)
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


# ---------------------------------------------------------------------------
# enumeration


def test_connected_counts_through_7():
    for n, want in CONNECTED_COUNTS.items():
        assert len(enumerate_connected(n)) == want


def test_enumeration_is_connected_and_irredundant(connected_upto6):
    for n, gs in connected_upto6.items():
        forms = set()
        for g in gs:
            assert g.n == n and is_connected(g)
            forms.add(canonical_graph6(g))
        assert len(forms) == len(gs)


def test_enumeration_is_sorted_and_deterministic():
    gs = enumerate_connected(5)
    keys = [write_graph6(g) for g in gs]
    assert keys == sorted(keys)
    assert [write_graph6(g) for g in enumerate_connected(5)] == keys


def test_enumeration_range_validated():
    with pytest.raises(ValueError):
        enumerate_connected(0)
    with pytest.raises(ValueError):
        enumerate_connected(9)


def test_enumeration_satisfies_burnside(connected_upto6):
    """Sum of n!/|Aut(G)| over one representative per class equals the
    number of connected labeled graphs."""
    for n, gs in connected_upto6.items():
        total = sum(factorial(n) // oracles.automorphism_count(g) for g in gs)
        assert total == oracles.labeled_connected_count(n)


# ---------------------------------------------------------------------------
# random generation


def test_random_2k2free_is_deterministic_and_in_class():
    for seed in range(20):
        a = random_2k2free(9, seed)
        b = random_2k2free(9, seed)
        assert a == b
        assert is_connected(a) and not has_induced_mk2(a, 2)
    assert random_2k2free(1, 0) == Graph(1, [])


def test_random_2k2free_varies_with_seed():
    draws = {write_graph6(random_2k2free(10, s)) for s in range(12)}
    assert len(draws) > 1


# ---------------------------------------------------------------------------
# classification


def test_classify_examples():
    c = classify(oracles.cycle_graph(5))
    assert c["n"] == 5 and c["edges"] == 5
    assert c["connected"] and c["diameter"] == 2
    assert c["2k2_free"] and c["c3_free"] and c["c4_free"] and not c["c5_free"]
    assert c["mk2_level"] == 1

    c = classify(oracles.petersen_graph())
    assert not c["2k2_free"] and c["c3_free"] and c["c4_free"]
    assert c["mk2_level"] == 3
    assert not c["p5_free"]

    c = classify(Graph(4, [(0, 1), (2, 3)]))
    assert not c["connected"] and c["diameter"] is None


# ---------------------------------------------------------------------------
# adversarial verification mechanics


def test_verifier_trace_shape():
    g = oracles.path_graph(4)
    s = select_strategy(g)
    t = verify_adversarial(g, s)
    assert isinstance(t, StrategyTrace)
    assert t.captured
    assert t.rounds[0] == (s.placement, t.robber_start)
    assert t.cop_phases >= 1
    # final position has the robber on a cop
    cops, r = t.rounds[-1]
    assert r in cops
    j = t.to_json()
    assert j["captured"] is True and len(j["rounds"]) == len(t.rounds)


def test_verifier_rejects_bad_phase_cap():
    g = oracles.path_graph(3)
    with pytest.raises(ValueError):
        verify_adversarial(g, select_strategy(g), 0)


def test_verifier_flags_illegal_moves():
    g = oracles.path_graph(4)
    cheat = Strategy(2, (0, 0), "X", lambda r0: ("jump",),
                     lambda br, cops, r: (r, r))  # teleports
    with pytest.raises(IllegalMoveError):
        verify_adversarial(g, cheat)


def test_verifier_produces_escape_witness_for_lazy_cops():
    g = oracles.cycle_graph(4)
    lazy = Strategy(1, (0,), "X", lambda r0: ("nap",),
                    lambda br, cops, r: cops)  # never moves
    out = verify_adversarial(g, lazy)
    assert isinstance(out, EscapeWitness)
    assert out.repeated is not None  # deterministic loop detected, not cap
    assert out.to_json()["repeated"]["cops"] == [0]


def test_verifier_cap_witness():
    # a cop that shuttles 0 -> 1 -> 0 never repeats a post-robber-move state
    # fast on C6 but also never catches; the cap fires
    g = oracles.cycle_graph(6)
    shuttle = Strategy(1, (0,), "X", lambda r0: ("shuttle",),
                       lambda br, cops, r: (1 - cops[0],))
    out = verify_adversarial(g, shuttle, 7)
    assert isinstance(out, EscapeWitness)
    assert out.phases == 7 or out.repeated is not None


def test_verifier_robber_placement_is_adversarial():
    # single cop on C4: the robber picks an escaping start, never captured
    g = oracles.cycle_graph(4)
    one_cop = Strategy(1, (0,), "X", lambda r0: ("walk",), _walker(g))
    out = verify_adversarial(g, one_cop)
    assert isinstance(out, EscapeWitness)


# ---------------------------------------------------------------------------
# randomized playouts


def test_random_robber_playouts_capture(tk2free_upto6):
    for n, gs in tk2free_upto6.items():
        for g in gs[:10]:
            s = select_strategy(g)
            for seed in range(3):
                t = play_random_robber(g, s, seed)
                assert isinstance(t, StrategyTrace) and t.captured


def test_random_robber_is_seeded():
    g = random_2k2free(8, 5)
    s = select_strategy(g)
    a = play_random_robber(g, s, 123)
    b = play_random_robber(g, s, 123)
    assert a.rounds == b.rounds


# ---------------------------------------------------------------------------
# sweeps


def test_sweep_conj1_on_enumeration():
    gs = [g for n in range(1, 6) for g in enumerate_connected(n)]
    report = sweep_conjecture(gs, "conj1")
    assert report.summary["total"] == 31
    assert report.summary["in_class"] == 28
    assert report.summary["violations"] == []
    assert report.summary["max_cop_number"] == 2
    assert report.summary["cop_number_histogram"] == {"1": 22, "2": 6}
    assert report.summary["strategy_failures"] == []
    assert report.violations == []


def test_sweep_modes_filter_differently():
    gs = [g for n in range(1, 6) for g in enumerate_connected(n)]
    conj1 = sweep_conjecture(gs, "conj1")
    diam2 = sweep_conjecture(gs, "diam2")
    assert conj1.summary["in_class"] == 28
    assert diam2.summary["in_class"] == 18


def test_sweep_records_parse_errors_as_data():
    report = sweep_conjecture(["A_", "!!bad!!", "Bw"], "conj1")
    assert report.summary["total"] == 3
    assert report.summary["errors"] == 1
    bad = [r for r in report.records if "error" in r]
    assert bad and bad[0]["graph6"] == "!!bad!!"
    assert not bad[0]["in_class"]


def test_sweep_rejects_unknown_mode():
    with pytest.raises(ValueError):
        sweep_conjecture([], "conj9")
    with pytest.raises(ValueError):
        sweep_mk2([], 1)


def test_sweep_mk2_bound():
    gs = [g for n in range(1, 7) for g in enumerate_connected(n)]
    report = sweep_mk2(gs, 2)
    assert report.summary["bound"] == 3
    assert report.summary["m"] == 2
    assert report.summary["violations"] == []
    # the in-class graphs here are exactly the 2K2-free ones
    assert report.summary["in_class"] == 100


def test_sweep_parallel_matches_serial():
    gs = [g for n in range(1, 6) for g in enumerate_connected(n)]
    serial = sweep_conjecture(gs, "conj1", jobs=1)
    parallel = sweep_conjecture(gs, "conj1", jobs=3)
    assert serial.records == parallel.records
    assert serial.summary == parallel.summary


def test_strategy_results_recorded_for_in_class_graphs():
    report = sweep_conjecture([write_graph6(oracles.cycle_graph(5))], "conj1")
    rec = report.records[0]
    assert rec["in_class"] and rec["strategy_captured"]
    assert rec["provenance"] == "C4FREE"
    assert rec["cop_number"] == 2 and rec["bound_satisfied"]
