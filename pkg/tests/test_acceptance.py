"""Acceptance gate: the eight headline guarantees, checked end to end.

Each test prints one ``[PASS] criterion N: ...`` line (visible under
``pytest -s``); a failing criterion fails its test and prints nothing.
All counts and bounds are exact — no tolerances anywhere.
"""

from __future__ import annotations

import pytest

import oracles
from copgame import (
    EscapeWitness,
    StrategyTrace,
    bfs_layers,
    complement,
    cop_number,
    diam3_decompose,
    diameter,
    enumerate_connected,
    has_induced_cycle,
    has_induced_mk2,
    parse_graph6,
    play_random_robber,
    random_2k2free,
    recognize_blowup_c5,
    select_strategy,
    sweep_mk2,
    verify_adversarial,
    write_graph6,
)
from copgame.graphs import anticomplete_between, bits, complete_between, is_stable


@pytest.fixture(scope="module")
def tk2free_upto8() -> dict[int, list]:
    return {
        n: [g for g in enumerate_connected(n) if not has_induced_mk2(g, 2)]
        for n in range(1, 9)
    }


def test_c1_strategies_beat_optimal_robber_on_all_2k2free(tk2free_upto8):
    """Criterion 1: on every connected 2K2-free graph with n <= 8, the
    dispatched two-cop strategy captures an exactly optimal robber, within
    n^2 cop moves."""
    checked = 0
    escapes: list[str] = []
    for n, gs in tk2free_upto8.items():
        for g in gs:
            out = verify_adversarial(g, select_strategy(g))
            if isinstance(out, EscapeWitness):
                escapes.append(write_graph6(g))
            else:
                assert out.cop_phases <= g.n * g.n
            checked += 1
    assert checked == 2574
    assert escapes == []
    print(f"\n[PASS] criterion 1: strategy capture vs optimal robber on all "
          f"{checked} connected 2K2-free graphs, n <= 8 (0 escapes)")


def test_c2_diameter3_layering_claims(tk2free_upto8):
    """Criterion 2: every connected 2K2-free graph of diameter 3 admits the
    geodesic layering, and all four structural claims hold."""
    checked = 0
    for n, gs in tk2free_upto8.items():
        for g in gs:
            if diameter(g) != 3:
                continue
            d = diam3_decompose(g)  # raises StructureError on any violation
            assert d.L0 | d.L1 | d.L2 | d.L3 == g.full_mask
            assert is_stable(g, d.L3)
            assert is_stable(g, d.A2)
            if d.B and d.L1:
                assert complete_between(g, d.B, d.L1)
            for u in bits(d.A):
                for v in bits(g.adj[u] & d.A):
                    assert ((1 << u) | (1 << v)) & g.adj[d.v2]
            checked += 1
    assert checked == 946
    print(f"\n[PASS] criterion 2: diameter-3 layering claims verified on all "
          f"{checked} in-class graphs, n <= 8")


def test_c3_blowup_recognition(tk2free_upto8):
    """Criterion 3: among connected 2K2-free graphs on n <= 8 vertices, the
    triangle-free ones containing a C5 are exactly the C5 blow-ups, and the
    recognizer returns a verified part structure for each."""
    recognized = 0
    for n, gs in tk2free_upto8.items():
        for g in gs:
            b = recognize_blowup_c5(g)
            if has_induced_cycle(g, 3) or not has_induced_cycle(g, 5):
                assert b is None
                continue
            assert b is not None
            parts = b.parts
            assert sum(parts) == g.full_mask
            for i in range(5):
                assert is_stable(g, parts[i])
                assert complete_between(g, parts[i], parts[(i + 1) % 5])
                assert anticomplete_between(g, parts[i], parts[(i + 2) % 5])
            recognized += 1
    assert recognized == 10
    print(f"\n[PASS] criterion 3: C5 blow-up recognition exact on n <= 8 "
          f"({recognized} blow-ups found, all part structures verified)")


def test_c4_cop_number_bound(tk2free_upto8):
    """Criterion 4: the exact solver confirms cop number <= 2 on every
    connected 2K2-free graph with n <= 8."""
    histogram = {1: 0, 2: 0}
    for n, gs in tk2free_upto8.items():
        for g in gs:
            histogram[cop_number(g, k_max=2)] += 1
    assert histogram == {1: 1313, 2: 1261}
    print(f"\n[PASS] criterion 4: cop number <= 2 on all 2574 connected "
          f"2K2-free graphs, n <= 8 (histogram {histogram})")


def test_c5_matching_bound_sweep():
    """Criterion 5: sweeping all 996 connected graphs on n <= 7 with the
    matching-number bound (m = 3): every 3K2-free one has cop number
    <= 2m - 1 = 5."""
    gs = [g for n in range(1, 8) for g in enumerate_connected(n)]
    report = sweep_mk2(gs, 3)
    assert report.summary["total"] == 996
    assert report.summary["in_class"] == 992
    assert report.summary["violations"] == []
    assert report.summary["errors"] == 0
    assert report.summary["max_cop_number"] <= 5
    print(f"\n[PASS] criterion 5: cop number <= 5 for all "
          f"{report.summary['in_class']} connected 3K2-free graphs, n <= 7 "
          f"(max observed {report.summary['max_cop_number']})")


def test_c6_enumeration_count():
    """Criterion 6: the canonical-form enumeration finds exactly the known
    number of connected graphs per order, including 853 at n = 7."""
    counts = [len(enumerate_connected(n)) for n in range(1, 8)]
    assert counts == [1, 1, 2, 6, 21, 112, 853]
    print("\n[PASS] criterion 6: enumeration counts 1,1,2,6,21,112,853 for "
          "n = 1..7 (853 classes at n = 7)")


def test_c7_randomized_playouts():
    """Criterion 7: 100,000 randomized robber plays on seeded random
    connected 2K2-free graphs (5 <= n <= 12), zero escapes."""
    plays = 0
    for s in range(2000):
        g = random_2k2free(5 + s % 8, f"fuzz:{s}")
        strat = select_strategy(g)
        for j in range(50):
            t = play_random_robber(g, strat, f"{s}:{j}")
            assert isinstance(t, StrategyTrace) and t.captured
            assert t.cop_phases <= g.n * g.n
            plays += 1
    assert plays == 100_000
    print(f"\n[PASS] criterion 7: {plays} randomized plays on seeded random "
          f"graphs (n = 5..12), 0 escapes")


def test_c8_encoding_and_dualities():
    """Criterion 8: byte-exact graph6 round-trips on every connected graph
    with n <= 7, agreement with an independent encoder, complement
    involution, the 2K2 <-> complement-C4 duality, and BFS layer soundness."""
    checked = 0
    for n in range(1, 8):
        for g in enumerate_connected(n):
            s = write_graph6(g)
            assert parse_graph6(s) == g
            assert s == oracles.encode_graph6_reference(g)
            co = complement(g)
            assert complement(co) == g
            assert has_induced_mk2(g, 2) == has_induced_cycle(co, 4)
            layers = bfs_layers(g, 0)
            acc = 0
            for layer in layers:
                assert layer and not (layer & acc)
                acc |= layer
            assert acc == g.full_mask
            checked += 1
    assert checked == 996
    print(f"\n[PASS] criterion 8: graph6 round-trip + reference-encoder "
          f"agreement + complement dualities on all {checked} connected "
          f"graphs, n <= 7")
