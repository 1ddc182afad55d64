"""Acceptance gate: eleven criteria, one PASS/FAIL line each.

Run ``pytest tests/test_acceptance.py`` (lines are printed even when
output capture is on) or ``python tests/test_acceptance.py``.
"""

import random
import statistics
import sys
import time
from itertools import permutations

import pytest

from terravis.fixtures import ANTIHOLE6_EDGES, FIG1, FUNNEL_FIG, G1, G2, UNIT_INTERVAL_EDGES
from terravis.funnel import (
    DPStats,
    base_lemma_violation,
    brute_force_dominating_set,
    dominates,
    dp_pair_bound,
    funnel_from_terrain,
    labels_to_vertices,
    min_dominating_set,
)
from terravis.generate import (
    noisy_bowl_terrain,
    random_funnel,
    random_induced_subgraph,
    random_terrain,
    random_walk_terrain,
)
from terravis.graph import (
    OrderedGraph,
    bfs_distance,
    check_bar_property,
    check_cycle_order,
    check_hamiltonian_order,
    check_x_property,
    degree_sequence,
    find_antihole,
    induced_cycles,
    is_antihole,
    is_persistent,
    is_persistent_any_order,
    relabel,
)
from terravis.sp import INF, MODES, PRECOMPUTE, Counters, precompute_closest, shortest_distance
from terravis.terrain import build_visibility_graph

FIG1_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 2), (0, 4), (1, 4), (2, 4)]
DEGREES = [7, 4, 3, 4, 5, 7, 4, 4, 4, 6, 4]


@pytest.fixture
def verdict(capsys):
    def emit(num, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:>2}: {detail}"
        with capsys.disabled():
            sys.stdout.write("\n" + line + "\n")
        assert ok, line

    return emit


def median_ms(fn, runs=7):
    times = []
    for _ in range(runs):
        t0 = time.perf_counter()
        out = fn()
        times.append((time.perf_counter() - t0) * 1000)
    return out, statistics.median(times)


# 1 -------------------------------------------------------------------------------


def test_criterion_01_fig1_edges(verdict):
    g, ms = median_ms(lambda: build_visibility_graph(FIG1))
    ok = g.edges() == sorted(FIG1_EDGES) and ms < 1.0
    verdict(1, ok, f"fig1 terrain -> {g.m} edges, exact={g.edges() == sorted(FIG1_EDGES)}, {ms:.3f} ms")


# 2 -------------------------------------------------------------------------------


def test_criterion_02_degree_sequence_pair(verdict):
    def run():
        flags, seqs = [], []
        for t in (G1, G2):
            g = build_visibility_graph(t)
            seqs.append(degree_sequence(g))
            (v,) = [u for u in range(g.n) if g.degree(u) == 3]
            flags.append(any(g.degree(w) == 7 for w in g.neighbors(v)))
        return seqs, flags

    (seqs, flags), ms = median_ms(run)
    ok = seqs == [DEGREES, DEGREES] and sorted(flags) == [False, True] and ms < 1.0
    verdict(2, ok, f"G1/G2 degree sequences equal={seqs[0] == seqs[1] == DEGREES}, "
                   f"deg-3 has deg-7 neighbour {flags}, {ms:.3f} ms")


# 3 -------------------------------------------------------------------------------


def test_criterion_03_persistence(verdict):
    rng = random.Random(301)
    failures = 0
    t0 = time.perf_counter()
    for _ in range(500):
        g = build_visibility_graph(random_terrain(rng.randint(2, 200), rng))
        if check_x_property(g) or check_bar_property(g) or check_hamiltonian_order(g):
            failures += 1
    secs = time.perf_counter() - t0
    verdict(3, failures == 0 and secs < 30, f"500 terrains n<=200, {failures} failures, {secs:.2f} s")


# 4 -------------------------------------------------------------------------------


def test_criterion_04_antihole_exclusion(verdict):
    rng = random.Random(401)
    violations = 0
    t0 = time.perf_counter()
    for i in range(200):
        n = rng.randint(2, 30)
        t = random_terrain(n, rng) if i % 2 else random_walk_terrain(n, rng)
        g = build_visibility_graph(t)
        violations += sum(find_antihole(g, k) is not None for k in (6, 7))
    fixture = OrderedGraph.from_edges(6, ANTIHOLE6_EDGES)
    w = find_antihole(fixture, 6)
    fixture_ok = w is not None and is_antihole(fixture, w.vertices) and check_x_property(fixture) is None
    secs = time.perf_counter() - t0
    verdict(4, violations == 0 and fixture_ok and secs < 60,
            f"200 terrains n<=30, {violations} antiholes of size 6/7; fixture antihole "
            f"{None if w is None else list(w.vertices)} with X-property={fixture_ok}, {secs:.2f} s")


# 5 -------------------------------------------------------------------------------


def test_criterion_05_cycle_order(verdict):
    rng = random.Random(501)
    generators = (random_terrain, random_walk_terrain, noisy_bowl_terrain)
    failures = 0
    by_length = {k: 0 for k in range(4, 8)}
    t0 = time.perf_counter()
    for i in range(100):
        g = build_visibility_graph(generators[i % 3](rng.randint(4, 14), rng))
        for c in induced_cycles(g, 4, 7):
            by_length[len(c)] += 1
            failures += not check_cycle_order(g, c)
    secs = time.perf_counter() - t0
    cycles = sum(by_length.values())
    verdict(5, failures == 0 and cycles > 0 and secs < 60,
            f"100 TVGs n<=14, induced cycles by length {by_length}, {failures} order violations, "
            f"{secs:.2f} s")


# 6 -------------------------------------------------------------------------------


def test_criterion_06_unit_interval(verdict):
    g = OrderedGraph.from_edges(6, UNIT_INTERVAL_EDGES)
    t0 = time.perf_counter()
    result = is_persistent_any_order(g)
    exhaustive = any(is_persistent(relabel(g, p))[0] for p in permutations(range(6)))
    secs = time.perf_counter() - t0
    verdict(6, result is False and exhaustive is False and secs < 5,
            f"unit interval graph persistent under some order: {result} "
            f"(all 720 orders: {exhaustive}), {secs:.3f} s")


# 7 and 8 ---------------------------------------------------------------------------


def _sp_queries():
    """(graph, [(s, t), ...]) groups for the three shortest-path campaigns."""
    rng = random.Random(701)
    groups = []
    for _ in range(50):
        g = build_visibility_graph(random_terrain(rng.randint(2, 12), rng))
        groups.append((g, [(s, t) for s in range(g.n) for t in range(g.n)]))
    # 100 graphs x 10 pairs; every fourth graph is an induced subgraph
    for i in range(100):
        n = rng.randint(2, 500)
        t = random_terrain(n, rng) if i % 2 else random_walk_terrain(n, rng)
        g = build_visibility_graph(t)
        if i % 4 == 0:
            g = random_induced_subgraph(g, rng)
        groups.append((g, [(rng.randrange(g.n), rng.randrange(g.n)) for _ in range(10)]))
    fixture = OrderedGraph.from_edges(6, ANTIHOLE6_EDGES)
    groups.append((fixture, [(s, t) for s in range(6) for t in range(6)]))
    return groups


@pytest.fixture(scope="module")
def sp_campaign():
    stats = {"queries": 0, "mismatches": 0, "bound_violations": 0}
    t0 = time.perf_counter()
    for g, pairs in _sp_queries():
        table = precompute_closest(g)
        for s, t in pairs:
            want = bfs_distance(g, s, t)
            for mode in MODES:
                c = Counters()
                got = shortest_distance(g, s, t, mode, table=table if mode == PRECOMPUTE else None,
                                        counters=c)
                stats["queries"] += 1
                stats["mismatches"] += got != want
                if want < INF and s != t:
                    if c.iterations > want + 1 or c.queue_pushes > 2 * (want + 1):
                        stats["bound_violations"] += 1
    stats["secs"] = time.perf_counter() - t0
    return stats


def test_criterion_07_sp_oracle(verdict, sp_campaign):
    st = sp_campaign
    verdict(7, st["mismatches"] == 0 and st["secs"] < 60,
            f"{st['queries']} queries (both modes) vs BFS, {st['mismatches']} mismatches, {st['secs']:.2f} s")


def test_criterion_08_output_sensitivity(verdict, sp_campaign):
    st = sp_campaign
    verdict(8, st["bound_violations"] == 0,
            f"iterations <= d*+1 and pushes <= 2(d*+1): {st['bound_violations']} violations "
            f"over {st['queries']} queries")


# 10 --------------------------------------------------------------------------------


def test_criterion_10_base_lemma(verdict):
    rng = random.Random(1001)
    violations = 0
    t0 = time.perf_counter()
    for _ in range(100):
        f = random_funnel(rng.randint(3, 13), rng)
        violations += base_lemma_violation(f) is not None
    secs = time.perf_counter() - t0
    verdict(10, violations == 0 and secs < 60,
            f"100 funnels nL+nR<=12, {violations} base-lemma violations, {secs:.2f} s")


# 9 and 11 --------------------------------------------------------------------------


@pytest.fixture(scope="module")
def dp_campaign():
    rng = random.Random(901)
    stats = {"mismatches": 0, "non_dominating": 0, "bound_violations": 0, "max_ratio": 0.0}
    t0 = time.perf_counter()
    for _ in range(300):
        f = random_funnel(rng.randint(3, 16), rng)
        dp = DPStats()
        chosen = labels_to_vertices(f, min_dominating_set(f, dp))
        stats["non_dominating"] += not dominates(f.graph, chosen)
        stats["mismatches"] += len(chosen) != len(brute_force_dominating_set(f.graph))
        stats["bound_violations"] += dp.pair_evaluations > dp_pair_bound(f)
        stats["max_ratio"] = max(stats["max_ratio"], dp.pair_evaluations / (f.nL + f.nR + 1) ** 4)
    stats["fixture_size"] = len(min_dominating_set(funnel_from_terrain(FUNNEL_FIG)))
    stats["secs"] = time.perf_counter() - t0
    return stats


def test_criterion_09_funnel_dp(verdict, dp_campaign):
    st = dp_campaign
    ok = st["mismatches"] == 0 and st["non_dominating"] == 0 and st["fixture_size"] == 2 and st["secs"] < 120
    verdict(9, ok, f"300 funnels nL+nR<=15, {st['mismatches']} size mismatches, "
                   f"{st['non_dominating']} non-dominating, funnel-fig size {st['fixture_size']}, "
                   f"{st['secs']:.2f} s")


def test_criterion_11_dp_work_bound(verdict, dp_campaign):
    st = dp_campaign
    verdict(11, st["bound_violations"] == 0,
            f"pair evaluations <= 4(nL+nR+1)^4: {st['bound_violations']} violations, "
            f"max pairs/(nL+nR+1)^4 = {st['max_ratio']:.4f}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
