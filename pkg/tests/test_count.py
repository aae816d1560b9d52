import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import random_graph, small_graphs
from oracles import dfs_profile, injective_pn, injective_profile, networkx_pn, to_networkx
from subpath.count import (
    BudgetExceeded,
    count_paths_between,
    count_subpaths,
    length_profile,
    profile_closed_small,
)
from subpath.graph import (
    Graph,
    GraphError,
    add_edge,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    relabel,
    star_graph,
)


# -- the reference counters agree with each other first ---------------------------


@given(small_graphs(max_n=6))
@settings(max_examples=60, deadline=None)
def test_oracles_agree(g):
    assert injective_profile(g) == dfs_profile(g)
    assert injective_pn(g) == networkx_pn(g)


@pytest.mark.parametrize(
    "g, expected",
    [
        (cycle_graph(4), 16),
        (path_graph(3), 6),
        (complete_graph(4), 34),
        (star_graph(4), 15),
        (Graph(1, ((),)), 1),
    ],
)
def test_small_values_against_oracle(g, expected):
    assert injective_pn(g) == expected
    assert count_subpaths(g) == expected


# -- engine against the oracles ---------------------------------------------------


@given(small_graphs(max_n=7))
@settings(max_examples=150, deadline=None)
def test_profile_matches_injective_oracle(g):
    if g.n == 0:
        assert length_profile(g).counts == (0,)
        return
    assert list(length_profile(g).counts) == injective_profile(g)


def test_profile_matches_dfs_on_random_graphs():
    rng = random.Random(3)
    for _ in range(60):
        # Dense graphs stay small so the Python walk finishes quickly.
        p = rng.choice([0.2, 0.35, 0.7])
        g = random_graph(rng, rng.randint(1, 9 if p > 0.5 else 12), p)
        assert list(length_profile(g).counts) == dfs_profile(g)


def test_profile_shape():
    prof = length_profile(complete_graph(3))
    assert prof.counts == (3, 3, 3)
    assert prof[3] == 0 and len(prof) == 3
    assert length_profile(cycle_graph(5)).counts == (5, 5, 5, 5, 5)
    assert length_profile(Graph(0, ())).total == 0


def test_large_complete_graphs():
    assert count_subpaths(complete_graph(9)) == 493209
    assert count_subpaths(complete_graph(10)) == 4932055


def test_beyond_word_size_uses_csr_walker():
    # 70 vertices: a long cycle plus chords, checked against pure-Python DFS.
    g = cycle_graph(70)
    assert count_subpaths(g) == 70 * 70
    g = add_edge(add_edge(g, 0, 35), 10, 60)
    assert count_subpaths(g) == sum(dfs_profile(g))
    path = path_graph(80)
    assert count_subpaths(path) == 80 * 81 // 2


@given(small_graphs(max_n=9))
@settings(max_examples=100, deadline=None)
def test_closed_forms_for_short_lengths(g):
    prof = length_profile(g)
    assert tuple(prof[l] for l in range(4)) == profile_closed_small(g)


# -- structural properties ------------------------------------------------------------


def test_relabelling_invariance():
    rng = random.Random(11)
    for _ in range(20):
        g = random_graph(rng, 9, 0.4)
        perm = list(range(9))
        rng.shuffle(perm)
        assert length_profile(relabel(g, perm)) == length_profile(g)


def test_disjoint_union_is_additive():
    rng = random.Random(5)
    for _ in range(10):
        g, h = random_graph(rng, 6, 0.5), random_graph(rng, 7, 0.5)
        assert count_subpaths(disjoint_union(g, h)) == count_subpaths(g) + count_subpaths(h)


def test_thread_counts_give_identical_results():
    rng = random.Random(8)
    for _ in range(5):
        g = random_graph(rng, 13, 0.5)
        ref = length_profile(g, threads=1)
        for t in (2, 4):
            assert length_profile(g, threads=t) == ref
        assert length_profile(g) == ref


# -- paths between two vertices -----------------------------------------------------


def test_paths_between():
    assert count_paths_between(complete_graph(4), 0, 1) == 5
    assert count_paths_between(cycle_graph(6), 0, 3) == 2
    assert count_paths_between(disjoint_union(path_graph(2), path_graph(2)), 0, 2) == 0
    with pytest.raises(GraphError):
        count_paths_between(path_graph(3), 1, 1)
    with pytest.raises(GraphError):
        count_paths_between(path_graph(3), 0, 3)


def test_paths_between_against_networkx():
    rng = random.Random(9)
    for _ in range(10):
        g = random_graph(rng, 8, 0.5)
        h = to_networkx(g)
        x, y = rng.sample(range(8), 2)
        assert count_paths_between(g, x, y) == sum(1 for _ in nx.all_simple_paths(h, x, y))


def test_pair_counts_sum_to_pn():
    g = random_graph(random.Random(4), 8, 0.5)
    pairs = sum(count_paths_between(g, x, y) for x in range(8) for y in range(x + 1, 8))
    assert pairs + g.n == count_subpaths(g)


# -- budget ------------------------------------------------------------------------------


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded) as info:
        count_subpaths(complete_graph(8), budget=100)
    assert info.value.budget == 100 and info.value.steps > 100
    with pytest.raises(BudgetExceeded):
        count_paths_between(complete_graph(8), 0, 1, budget=10)


def test_budget_large_enough_is_silent():
    assert count_subpaths(complete_graph(5), budget=10**6) == count_subpaths(complete_graph(5))


def test_budget_is_deterministic_across_threads():
    g = complete_graph(9)
    outcomes = set()
    for t in (1, 2, 4):
        try:
            count_subpaths(g, budget=200000, threads=t)
            outcomes.add("ok")
        except BudgetExceeded as exc:
            outcomes.add(exc.steps)
    assert len(outcomes) == 1
