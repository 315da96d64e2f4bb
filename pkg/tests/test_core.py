import random
from itertools import combinations, permutations
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperhopf.config import HyperhopfError, ResourceCapError
from hyperhopf.core import (
    EMPTY,
    Hypergraph,
    Mode,
    SetPartition,
    admissible_partitions,
    all_hypergraphs,
    canonical_form,
    component_masks,
    disjoint_union,
    enumerate_set_partitions,
    gamma,
    is_connected,
    is_isomorphic,
    partition_restrict,
    quotient,
    random_hypergraph,
    restrict,
    rgs_partitions,
    single_edge,
    staircase_restrict,
)


def bell(n):
    # Bell triangle
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def burnside_isoclasses(n):
    """Orbits of S_n on sets of subsets of size >= 2, counted by Burnside's lemma."""
    possible = [frozenset(c) for k in range(2, n + 1) for c in combinations(range(n), k)]
    total = 0
    for p in permutations(range(n)):
        seen, cycles = set(), 0
        for e in possible:
            if e in seen:
                continue
            cycles += 1
            f = e
            while f not in seen:
                seen.add(f)
                f = frozenset(p[x] for x in f)
        total += 2**cycles
    return total // factorial(n)


def relabel(G, rng):
    perm = list(range(G.n))
    rng.shuffle(perm)
    names = [f"v{p}" for p in perm]
    return Hypergraph.from_edges(names, [[names[i] for i in e] for e in G.edge_sets()])


def test_from_edges_rejects_bad_edges():
    with pytest.raises(HyperhopfError, match="repeats"):
        Hypergraph.from_edges("ab", [["a", "a"]])
    with pytest.raises(HyperhopfError, match="trivial"):
        Hypergraph.from_edges("ab", [["a"]])
    with pytest.raises(HyperhopfError, match="unknown"):
        Hypergraph.from_edges("ab", [["a", "z"]])
    with pytest.raises(HyperhopfError):
        Hypergraph.from_edges("aa", [])


def test_restrict_modes():
    G = Hypergraph.from_edges("abcd", [["a", "b", "c"], ["c", "d"]])
    assert restrict(G, "abd", Mode.SUBSET).edges == frozenset()
    assert restrict(G, "abd", Mode.CAP).edge_sets() == [["a", "b"]]
    assert restrict(G, "abcd", "subset") == G
    assert restrict(G, [], "cap") == EMPTY


def test_staircase_is_nested_restriction():
    G = Hypergraph.from_edges("abc", [["a", "b", "c"]])
    legs = staircase_restrict(G, [["a"], ["b", "c"]])
    assert [h.n for h in legs] == [1, 2]
    # {a} ∪ {b,c} covers the edge, cut by the second block
    assert legs[1].edge_sets() == [["b", "c"]]
    legs = staircase_restrict(G, [["b", "c"], ["a"]])
    assert legs[0].edges == frozenset() and legs[1].edges == frozenset()


def test_disjoint_union_and_components():
    G = disjoint_union(single_edge(3), single_edge(2))
    assert G.n == 5 and len(G.edges) == 2
    assert len(component_masks(G)) == 2
    assert not is_connected(G) and is_connected(single_edge(4))
    assert disjoint_union(G, EMPTY) == G


def test_quotient_and_partition_restrict():
    G = Hypergraph.from_edges("abcd", [["a", "b"], ["b", "c", "d"]])
    p = SetPartition.of([["a", "b"], ["c", "d"]])
    Q = quotient(G, p)
    # {a,b} collapses to one vertex; {b,c,d} maps onto both blocks
    assert Q.n == 2 and len(Q.edges) == 1
    assert partition_restrict(G, p, "subset").edge_sets() == [["a", "b"]]
    assert sorted(partition_restrict(G, p, "cap").edge_sets()) == [["a", "b"], ["c", "d"]]
    with pytest.raises(HyperhopfError):
        quotient(G, SetPartition.of([["a", "b"], ["c"]]))


def test_admissible_partitions_single_edge():
    T3 = single_edge(3)
    # ⊂: only discrete and full; ∩: every partition (each block meets the edge)
    assert len(admissible_partitions(T3, "subset")) == 2
    assert len(admissible_partitions(T3, "cap")) == bell(3)


@pytest.mark.parametrize("n", range(0, 8))
def test_partition_counts_are_bell_numbers(n):
    assert len(rgs_partitions(n)) == bell(n)
    assert len(list(enumerate_set_partitions(range(n)))) == bell(n)


@pytest.mark.parametrize("n", range(0, 5))
def test_isoclass_count_matches_burnside(n):
    assert len(all_hypergraphs(n)) == burnside_isoclasses(n)


def test_gamma_of_single_edge_is_complete_graph():
    assert len(gamma(single_edge(4)).edges) == comb(4, 2)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 7), st.integers(0, 10**6))
def test_canonical_form_is_relabeling_invariant(n, seed):
    rng = random.Random(seed)
    G = random_hypergraph(n, rng)
    H = relabel(G, rng)
    assert canonical_form(G) == canonical_form(H)
    assert is_isomorphic(G, H)


def test_canonical_form_separates_nonisomorphic():
    A = Hypergraph.from_edges("abcd", [["a", "b"], ["b", "c"], ["c", "d"]])
    B = Hypergraph.from_edges("abcd", [["a", "b"], ["a", "c"], ["a", "d"]])
    assert not is_isomorphic(A, B)


def test_vertex_cap():
    with pytest.raises(ResourceCapError):
        rgs_partitions(11)
