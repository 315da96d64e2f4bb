import random

import pytest

from hyperhopf.algebra import LinearCombination
from hyperhopf.antipode import (
    antipode,
    antipode_closed,
    antipode_mixed,
    chromatic_variant,
    takeuchi_antipode,
    theta_pairs,
    verify_antipode,
)
from hyperhopf.config import HyperhopfError
from hyperhopf.coproducts import ALL_MODES, CAP_CAP, SUBSET_CAP, SUBSET_SUBSET
from hyperhopf.core import EMPTY, all_hypergraphs_upto, edgeless, random_hypergraph, single_edge
from hyperhopf.invariants import chromatic, chromatic_of


def lc(*pairs):
    return LinearCombination.collect([((g,), c) for g, c in pairs], 1)


def test_single_vertex():
    for m in ALL_MODES:
        assert takeuchi_antipode(single_edge(1), m) == lc((single_edge(1), -1))


def test_empty_is_fixed():
    assert takeuchi_antipode(EMPTY, SUBSET_SUBSET) == LinearCombination.of(EMPTY)


def test_single_edge_on_two_vertices():
    # S(T_2) = -T_2 + 2 T_1^2 in every mode
    for m in ALL_MODES:
        assert takeuchi_antipode(single_edge(2), m) == lc((single_edge(2), -1), (edgeless(2), 2))


def test_single_edge_on_three_vertices_by_hand():
    # subset: partitions of T_3 into k blocks contribute (-1)^k k! and only the full block keeps the edge
    assert takeuchi_antipode(single_edge(3), SUBSET_SUBSET) == lc((single_edge(3), -1), (edgeless(3), 1 * 3 * 2 - 6))
    # cap: two-block partitions keep an edge on the 2-element block
    from hyperhopf.core import Hypergraph

    T2T1 = Hypergraph.from_edges(range(3), [[0, 1]])
    assert takeuchi_antipode(single_edge(3), CAP_CAP) == lc((single_edge(3), -1), (T2T1, 6), (edgeless(3), -6))


def test_closed_forms_and_mixed_formula_match_takeuchi():
    for G in all_hypergraphs_upto(4):
        for m in ALL_MODES:
            T = takeuchi_antipode(G, m)
            if m.equal:
                assert antipode_closed(G, m.left) == T
            elif G.n:
                assert antipode_mixed(G) == T


@pytest.mark.parametrize("seed", range(4))
def test_mixed_formula_random_five_vertices(seed):
    G = random_hypergraph(5, random.Random(seed))
    assert antipode_mixed(G) == takeuchi_antipode(G, SUBSET_CAP)


def test_both_mixed_modes_share_an_antipode():
    for G in all_hypergraphs_upto(3):
        assert takeuchi_antipode(G, SUBSET_CAP) == takeuchi_antipode(G, ALL_MODES[3])


def test_antipode_axiom_and_involution():
    for G in all_hypergraphs_upto(3):
        for m in ALL_MODES:
            assert verify_antipode(G, m)


def test_chromatic_reciprocity():
    for G in all_hypergraphs_upto(4):
        for m in ALL_MODES:
            v = chromatic_variant(m)
            assert chromatic_of(takeuchi_antipode(G, m), v) == chromatic(G, v).compose_neg()


def test_theta_pairs_rejects_empty():
    with pytest.raises(HyperhopfError):
        next(theta_pairs(EMPTY))


def test_dispatch_errors():
    with pytest.raises(HyperhopfError):
        antipode(single_edge(2), SUBSET_CAP, "closed")
    with pytest.raises(HyperhopfError):
        antipode(single_edge(2), SUBSET_SUBSET, "mixed")
    with pytest.raises(HyperhopfError):
        antipode(single_edge(2), SUBSET_SUBSET, "bogus")
