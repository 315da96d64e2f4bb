import random

import pytest

from formulas import delta_cap, delta_subset, restriction_coproduct
from hyperhopf.config import HyperhopfError
from hyperhopf.coproducts import (
    ALL_MODES,
    CAP_SUBSET,
    SUBSET_CAP,
    CoproductMode,
    check_axioms,
    coproduct_iterated,
    coproduct_pair,
    delta_contract,
    iterated_legs,
    reduced_coproduct,
)
from hyperhopf.core import EMPTY, Hypergraph, all_hypergraphs_upto, random_hypergraph, single_edge


@pytest.mark.parametrize("n", range(2, 6))
@pytest.mark.parametrize("mode", ALL_MODES, ids=str)
def test_single_edge_restriction_coproducts(n, mode):
    assert coproduct_pair(single_edge(n), mode) == restriction_coproduct(n, mode.left.value, mode.right.value)


@pytest.mark.parametrize("n", range(2, 6))
def test_single_edge_contraction_coproducts(n):
    assert delta_contract(single_edge(n), "subset") == delta_subset(n)
    assert delta_contract(single_edge(n), "cap") == delta_cap(n)


def test_mode_parsing():
    assert CoproductMode.parse("cap") == CoproductMode("cap", "cap")
    assert CoproductMode.parse("subset, cap") == SUBSET_CAP
    with pytest.raises(HyperhopfError):
        CoproductMode.parse("subset,cap,cap")
    with pytest.raises(HyperhopfError):
        CoproductMode.parse("union")


def test_single_vertex_is_primitive():
    for mode in ALL_MODES:
        assert reduced_coproduct(single_edge(1), mode).is_zero()


def test_reduced_coproduct_rejects_unit():
    with pytest.raises(HyperhopfError):
        reduced_coproduct(EMPTY, ALL_MODES[0])


def test_mixed_legs_form_a_staircase():
    G = Hypergraph.from_edges("abc", [["a", "b", "c"]])
    legs = iterated_legs(G, [G.mask("c"), G.mask("ab")], SUBSET_CAP)
    assert legs[1].edges  # {a,b,c} ⊆ {a,b,c}, cut down to {a,b}
    legs = iterated_legs(G, [G.mask("ab"), G.mask("c")], SUBSET_CAP)
    assert not legs[0].edges and not legs[1].edges


@pytest.mark.parametrize("mode", ALL_MODES, ids=str)
def test_iterated_coproduct_counts_ordered_partitions(mode):
    # every ordered triple (I1, I2, I3) of disjoint subsets covering V appears once: 3^n labeled terms
    G = single_edge(3)
    total = sum(coproduct_iterated(G, mode, 2).terms.values())
    assert total == 27


def test_coopposite_relation_on_small_corpus():
    for G in all_hypergraphs_upto(3):
        assert coproduct_pair(G, CAP_SUBSET).swap() == coproduct_pair(G, SUBSET_CAP)


@pytest.mark.parametrize("seed", range(5))
def test_cointeraction_random(seed):
    G = random_hypergraph(5, random.Random(seed))
    for mode in ("subset", "cap"):
        assert check_axioms(G, "cointeraction", mode)


def test_cointeraction_fails_for_mixed_pairing():
    # δ^(⊂) does not cointeract with Δ^(∩,∩); a check that always passes would be useless
    from hyperhopf.coproducts import CAP_CAP, m_1_3_24

    G = single_edge(3)
    lhs = delta_contract(G, "subset").apply_leg(0, lambda f: coproduct_pair(f, CAP_CAP))
    D = coproduct_pair(G, CAP_CAP)
    rhs = m_1_3_24(
        D.apply_leg(0, lambda f: delta_contract(f, "subset")).apply_leg(2, lambda f: delta_contract(f, "subset"))
    )
    assert lhs != rhs


def test_unknown_axiom():
    with pytest.raises(HyperhopfError):
        check_axioms(single_edge(2), "bogus")


def test_multiplicativity_with_labels_clashing():
    G = Hypergraph.from_edges("ab", [["a", "b"]])
    assert check_axioms(G, "multiplicativity", ALL_MODES[2], G)
    assert check_axioms(G, "delta-multiplicativity", "cap", G)
