import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperhopf.algebra import (
    EPSILON_DELTA,
    LAMBDA_ZERO,
    Character,
    LinearCombination,
    NotInvertibleError,
    character_inverse,
    convolve,
)
from hyperhopf.config import HyperhopfError
from hyperhopf.core import EMPTY, Hypergraph, all_hypergraphs_upto, disjoint_union, edgeless, random_hypergraph, single_edge


def lc_strategy():
    return st.lists(
        st.tuples(st.integers(0, 3), st.integers(0, 10**6), st.integers(-3, 3)), min_size=0, max_size=4
    ).map(
        lambda items: LinearCombination.collect(
            (((random_hypergraph(n, random.Random(s)),), c) for n, s, c in items), 1
        )
    )


def test_multiply_single_vertices():
    T1 = LinearCombination.of(single_edge(1))
    assert T1.multiply(T1) == LinearCombination.of(edgeless(2))


def test_empty_is_the_unit():
    G = LinearCombination.of(single_edge(3))
    assert G.multiply(LinearCombination.of(EMPTY)) == G


def test_labels_do_not_matter():
    a = LinearCombination.of(Hypergraph.from_edges("xyz", [["x", "y"]]))
    b = LinearCombination.of(Hypergraph.from_edges([1, 2, 3], [[3, 1]]))
    assert a == b


@settings(max_examples=40, deadline=None)
@given(lc_strategy(), lc_strategy(), lc_strategy())
def test_product_commutative_associative_distributive(x, y, z):
    assert x.multiply(y) == y.multiply(x)
    assert x.multiply(y).multiply(z) == x.multiply(y.multiply(z))
    assert x.multiply(y + z) == x.multiply(y) + x.multiply(z)


def test_add_requires_equal_degree():
    G = LinearCombination.of(single_edge(2))
    with pytest.raises(HyperhopfError):
        G + G.tensor(G)


def test_zero_coefficients_vanish():
    G = LinearCombination.of(single_edge(2))
    assert (G - G).is_zero()
    assert len(G.scale(0)) == 0


def test_regroup_m_1_3_24():
    a, b, c, d = (single_edge(k) for k in (1, 2, 3, 2))
    x = LinearCombination.of(a, b, c, d)
    y = x.regroup([(0,), (2,), (1, 3)])
    assert y == LinearCombination.of(a, c, disjoint_union(b, d))


def test_character_is_multiplicative():
    chi = Character(lambda G: G.n + len(G.edges), "toy")
    G = disjoint_union(single_edge(3), single_edge(2))
    assert chi(G) == chi(single_edge(3)) * chi(single_edge(2))
    assert chi(EMPTY) == 1


@pytest.mark.parametrize("mode", ["subset", "cap"])
def test_inverse_is_two_sided(mode):
    inv = character_inverse(LAMBDA_ZERO, mode)
    for G in all_hypergraphs_upto(4):
        assert convolve(inv, LAMBDA_ZERO, mode)(G) == EPSILON_DELTA(G)
        assert convolve(LAMBDA_ZERO, inv, mode)(G) == EPSILON_DELTA(G)


def test_non_invertible_character():
    with pytest.raises(NotInvertibleError):
        character_inverse(Character(lambda G: 0, "zero"), "subset")


def test_epsilon_delta_is_the_convolution_unit():
    chi = Character(lambda G: Fraction(G.n, 1 + len(G.edges)), "toy")
    for G in all_hypergraphs_upto(3):
        for mode in ("subset", "cap"):
            assert convolve(EPSILON_DELTA, chi, mode)(G) == chi(G)
            assert convolve(chi, EPSILON_DELTA, mode)(G) == chi(G)
