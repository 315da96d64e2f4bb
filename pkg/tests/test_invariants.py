import random
from fractions import Fraction
from itertools import product

import pytest

from formulas import MIXED_CLOSED, MIXED_HILBERT, X, falling
from hyperhopf.config import ResourceCapError
from hyperhopf.core import Hypergraph, Mode, all_hypergraphs_upto, edgeless, gamma, random_hypergraph, single_edge
from hyperhopf.invariants import (
    chromatic,
    chromatic_hilbert,
    chromatic_via_gamma,
    chromatic_via_lambda,
    coefficients_via_counts,
    coloring_oracle,
    lambda_character,
    lambda_subset_closed,
    p_zero,
    spanning_counts,
    spanning_counts_bruteforce,
)
from hyperhopf.polynomial import RationalPolynomial

VARIANTS = ("subset", "cap", "mixed")


def pure_python_colorings(G, N, variant):
    """Second oracle, without numpy, for tiny cases."""
    count = 0
    for c in product(range(N), repeat=G.n):
        ok = True
        for e in G.edges:
            vals = [c[v] for v in range(G.n) if e >> v & 1]
            if variant == "subset":
                ok = len(set(vals)) > 1
            elif variant == "cap":
                ok = len(set(vals)) == len(vals)
            else:
                ok = vals.count(max(vals)) == 1
            if not ok:
                break
        count += ok
    return count


@pytest.mark.parametrize("n", range(2, 7))
def test_single_edge_subset_and_cap(n):
    assert chromatic(single_edge(n), "cap") == falling(n)
    assert chromatic(single_edge(n), "subset") == X**n - X


@pytest.mark.parametrize("n", range(1, 8))
def test_single_edge_mixed_table(n):
    P = chromatic(single_edge(n), "mixed")
    assert P == MIXED_CLOSED[n]
    assert chromatic_hilbert(single_edge(n), "mixed") == MIXED_HILBERT[n]


def test_mixed_is_not_integral():
    P = chromatic(single_edge(3), "mixed")
    assert P == RationalPolynomial([0, Fraction(1, 2), Fraction(-3, 2), 1])
    assert not P.is_integral()


def test_edgeless_is_a_power():
    for v in VARIANTS:
        assert chromatic(edgeless(4), v) == X**4


@pytest.mark.parametrize("variant", VARIANTS)
def test_two_oracles_agree(variant):
    rng = random.Random(11)
    for _ in range(15):
        G = random_hypergraph(rng.randint(1, 4), rng)
        for N in range(4):
            assert coloring_oracle(G, N, variant) == pure_python_colorings(G, N, variant)


def test_mixed_hand_count():
    # two colours on T_3: the maximum must be hit once, so exactly one vertex gets colour 1
    assert coloring_oracle(single_edge(3), 2, "mixed") == 3
    assert chromatic(single_edge(3), "mixed")(2) == 3


@pytest.mark.parametrize("variant", VARIANTS)
def test_oracle_on_small_basis(variant):
    for G in all_hypergraphs_upto(3):
        P = chromatic(G, variant)
        for N in range(G.n + 2):
            assert P(N) == coloring_oracle(G, N, variant)


def test_oracle_work_bound():
    with pytest.raises(ResourceCapError):
        coloring_oracle(edgeless(10), 10, "subset")


def test_cap_is_chromatic_of_gamma():
    for G in all_hypergraphs_upto(4):
        assert chromatic(G, "cap") == chromatic_via_gamma(G)


def test_spanning_counts_against_bruteforce():
    rng = random.Random(5)
    for G in list(all_hypergraphs_upto(3)) + [random_hypergraph(5, rng) for _ in range(10)]:
        assert spanning_counts(G) == spanning_counts_bruteforce(G)


def test_subset_coefficients_from_spanning_counts():
    for G in all_hypergraphs_upto(4):
        P = chromatic(G, "subset")
        assert coefficients_via_counts(G) == [P.coefficient(i) for i in range(G.n + 1)]


def test_lambda_values_on_single_edge():
    assert lambda_character(Mode.SUBSET)(single_edge(3)) == -1
    assert lambda_character(Mode.CAP)(single_edge(3)) == 2
    assert lambda_character(Mode.SUBSET)(single_edge(1)) == 1


def test_lambda_subset_closed_form():
    for G in all_hypergraphs_upto(4):
        assert lambda_subset_closed(G) == lambda_character(Mode.SUBSET)(G)


@pytest.mark.parametrize("mode", ["subset", "cap"])
def test_chromatic_from_lambda(mode):
    for G in all_hypergraphs_upto(4):
        assert chromatic_via_lambda(G, mode) == chromatic(G, mode)
        assert lambda_character(mode)(G).denominator == 1


def test_p_zero_is_multiplicative():
    assert p_zero(single_edge(3)) * p_zero(single_edge(2)) == X**5


def test_gamma_of_disjoint_edges():
    G = Hypergraph.from_edges("abcd", [["a", "b"], ["c", "d"]])
    assert gamma(G).edges == G.edges
