"""End-to-end acceptance checks, one test per criterion.

Run with ``pytest tests/test_acceptance.py -v`` (the PASS/FAIL lines appear in the
terminal summary) or directly with ``python3 tests/test_acceptance.py``.
"""

import random
import time
from fractions import Fraction


from acceptance_log import record
from formulas import MIXED_CLOSED, MIXED_HILBERT, X, delta_cap, delta_subset, falling, restriction_coproduct
from hyperhopf import invariants
from hyperhopf.algebra import EPSILON_DELTA, LAMBDA_ZERO, convolve
from hyperhopf.coproducts import ALL_MODES, coproduct_pair, delta_contract
from hyperhopf.core import Mode, all_hypergraphs_upto, random_hypergraph, single_edge
from hyperhopf.invariants import chromatic, chromatic_hilbert, coloring_oracle, lambda_character
from hyperhopf.multicomplex import (
    example_complex,
    mc_quotient,
)
from hyperhopf.polynomial import RationalPolynomial
from hyperhopf.verify import (
    antipode_checks,
    axiom_checks,
    character_checks,
    eulerian_checks,
    hypergraph_corpus,
    mc_antipode_checks,
    mc_axiom_checks,
    mc_morphism_checks,
    multicomplex_corpus,
    orientation_checks,
)


def _run(items, *check_fns, seed=0):
    rng = random.Random(seed)
    failures, count = [], 0
    for item in items:
        for fn in check_fns:
            for name, ok, _ in fn(item, rng):
                count += 1
                if not ok:
                    failures.append((name, item))
    return count, failures


def _finish(number, title, ok, start, limit, detail=""):
    status = record(number, title, ok, time.perf_counter() - start, limit, detail)
    assert status == "PASS", detail


def test_criterion_1_tables():
    worst = 0.0
    ok = True
    for n in range(1, 8):
        invariants._block_counts.cache_clear()
        invariants._ordered_level_counts.cache_clear()
        t = time.perf_counter()
        T = single_edge(n)
        if n >= 2 and n <= 6:
            ok &= chromatic(T, "cap") == falling(n)
            ok &= chromatic(T, "subset") == X**n - X
        ok &= chromatic(T, "mixed") == MIXED_CLOSED[n]
        ok &= chromatic_hilbert(T, "mixed") == MIXED_HILBERT[n]
        worst = max(worst, time.perf_counter() - t)
    status = record(1, "single-edge chromatic tables", ok, worst, 1, "(slowest single table)")
    assert status == "PASS"


def test_criterion_2_coproduct_examples():
    start = time.perf_counter()
    ok = True
    for n in range(2, 6):
        for m in ALL_MODES:
            ok &= coproduct_pair(single_edge(n), m) == restriction_coproduct(n, m.left.value, m.right.value)
        ok &= delta_contract(single_edge(n), "subset") == delta_subset(n)
        ok &= delta_contract(single_edge(n), "cap") == delta_cap(n)
    _finish(2, "single-edge coproduct formulas", ok, start, 5)


def test_criterion_3_oracle():
    start = time.perf_counter()
    corpus = hypergraph_corpus(6, 100, seed=2024, min_random_n=5)
    bad = []
    for G in corpus:
        for v in ("subset", "cap", "mixed"):
            P = chromatic(G, v)
            for N in range(G.n + 2):
                if P(N) != coloring_oracle(G, N, v):
                    bad.append((G, v, N))
    _finish(3, f"chromatic = colouring oracle on {len(corpus)} hypergraphs", not bad, start, 120, f"{len(bad)} mismatches")


def test_criterion_4_axioms():
    start = time.perf_counter()
    corpus = hypergraph_corpus(5, 200, seed=4)
    count, bad = _run(corpus, axiom_checks, seed=4)
    _finish(4, f"bialgebra axioms, {count} identities", not bad, start, 300, f"{len(bad)} failures")


def test_criterion_5_orientations():
    start = time.perf_counter()
    corpus = [G for G in all_hypergraphs_upto(4) if len(G.edges) <= 3]
    corpus += [single_edge(n) for n in range(1, 6)]
    count, bad = _run(corpus, orientation_checks)
    _finish(5, f"evaluation at -1 and Stanley count, {count} identities", not bad, start, 300, f"{len(bad)} failures")


def test_criterion_6_antipodes():
    start = time.perf_counter()
    count, bad = _run(all_hypergraphs_upto(4), antipode_checks)
    _finish(6, f"antipode formulas and axioms, {count} identities", not bad, start, 600, f"{len(bad)} failures")


def test_criterion_7_characters():
    start = time.perf_counter()
    rng = random.Random(7)
    five = [random_hypergraph(5, rng) for _ in range(60)]
    bad = []
    for G in list(all_hypergraphs_upto(4)) + five:
        for dm in Mode:
            if convolve(LAMBDA_ZERO, lambda_character(dm), dm)(G) != EPSILON_DELTA(G):
                bad.append(("λ_0 ⋆ λ", G))
    count, more = _run(all_hypergraphs_upto(4), character_checks, eulerian_checks)
    count2, more2 = _run(five, character_checks)
    bad += more + more2
    _finish(7, "character calculus and eulerian idempotent", not bad, start, 300, f"{len(bad)} failures")


def test_criterion_8_non_integral_witness():
    start = time.perf_counter()
    expected = RationalPolynomial([0, Fraction(1, 2), Fraction(-3, 2), 1])
    P = chromatic(single_edge(3), "mixed")
    _finish(8, f"mixed chromatic of T_3 is {P}", P == expected and not P.is_integral(), start, 60)


def test_criterion_9_multicomplexes():
    start = time.perf_counter()
    C = example_complex()
    Q = mc_quotient(C, [["a", "b"], ["c", "d"]])
    images = sorted(v for _, v in Q.instances)
    ok = images == sorted([(2, 0), (1, 1), (1, 1), (1, 1), (0, 2), (2, 1), (2, 1), (2, 1)])
    ids = [eid for eid, _ in Q.instances]
    rel = {(ids[a], ids[b]) for a, b in Q.order}
    ok &= rel == {("ab", "abc"), ("ac1", "abc"), ("ac2", "aac"), ("bd", "bbd")}
    _, bad = _run(multicomplex_corpus(5, 100, seed=9), mc_morphism_checks, mc_axiom_checks)
    _, bad2 = _run(multicomplex_corpus(4, 100, seed=10), mc_antipode_checks)
    ok &= not bad and not bad2
    _finish(9, "multi-complex quotient, κ morphism, antipode and eulerian", ok, start, 600, f"{len(bad) + len(bad2)} failures")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
