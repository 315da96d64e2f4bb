"""Verification suites: exact identity checks over exhaustive and seeded random corpora."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .algebra import EPSILON_DELTA, LAMBDA_ZERO, LinearCombination, convolve
from .antipode import antipode_closed, antipode_mixed, takeuchi_antipode, verify_antipode
from .coproducts import (
    ALL_MODES,
    CAP_CAP,
    SUBSET_SUBSET,
    check_axioms,
    coproduct_pair,
    delta_contract,
    m_1_3_24,
    reduced_coproduct,
)
from .core import Hypergraph, Mode, all_hypergraphs_upto, disjoint_union, random_hypergraph
from .invariants import (
    chromatic,
    chromatic_of,
    chromatic_via_lambda,
    coefficients_via_counts,
    coloring_oracle,
    eulerian_idempotent,
    eulerian_of,
    lambda_character,
    lambda_subset_closed,
)
from .multicomplex import (
    EMPTY_MC,
    kappa,
    kappa_legwise,
    mc_antipode,
    mc_coproduct,
    mc_counit_eps_delta,
    mc_delta_contract,
    mc_eulerian,
    mc_eulerian_of,
    mc_product,
    mc_reduced_coproduct_of,
    mc_takeuchi_antipode,
    random_multicomplex,
)
from .orientations import orientation_sums, stanley_count
from .serialize import factor_json, lincomb_json

Check = tuple[str, bool, dict]


@dataclass
class SuiteReport:
    suite: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.suite}: {self.checked} checks, {len(self.failures)} failures, {self.seconds:.2f}s"


def _lc(x: LinearCombination) -> list:
    return lincomb_json(x)


def _pair(name: str, lhs: LinearCombination, rhs: LinearCombination) -> Check:
    ok = lhs == rhs
    return name, ok, {} if ok else {"lhs": _lc(lhs), "rhs": _lc(rhs)}


def _values(name: str, lhs, rhs) -> Check:
    ok = lhs == rhs
    return name, ok, {} if ok else {"lhs": str(lhs), "rhs": str(rhs)}


# ---------------------------------------------------------------------------
# per-hypergraph checks
# ---------------------------------------------------------------------------

def oracle_checks(G: Hypergraph, rng: random.Random) -> Iterator[Check]:
    for v in ("subset", "cap", "mixed"):
        P = chromatic(G, v)
        for N in range(G.n + 2):
            yield _values(f"oracle[{v}, N={N}]", P(N), coloring_oracle(G, N, v))


def _axiom(G, which, mode=None, other=None) -> Check:
    r = check_axioms(G, which, mode, other)
    return r.axiom, r.ok, {} if r.ok else {"lhs": _lc(r.lhs), "rhs": _lc(r.rhs)}


def coassoc_checks(G, rng) -> Iterator[Check]:
    for m in ALL_MODES:
        yield _axiom(G, "coassoc", m)
    for dm in Mode:
        yield _axiom(G, "delta-coassoc", dm)


def multiplicativity_checks(G, rng) -> Iterator[Check]:
    H = random_hypergraph(rng.randint(0, 3), rng)
    for m in ALL_MODES:
        name, ok, detail = _axiom(G, "multiplicativity", m, H)
        yield name, ok, detail if ok else {**detail, "other": factor_json(H)}
    for dm in Mode:
        name, ok, detail = _axiom(G, "delta-multiplicativity", dm, H)
        yield name, ok, detail if ok else {**detail, "other": factor_json(H)}


def cocommutativity_checks(G, rng) -> Iterator[Check]:
    for m in (SUBSET_SUBSET, CAP_CAP):
        yield _axiom(G, "cocommutativity", m)


def coopposite_checks(G, rng) -> Iterator[Check]:
    yield _axiom(G, "coopposite")


def counit_checks(G, rng) -> Iterator[Check]:
    for m in ALL_MODES:
        yield _axiom(G, "counit", m)
    for dm in Mode:
        yield _axiom(G, "delta-counit", dm)


def cointeraction_checks(G, rng) -> Iterator[Check]:
    for dm in Mode:
        yield _axiom(G, "cointeraction", dm)


def axiom_checks(G, rng) -> Iterator[Check]:
    for fn in (
        coassoc_checks,
        multiplicativity_checks,
        cocommutativity_checks,
        coopposite_checks,
        counit_checks,
        cointeraction_checks,
    ):
        yield from fn(G, rng)


def orientation_checks(G, rng) -> Iterator[Check]:
    s = orientation_sums(G)
    yield _values("subset(-1) = signed acyclic orientations", chromatic(G, "subset")(-1), s.signed_all)
    yield _values(
        "cap(-1) = (-1)^n total acyclic orientations", chromatic(G, "cap")(-1), (-1) ** G.n * s.total_count
    )
    yield _values("mixed(-1) = signed 1-max acyclic orientations", chromatic(G, "mixed")(-1), s.signed_one_max)
    yield _values("cap(-1) = (-1)^n acyclic orientations of Γ(G)", chromatic(G, "cap")(-1), (-1) ** G.n * stanley_count(G))


def antipode_checks(G, rng) -> Iterator[Check]:
    for m in ALL_MODES:
        T = takeuchi_antipode(G, m)
        if m.equal:
            yield _pair(f"takeuchi = closed[{m}]", T, antipode_closed(G, m.left))
        elif G.n:
            yield _pair(f"takeuchi = edge-assignment[{m}]", T, antipode_mixed(G))
        r = verify_antipode(G, m)
        yield f"antipode axiom[{m}]", r.left == r.expected and r.right == r.expected, (
            {} if r.left == r.expected and r.right == r.expected
            else {"left": _lc(r.left), "right": _lc(r.right), "expected": _lc(r.expected)}
        )
        yield _pair(f"S∘S = Id[{m}]", r.involution, LinearCombination.of(G))
        v = "mixed" if not m.equal else m.left.value
        yield _values(f"chromatic(S(G)) = chromatic(G)(-X)[{m}]", chromatic_of(T, v), chromatic(G, v).compose_neg())


def character_checks(G, rng) -> Iterator[Check]:
    eps = EPSILON_DELTA(G)
    for dm in Mode:
        lam = lambda_character(dm)
        yield _values(f"λ_0 ⋆ λ = ε_δ[{dm}]", convolve(LAMBDA_ZERO, lam, dm)(G), eps)
        yield _values(f"λ ⋆ λ_0 = ε_δ[{dm}]", convolve(lam, LAMBDA_ZERO, dm)(G), eps)
        value = lam(G)
        yield f"λ integer-valued[{dm}]", value.denominator == 1, {} if value.denominator == 1 else {"value": str(value)}
        variant = dm.value
        yield _values(f"chromatic via λ[{dm}]", chromatic_via_lambda(G, dm), chromatic(G, variant))
    yield _values("λ_⊂ closed form = inversion", Fraction(lambda_subset_closed(G)), lambda_character(Mode.SUBSET)(G))
    P = chromatic(G, "subset")
    direct = [P.coefficient(i) for i in range(G.n + 1)]
    yield _values("coefficients via spanning counts", coefficients_via_counts(G), direct)


def eulerian_checks(G, rng) -> Iterator[Check]:
    w = eulerian_idempotent(G)
    yield _pair("ϖ∘ϖ = ϖ", eulerian_of(w), w)
    if G.n:
        out = LinearCombination.zero(2)
        for (f,), c in w.terms.items():
            out = out + reduced_coproduct(f, SUBSET_SUBSET).scale(c)
        yield _pair("ϖ(G) primitive", out, LinearCombination.zero(2))


HYPERGRAPH_SUITES: dict[str, Callable] = {
    "oracle": oracle_checks,
    "coassoc": coassoc_checks,
    "multiplicativity": multiplicativity_checks,
    "cocommutativity": cocommutativity_checks,
    "coopposite": coopposite_checks,
    "counit": counit_checks,
    "cointeraction": cointeraction_checks,
    "axioms": axiom_checks,
    "orientations": orientation_checks,
    "antipode": antipode_checks,
    "characters": character_checks,
    "eulerian": eulerian_checks,
}


# ---------------------------------------------------------------------------
# multi-complex checks
# ---------------------------------------------------------------------------

def mc_morphism_checks(C, rng) -> Iterator[Check]:
    D = random_multicomplex(rng.randint(0, 2), 2, rng)
    yield _values("κ(CD) = κ(C)κ(D)", kappa(mc_product(C, D)).sort_key, disjoint_union(kappa(C), kappa(D)).sort_key)
    yield _pair("κ∘Δ = Δ∘κ", kappa_legwise(mc_coproduct(C)), coproduct_pair(kappa(C), SUBSET_SUBSET))
    yield _pair("κ∘δ = δ∘κ", kappa_legwise(mc_delta_contract(C)), delta_contract(kappa(C), Mode.SUBSET))


def mc_antipode_checks(C, rng) -> Iterator[Check]:
    S = mc_antipode(C)
    yield _pair("closed = Takeuchi", S, mc_takeuchi_antipode(C))
    left = LinearCombination.zero(1)
    for (a, b), c in mc_coproduct(C).terms.items():
        left = left + mc_antipode(a).multiply(LinearCombination.of(b)).scale(c)
    expected = LinearCombination.of(EMPTY_MC) if C.n == 0 else LinearCombination.zero(1)
    yield _pair("antipode axiom", left, expected)
    w = mc_eulerian(C)
    yield _pair("ϖ∘ϖ = ϖ", mc_eulerian_of(w), w)
    if C.n:
        yield _pair("ϖ(C) primitive", mc_reduced_coproduct_of(w), LinearCombination.zero(2))


def mc_axiom_checks(C, rng) -> Iterator[Check]:
    D = mc_coproduct(C)
    yield _pair("Δ coassociative", D.apply_leg(0, mc_coproduct), D.apply_leg(1, mc_coproduct))
    d = mc_delta_contract(C)
    yield _pair("δ coassociative", d.apply_leg(0, mc_delta_contract), d.apply_leg(1, mc_delta_contract))
    C1 = LinearCombination.of(C)
    yield _pair("δ counit (right)", d.contract_leg(1, mc_counit_eps_delta), C1)
    yield _pair("δ counit (left)", d.contract_leg(0, mc_counit_eps_delta), C1)
    lhs = d.apply_leg(0, mc_coproduct)
    rhs = m_1_3_24(D.apply_leg(0, mc_delta_contract).apply_leg(2, mc_delta_contract))
    yield _pair("cointeraction", lhs, rhs)


def mc_checks(C, rng) -> Iterator[Check]:
    yield from mc_morphism_checks(C, rng)
    yield from mc_axiom_checks(C, rng)
    if C.n <= 4:
        yield from mc_antipode_checks(C, rng)


MC_SUITES: dict[str, Callable] = {
    "mc": mc_checks,
    "mc-morphism": mc_morphism_checks,
    "mc-axioms": mc_axiom_checks,
    "mc-antipode": mc_antipode_checks,
}

SUITES = tuple(HYPERGRAPH_SUITES) + tuple(MC_SUITES)


# ---------------------------------------------------------------------------
# runners
# ---------------------------------------------------------------------------

def hypergraph_corpus(max_n: int, count: int, seed: int, exhaustive_n: int = 4, min_random_n: int = 0) -> list[Hypergraph]:
    """Every isoclass on ≤ min(max_n, exhaustive_n) vertices, then ``count`` seeded random ones."""
    rng = random.Random(seed)
    out = list(all_hypergraphs_upto(min(max_n, exhaustive_n)))
    lo = min(min_random_n, max_n)
    out += [random_hypergraph(rng.randint(lo, max_n), rng) for _ in range(count)]
    return out


def multicomplex_corpus(max_n: int, count: int, seed: int, max_instances: int = 4) -> list:
    rng = random.Random(seed)
    return [random_multicomplex(rng.randint(1, max_n), max_instances, rng) for _ in range(count)]


def run_checks(name: str, items, checks: Callable, seed: int, max_failures: int = 5) -> SuiteReport:
    report = SuiteReport(name)
    rng = random.Random(seed + 1)
    start = time.perf_counter()
    for item in items:
        for check, ok, detail in checks(item, rng):
            report.checked += 1
            if not ok:
                report.failures.append({"suite": name, "check": check, "input": factor_json(item), **detail})
                if len(report.failures) >= max_failures:
                    report.seconds = time.perf_counter() - start
                    return report
    report.seconds = time.perf_counter() - start
    return report


def run_suite(name: str, max_n: int = 4, count: int = 0, seed: int = 0) -> SuiteReport:
    if name in HYPERGRAPH_SUITES:
        return run_checks(name, hypergraph_corpus(max_n, count, seed), HYPERGRAPH_SUITES[name], seed)
    if name in MC_SUITES:
        return run_checks(name, multicomplex_corpus(max_n, count, seed), MC_SUITES[name], seed)
    raise KeyError(name)
