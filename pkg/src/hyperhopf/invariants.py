"""Chromatic polynomials, colouring oracles, spanning-subgraph counts and the λ characters."""

from __future__ import annotations

from collections import Counter
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import config
from .algebra import (
    LAMBDA_ZERO,
    Character,
    LinearCombination,
    canonical_components,
    character_inverse,
    linear_extension,
)
from .config import HyperhopfError
from .core import (
    Hypergraph,
    Mode,
    _canonical_structure,
    admissible_partition_masks,
    bits,
    canonical_form,
    component_masks,
    gamma,
    partition_restrict_masks,
    quotient_masks,
)
from .polynomial import RationalPolynomial, falling_factorial, from_hilbert_basis


class Variant(str, Enum):
    SUBSET = "subset"
    CAP = "cap"
    MIXED = "mixed"

    def __str__(self) -> str:
        return self.value


def _variant(v) -> Variant:
    return v if isinstance(v, Variant) else Variant(v)


# ---------------------------------------------------------------------------
# chromatic polynomials
# ---------------------------------------------------------------------------

def _independent_table(n: int, edges: frozenset, variant: Variant) -> list[bool]:
    """indep[S]: the restriction to S has no nontrivial edge."""
    indep = [True] * (1 << n)
    for S in range(1 << n):
        if variant is Variant.SUBSET:
            indep[S] = not any(not e & ~S for e in edges)
        else:
            indep[S] = not any((e & S).bit_count() >= 2 for e in edges)
    return indep


@lru_cache(maxsize=None)
def _block_counts(n: int, edges: frozenset, variant: Variant) -> tuple[int, ...]:
    """Number of unordered partitions into k edge-free blocks, indexed by k."""
    indep = _independent_table(n, edges, variant)
    full = (1 << n) - 1
    # ways[mask] maps k -> count of partitions of mask into k independent blocks
    ways: list[dict[int, int] | None] = [None] * (full + 1)
    ways[0] = {0: 1}
    for mask in range(1, full + 1):
        low = mask & -mask
        rest = mask ^ low
        acc: dict[int, int] = {}
        sub = rest
        while True:
            block = sub | low
            if indep[block]:
                for k, c in ways[mask ^ block].items():
                    acc[k + 1] = acc.get(k + 1, 0) + c
            if sub == 0:
                break
            sub = (sub - 1) & rest
        ways[mask] = acc
    table = ways[full]
    return tuple(table.get(k, 0) for k in range(n + 1))


@lru_cache(maxsize=None)
def _ordered_level_counts(n: int, edges: frozenset) -> tuple[int, ...]:
    """Ordered partitions whose staircase restrictions are all edge-free, by block count."""
    full = (1 << n) - 1
    ways: list[dict[int, int]] = [dict() for _ in range(full + 1)]
    ways[0][0] = 1
    for covered in range(full + 1):
        if not ways[covered]:
            continue
        free = full & ~covered
        sub = free
        while sub:
            grown = covered | sub
            ok = all((e & sub).bit_count() < 2 for e in edges if not e & ~grown)
            if ok:
                target = ways[grown]
                for k, c in ways[covered].items():
                    target[k + 1] = target.get(k + 1, 0) + c
            sub = (sub - 1) & free
    return tuple(ways[full].get(k, 0) for k in range(n + 1))


def chromatic(G: Hypergraph, variant) -> RationalPolynomial:
    """The chromatic polynomial of the given variant."""
    v = _variant(variant)
    config.check_vertices(G.n, "chromatic polynomial")
    edges = _canonical_structure(G.n, G.edges)
    if v is Variant.MIXED:
        return from_hilbert_basis(_ordered_level_counts(G.n, edges))
    counts = _block_counts(G.n, edges, v)
    out = RationalPolynomial()
    for k, c in enumerate(counts):
        if c:
            out = out + falling_factorial(k) * c
    return out


def chromatic_hilbert(G: Hypergraph, variant) -> list[int]:
    """Coefficients in the Hilbert basis (counts of surjective colourings)."""
    from math import factorial

    v = _variant(variant)
    edges = _canonical_structure(G.n, G.edges)
    if v is Variant.MIXED:
        out = list(_ordered_level_counts(G.n, edges))
    else:
        out = [c * factorial(k) for k, c in enumerate(_block_counts(G.n, edges, v))]
    while out and out[-1] == 0:
        out.pop()
    return out


def coloring_oracle(G: Hypergraph, N: int, variant) -> int:
    """Count maps V(G) -> [N] satisfying the variant's condition, exhaustively."""
    v = _variant(variant)
    n = G.n
    if N < 0:
        raise HyperhopfError("number of colours must be nonnegative")
    config.check_work(N**n, f"colouring oracle with {N} colours on {n} vertices")
    if n == 0:
        return 1
    if N == 0:
        return 0
    colors = np.indices((N,) * n, dtype=np.int16).reshape(n, -1).T
    ok = np.ones(colors.shape[0], dtype=bool)
    for e in G.edges:
        cols = colors[:, list(bits(e))]
        if v is Variant.SUBSET:
            ok &= ~(cols == cols[:, :1]).all(axis=1)
        elif v is Variant.CAP:
            for a, b in combinations(range(cols.shape[1]), 2):
                ok &= cols[:, a] != cols[:, b]
        else:
            top = cols.max(axis=1, keepdims=True)
            ok &= (cols == top).sum(axis=1) == 1
    return int(ok.sum())


@lru_cache(maxsize=None)
def _graph_chromatic(n: int, edges: frozenset) -> RationalPolynomial:
    if not edges:
        return RationalPolynomial.monomial(n)
    e = max(edges)
    a, b = list(bits(e))
    G = Hypergraph._trusted(tuple(range(n)), edges)
    deleted = canonical_form(Hypergraph._trusted(G.labels, edges - {e}))
    blocks = tuple(1 << i for i in range(n) if i != b)
    blocks = tuple(m | (1 << b) if m == 1 << a else m for m in blocks)
    contracted = canonical_form(quotient_masks(G, blocks))
    return _graph_chromatic(deleted.n, deleted.edges) - _graph_chromatic(contracted.n, contracted.edges)


def chromatic_via_gamma(G: Hypergraph) -> RationalPolynomial:
    """Chromatic polynomial of the graph Γ(G), by deletion-contraction."""
    config.check_vertices(G.n, "deletion-contraction")
    C = canonical_form(gamma(G))
    return _graph_chromatic(C.n, C.edges)


def p_zero(G: Hypergraph) -> RationalPolynomial:
    return RationalPolynomial.monomial(G.n)


# ---------------------------------------------------------------------------
# spanning sub-hypergraph counts
# ---------------------------------------------------------------------------

def _merge(state: tuple[int, ...], e: int) -> tuple[int, ...]:
    hit = 0
    keep = []
    for comp in state:
        if comp & e:
            hit |= comp
        else:
            keep.append(comp)
    keep.append(hit)
    return tuple(sorted(keep))


@lru_cache(maxsize=None)
def _spanning(n: int, edges: frozenset) -> tuple[tuple[tuple[int, int], int], ...]:
    # states: component partition -> Counter(edge count -> number of subsets)
    states: dict[tuple[int, ...], Counter] = {tuple(1 << i for i in range(n)): Counter({0: 1})}
    for e in sorted(edges):
        nxt: dict[tuple[int, ...], Counter] = {}
        for state, by_j in states.items():
            nxt.setdefault(state, Counter()).update(by_j)
            merged = _merge(state, e)
            target = nxt.setdefault(merged, Counter())
            for j, c in by_j.items():
                target[j + 1] += c
        states = nxt
    table: Counter = Counter()
    for state, by_j in states.items():
        for j, c in by_j.items():
            table[(len(state), j)] += c
    return tuple(sorted(table.items()))


def spanning_counts(G: Hypergraph) -> Counter:
    """N_G(i, j): spanning sub-hypergraphs with i components and j nontrivial edges.

    Dynamic programming over the edges, tracking the component partition.
    Missing keys read as 0.
    """
    config.check_vertices(G.n, "spanning counts")
    return Counter(dict(_spanning(G.n, _canonical_structure(G.n, G.edges))))


def spanning_counts_bruteforce(G: Hypergraph) -> Counter:
    """Same table by listing all 2^|E+| edge subsets; slow, used as an oracle."""
    edges = sorted(G.edges)
    config.check_work(1 << len(edges), "spanning-subset enumeration")
    table: Counter = Counter()
    for choice in range(1 << len(edges)):
        chosen = frozenset(edges[i] for i in bits(choice))
        cc = len(component_masks(Hypergraph._trusted(G.labels, chosen)))
        table[(cc, len(chosen))] += 1
    return table


def signed_count(table: Counter, i: int) -> int:
    """Σ_j (-1)^j N(i, j)."""
    return sum(c if j % 2 == 0 else -c for (ii, j), c in table.items() if ii == i)


# ---------------------------------------------------------------------------
# λ characters
# ---------------------------------------------------------------------------

_LAMBDA: dict[Mode, Character] = {}


def lambda_character(mode) -> Character:
    """Convolution inverse of the constant-one character, for δ of the given mode."""
    mode = Mode(mode)
    if mode not in _LAMBDA:
        ch = character_inverse(LAMBDA_ZERO, mode)
        ch.name = f"lambda_{mode.value}"
        _LAMBDA[mode] = ch
    return _LAMBDA[mode]


def lambda_subset_closed(G: Hypergraph) -> int:
    """λ_⊂(G) = Σ_j (-1)^j N_G(cc(G), j)."""
    return signed_count(spanning_counts(G), len(component_masks(G)))


def chromatic_via_lambda(G: Hypergraph, mode) -> RationalPolynomial:
    """Σ over admissible partitions of λ(G|∼) X^cl(∼)."""
    mode = Mode(mode)
    lam = lambda_character(mode)
    coeffs = [Fraction(0)] * (G.n + 1)
    for blocks in admissible_partition_masks(G, mode):
        coeffs[len(blocks)] += lam(partition_restrict_masks(G, blocks, mode))
    return RationalPolynomial(coeffs)


def coefficients_via_counts(G: Hypergraph) -> list[int]:
    """Ascending coefficients a_i = Σ_j (-1)^j N_G(i, j) of the subset chromatic polynomial."""
    table = spanning_counts(G)
    return [signed_count(table, i) for i in range(G.n + 1)]


# ---------------------------------------------------------------------------
# eulerian idempotent
# ---------------------------------------------------------------------------

def eulerian_idempotent(G: Hypergraph) -> LinearCombination:
    """Σ over ∼ in E_⊂[G] of (Σ_j (-1)^j N_{G/∼}(1, j)) G|⊂∼."""
    pairs = []
    for blocks in admissible_partition_masks(G, Mode.SUBSET):
        c = signed_count(spanning_counts(quotient_masks(G, blocks)), 1)
        if c:
            pairs.append(((partition_restrict_masks(G, blocks, Mode.SUBSET),), c))
    return LinearCombination.collect(pairs, 1)


def eulerian_of(x: LinearCombination) -> LinearCombination:
    return linear_extension(eulerian_idempotent, x)


def chromatic_of(x: LinearCombination, variant) -> RationalPolynomial:
    """Linear extension of ``chromatic`` to degree-1 combinations."""
    out = RationalPolynomial()
    for (f,), c in x.terms.items():
        out = out + chromatic(f, variant) * c
    return out


__all__ = [
    "Variant",
    "chromatic",
    "chromatic_hilbert",
    "coloring_oracle",
    "chromatic_via_gamma",
    "p_zero",
    "spanning_counts",
    "spanning_counts_bruteforce",
    "lambda_character",
    "lambda_subset_closed",
    "chromatic_via_lambda",
    "coefficients_via_counts",
    "eulerian_idempotent",
    "eulerian_of",
    "canonical_components",
]
