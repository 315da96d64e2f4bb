"""Antipodes of the restriction Hopf algebras."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial

from . import config
from .algebra import LinearCombination, linear_extension
from .config import HyperhopfError
from .coproducts import CoproductMode, _as_mode, coproduct_pair, counit_eps, product_map
from .core import (
    EMPTY,
    Hypergraph,
    Mode,
    _canonical_structure,
    admissible_partition_masks,
    partition_restrict_masks,
    quotient_masks,
    rgs_partitions,
)
from .orientations import orientation_sums


def _restrict_edges(edges, I: int, mode: Mode) -> set[int]:
    """Edges of the restriction to ``I``, kept in the ambient coordinates."""
    if mode is Mode.SUBSET:
        return {e for e in edges if not e & ~I}
    return {e & I for e in edges if (e & I).bit_count() >= 2}


def leg_edges(edges, blocks, mode: CoproductMode) -> frozenset[int]:
    """Edges of the product of the iterated-coproduct legs for ordered ``blocks``."""
    out: set[int] = set()
    covered = 0
    for p, block in enumerate(blocks):
        covered |= block
        if p == 0:
            out |= _restrict_edges(edges, block, mode.left)
        else:
            outer = _restrict_edges(edges, covered, mode.left)
            out |= _restrict_edges(outer, block, mode.right)
    return frozenset(out)


@lru_cache(maxsize=None)
def _takeuchi(n: int, edges: frozenset, mode: CoproductMode) -> LinearCombination:
    if n == 0:
        return LinearCombination.of(EMPTY)
    config.check_vertices(n, "Takeuchi antipode")
    labels = tuple(range(n))
    acc: dict[frozenset, int] = {}
    for blocks in rgs_partitions(n):
        k = len(blocks)
        sign = -1 if k % 2 else 1
        if mode.equal:
            key = leg_edges(edges, blocks, mode)
            acc[key] = acc.get(key, 0) + sign * factorial(k)
        else:
            for order in permutations(blocks):
                key = leg_edges(edges, order, mode)
                acc[key] = acc.get(key, 0) + sign
    return LinearCombination.collect(
        (((Hypergraph._trusted(labels, key),), c) for key, c in acc.items()), 1
    )


def takeuchi_antipode(G: Hypergraph, mode) -> LinearCombination:
    """Σ_k (-1)^k over ordered partitions into k nonempty blocks of the product of the legs."""
    m = _as_mode(mode)
    return _takeuchi(G.n, _canonical_structure(G.n, G.edges), m)


def antipode_closed(G: Hypergraph, mode) -> LinearCombination:
    """Closed forms for equal modes, indexed by admissible partitions.

    subset: coefficient of G|∼ is the signed count of acyclic orientations of G/∼;
    cap: coefficient is (-1)^cl(∼) times the number of total acyclic orientations of G/∼.
    """
    mode = Mode(mode)
    if G.n == 0:
        return LinearCombination.of(EMPTY)
    pairs = []
    for blocks in admissible_partition_masks(G, mode):
        sums = orientation_sums(quotient_masks(G, blocks))
        if mode is Mode.SUBSET:
            c = sums.signed_all
        else:
            c = (-1) ** len(blocks) * sums.total_count
        if c:
            pairs.append(((partition_restrict_masks(G, blocks, mode),), c))
    return LinearCombination.collect(pairs, 1)


@dataclass(frozen=True)
class ThetaTerm:
    """One admissible pair: blocks, the chosen block index per edge, and G|_θ∼."""

    blocks: tuple[int, ...]
    theta: tuple[tuple[int, int], ...]
    restricted: Hypergraph


def theta_pairs(G: Hypergraph):
    """Pairs (∼, θ) whose G|_θ∼ has the blocks as components and whose arc graph is acyclic."""
    if G.n == 0:
        raise HyperhopfError("the edge-assignment formula needs a nonempty hypergraph")
    config.check_vertices(G.n, "edge-assignment enumeration")
    edges = sorted(G.edges)
    for blocks in rgs_partitions(G.n):
        k = len(blocks)
        options = []
        for e in edges:
            met = [i for i in range(k) if blocks[i] & e]
            options.append((e, met))
        # a block with several vertices needs some edge cutting it in ≥ 2 vertices
        if any(
            b.bit_count() > 1 and not any((e & b).bit_count() >= 2 for e in edges) for b in blocks
        ):
            continue
        yield from _assign(G, blocks, options)


def _assign(G: Hypergraph, blocks, options):
    k = len(blocks)
    chosen: list[int] = []

    def rec(i: int, below: list[int]):
        if i == len(options):
            kept = frozenset(
                options[j][0] & blocks[t] for j, t in enumerate(chosen)
                if (options[j][0] & blocks[t]).bit_count() >= 2
            )
            H = Hypergraph._trusted(G.labels, kept)
            if all(_connected_within(b, kept) for b in blocks):
                yield ThetaTerm(tuple(blocks), tuple((options[j][0], t) for j, t in enumerate(chosen)), H)
            return
        e, met = options[i]
        for t in met:
            # arcs π -> t for every other block π meeting e
            new = below
            ok = True
            for p in met:
                if p == t:
                    continue
                if new[p] >> t & 1:
                    ok = False
                    break
                if not new[t] >> p & 1:
                    new = _add_arc(new, p, t, k)
            if not ok:
                continue
            chosen.append(t)
            yield from rec(i + 1, new)
            chosen.pop()

    yield from rec(0, [0] * k)


def _add_arc(below: list[int], lo: int, hi: int, k: int) -> list[int]:
    new = list(below)
    down = below[lo] | (1 << lo)
    for w in range(k):
        if w == hi or below[w] >> hi & 1:
            new[w] |= down
    return new


def _connected_within(b: int, edges) -> bool:
    pieces = [e for e in edges if not e & ~b]
    reach = b & -b
    grown = True
    while grown:
        grown = False
        for p in pieces:
            if p & reach and p & ~reach:
                reach |= p
                grown = True
    return reach == b


@lru_cache(maxsize=None)
def _mixed(n: int, edges: frozenset) -> LinearCombination:
    G = Hypergraph._trusted(tuple(range(n)), edges)
    return LinearCombination.collect(
        (((t.restricted,), -1 if len(t.blocks) % 2 else 1) for t in theta_pairs(G)), 1
    )


def antipode_mixed(G: Hypergraph) -> LinearCombination:
    """Σ over admissible (∼, θ) of (-1)^cl(∼) G|_θ∼; the antipode of both mixed modes."""
    if G.n == 0:
        raise HyperhopfError("the edge-assignment formula needs a nonempty hypergraph")
    return _mixed(G.n, _canonical_structure(G.n, G.edges))


def antipode(G: Hypergraph, mode, method: str = "takeuchi") -> LinearCombination:
    m = _as_mode(mode)
    if method == "takeuchi":
        return takeuchi_antipode(G, m)
    if method == "closed":
        if not m.equal:
            raise HyperhopfError("closed forms exist only for equal modes; use method 'mixed'")
        return antipode_closed(G, m.left)
    if method == "mixed":
        if m.equal:
            raise HyperhopfError("the edge-assignment formula is for the mixed modes")
        return antipode_mixed(G)
    raise HyperhopfError(f"unknown antipode method {method!r}")


def antipode_of(x: LinearCombination, mode) -> LinearCombination:
    m = _as_mode(mode)
    return linear_extension(lambda f: takeuchi_antipode(f, m), x)


@dataclass
class AntipodeCheck:
    ok: bool
    left: LinearCombination
    right: LinearCombination
    involution: LinearCombination
    expected: LinearCombination

    def __bool__(self) -> bool:
        return self.ok


def verify_antipode(G: Hypergraph, mode) -> AntipodeCheck:
    """m(S⊗Id)Δ = m(Id⊗S)Δ = ε·1 and S∘S = Id, on one basis element."""
    m = _as_mode(mode)
    S = lambda f: takeuchi_antipode(f, m)  # noqa: E731
    D = coproduct_pair(G, m)
    left = product_map(D.apply_leg(0, S))
    right = product_map(D.apply_leg(1, S))
    expected = LinearCombination.of(EMPTY, coeff=counit_eps(G)) if G.n == 0 else LinearCombination.zero(1)
    twice = antipode_of(S(G), m)
    G1 = LinearCombination.of(G)
    ok = left == expected and right == expected and twice == G1
    return AntipodeCheck(ok, left, right, twice, expected)


def chromatic_variant(mode) -> str:
    m = _as_mode(mode)
    if m.equal:
        return m.left.value
    return "mixed"


__all__ = [
    "CoproductMode",
    "takeuchi_antipode",
    "antipode_closed",
    "antipode_mixed",
    "theta_pairs",
    "antipode",
    "antipode_of",
    "verify_antipode",
    "chromatic_variant",
]
