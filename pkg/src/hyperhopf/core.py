"""Hypergraphs and the raw combinatorics on them.

A hypergraph stores its vertex labels in a tuple and its nontrivial edges as
integer bitmasks over label positions.  The empty edge and the singletons are
always present and never stored.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Hashable, Iterable, Iterator, Sequence

from . import config
from .config import HyperhopfError, ResourceCapError


class Mode(str, Enum):
    """Which induced sub-hypergraph: keep edges inside, or intersect edges."""

    SUBSET = "subset"
    CAP = "cap"

    def __str__(self) -> str:
        return self.value


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _compress(mask: int, rank: dict[int, int]) -> int:
    out = 0
    for b in bits(mask):
        out |= 1 << rank[b]
    return out


@dataclass(frozen=True)
class Hypergraph:
    labels: tuple
    edges: frozenset

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise HyperhopfError(f"duplicate vertex labels in {self.labels!r}")
        full = (1 << n) - 1
        for e in self.edges:
            if not isinstance(e, int) or e & ~full or e.bit_count() < 2:
                raise HyperhopfError(f"invalid edge mask {e!r} for {n} vertices")

    @classmethod
    def _trusted(cls, labels: tuple, edges: frozenset) -> "Hypergraph":
        obj = object.__new__(cls)
        object.__setattr__(obj, "labels", labels)
        object.__setattr__(obj, "edges", edges)
        return obj

    @classmethod
    def from_edges(cls, vertices: Iterable[Hashable], edges: Iterable[Iterable[Hashable]] = ()) -> "Hypergraph":
        """Build from labels.  Edges of size < 2 are rejected; duplicates merge."""
        labels = tuple(vertices)
        index = {x: i for i, x in enumerate(labels)}
        if len(index) != len(labels):
            raise HyperhopfError(f"duplicate vertex labels in {labels!r}")
        masks = set()
        for edge in edges:
            edge = list(edge)
            if len(set(edge)) != len(edge):
                raise HyperhopfError(f"edge {edge!r} repeats a vertex; hypergraph edges are sets")
            if len(edge) < 2:
                raise HyperhopfError(f"edge {edge!r} is trivial; only edges of size >= 2 are listed")
            try:
                masks.add(sum(1 << index[x] for x in edge))
            except KeyError as exc:
                raise HyperhopfError(f"edge {edge!r} uses unknown vertex {exc.args[0]!r}") from None
        return cls(labels, frozenset(masks))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def vertices(self) -> list:
        return list(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def mask(self, subset: Iterable[Hashable]) -> int:
        index = {x: i for i, x in enumerate(self.labels)}
        m = 0
        for x in subset:
            if x not in index:
                raise HyperhopfError(f"{x!r} is not a vertex of the hypergraph")
            m |= 1 << index[x]
        return m

    def labels_of(self, mask: int) -> list:
        return [self.labels[i] for i in bits(mask)]

    def edge_sets(self) -> list[list]:
        """Nontrivial edges as label lists, in a deterministic order."""
        return [self.labels_of(e) for e in sorted(self.edges, key=lambda e: (e.bit_count(), e))]

    @property
    def sort_key(self) -> tuple:
        return (len(self.labels), tuple(sorted(self.edges)))

    def __repr__(self) -> str:
        return f"Hypergraph(vertices={list(self.labels)!r}, edges={self.edge_sets()!r})"


EMPTY = Hypergraph((), frozenset())


def single_edge(n: int) -> Hypergraph:
    """``n`` vertices 0..n-1 with one edge containing all of them (no edge if n < 2)."""
    edges = frozenset([(1 << n) - 1]) if n >= 2 else frozenset()
    return Hypergraph(tuple(range(n)), edges)


def edgeless(n: int) -> Hypergraph:
    return Hypergraph(tuple(range(n)), frozenset())


@dataclass(frozen=True)
class SetPartition:
    blocks: tuple

    @classmethod
    def of(cls, blocks: Iterable[Iterable[Hashable]], ground: Iterable[Hashable] | None = None) -> "SetPartition":
        bl = tuple(frozenset(b) for b in blocks)
        seen: set = set()
        for b in bl:
            if not b:
                raise HyperhopfError("set partition has an empty block")
            if seen & b:
                raise HyperhopfError("set partition blocks overlap")
            seen |= b
        if ground is not None and seen != set(ground):
            raise HyperhopfError("set partition does not cover the ground set exactly")
        return cls(bl)

    @property
    def cl(self) -> int:
        return len(self.blocks)


def partition_masks(G: Hypergraph, p: SetPartition | Sequence[int]) -> tuple[int, ...]:
    """Blocks of ``p`` as masks over ``G``; validates that they partition V(G)."""
    if isinstance(p, SetPartition):
        masks = tuple(G.mask(b) for b in p.blocks)
    else:
        masks = tuple(p)
    acc = 0
    for m in masks:
        if m == 0 or acc & m:
            raise HyperhopfError("not a set partition: empty or overlapping block")
        acc |= m
    if acc != G.full_mask:
        raise HyperhopfError("not a set partition: blocks do not cover the vertex set")
    return masks


def to_set_partition(G: Hypergraph, masks: Sequence[int]) -> SetPartition:
    return SetPartition(tuple(frozenset(G.labels_of(m)) for m in masks))


# ---------------------------------------------------------------------------
# partitions of index sets
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def rgs_partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """Set partitions of {0..n-1} as block-mask tuples, in restricted-growth order.

    Blocks are listed by increasing minimum element.
    """
    config.check_vertices(n, "set partition enumeration")
    out = []
    a = [0] * n

    def rec(i: int, m: int) -> None:
        if i == n:
            blocks = [0] * m
            for v, b in enumerate(a):
                blocks[b] |= 1 << v
            out.append(tuple(blocks))
            return
        for v in range(m + 1):
            a[i] = v
            rec(i + 1, max(m, v + 1))

    rec(0, 0)
    return tuple(out)


def _spread(mask_small: int, positions: Sequence[int]) -> int:
    out = 0
    for b in bits(mask_small):
        out |= 1 << positions[b]
    return out


def partitions_of_mask(ground: int) -> Iterator[tuple[int, ...]]:
    positions = list(bits(ground))
    for blocks in rgs_partitions(len(positions)):
        yield tuple(_spread(b, positions) for b in blocks)


def enumerate_set_partitions(ground: Iterable[Hashable]) -> Iterator[SetPartition]:
    """Every set partition of ``ground`` exactly once, restricted-growth order."""
    labels = list(ground)
    if len(set(labels)) != len(labels):
        raise HyperhopfError("ground set has repeated elements")
    for blocks in rgs_partitions(len(labels)):
        yield SetPartition(tuple(frozenset(labels[i] for i in bits(b)) for b in blocks))


def ordered_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Ordered set partitions of {0..n-1} (all block orders of every partition)."""
    for blocks in rgs_partitions(n):
        yield from permutations(blocks)


# ---------------------------------------------------------------------------
# restrictions, products, quotients
# ---------------------------------------------------------------------------

def _mode(mode) -> Mode:
    return mode if isinstance(mode, Mode) else Mode(mode)


def restrict_mask(G: Hypergraph, I: int, mode) -> Hypergraph:
    mode = _mode(mode)
    idx = list(bits(I))
    rank = {b: i for i, b in enumerate(idx)}
    if mode is Mode.SUBSET:
        kept = [e for e in G.edges if not e & ~I]
    else:
        kept = [e & I for e in G.edges if (e & I).bit_count() >= 2]
    return Hypergraph._trusted(
        tuple(G.labels[i] for i in idx), frozenset(_compress(e, rank) for e in kept)
    )


def restrict(G: Hypergraph, I: Iterable[Hashable], mode) -> Hypergraph:
    """Induced sub-hypergraph on ``I``: edges inside ``I`` (subset) or edges cut by ``I`` (cap)."""
    return restrict_mask(G, G.mask(I), mode)


def staircase_restrict_masks(G: Hypergraph, blocks: Sequence[int]) -> list[Hypergraph]:
    out = []
    covered = 0
    for block in blocks:
        covered |= block
        idx = list(bits(block))
        rank = {b: i for i, b in enumerate(idx)}
        edges = frozenset(
            _compress(e & block, rank)
            for e in G.edges
            if not e & ~covered and (e & block).bit_count() >= 2
        )
        out.append(Hypergraph._trusted(tuple(G.labels[i] for i in idx), edges))
    return out


def staircase_restrict(G: Hypergraph, blocks: Sequence[Iterable[Hashable]]) -> list[Hypergraph]:
    """Restrictions to ordered blocks where block p only sees edges inside blocks 1..p."""
    masks = [G.mask(b) for b in blocks]
    partition_masks(G, masks)
    return staircase_restrict_masks(G, masks)


def disjoint_union(G: Hypergraph, H: Hypergraph) -> Hypergraph:
    """Juxtaposition; clashing labels of ``H`` are primed until unique."""
    taken = set(G.labels)
    labels = list(G.labels)
    for x in H.labels:
        y = x
        while y in taken:
            y = f"{y}'"
        taken.add(y)
        labels.append(y)
    shift = G.n
    edges = G.edges | frozenset(e << shift for e in H.edges)
    return Hypergraph._trusted(tuple(labels), edges)


def _reach(start: int, pieces: Sequence[int]) -> int:
    reached = start
    grown = True
    while grown:
        grown = False
        for p in pieces:
            if p & reached and p & ~reached:
                reached |= p
                grown = True
    return reached


def component_masks(G: Hypergraph) -> list[int]:
    remaining = G.full_mask
    out = []
    edges = list(G.edges)
    while remaining:
        comp = _reach(remaining & -remaining, edges)
        out.append(comp)
        remaining &= ~comp
    return out


def connected_components(G: Hypergraph) -> list[Hypergraph]:
    return [restrict_mask(G, c, Mode.SUBSET) for c in component_masks(G)]


def is_connected(G: Hypergraph) -> bool:
    return len(component_masks(G)) <= 1


def block_connected(G: Hypergraph, C: int, mode) -> bool:
    """Whether the restriction of ``G`` to the nonempty mask ``C`` is connected."""
    if _mode(mode) is Mode.SUBSET:
        pieces = [e for e in G.edges if not e & ~C]
    else:
        pieces = [e & C for e in G.edges if (e & C).bit_count() >= 2]
    return _reach(C & -C, pieces) == C


def quotient_masks(G: Hypergraph, blocks: Sequence[int]) -> Hypergraph:
    edges = set()
    for e in G.edges:
        image = 0
        for i, b in enumerate(blocks):
            if e & b:
                image |= 1 << i
        if image.bit_count() >= 2:
            edges.add(image)
    labels = tuple(tuple(G.labels_of(b)) if b.bit_count() > 1 else G.labels[b.bit_length() - 1] for b in blocks)
    return Hypergraph._trusted(labels, frozenset(edges))


def quotient(G: Hypergraph, p: SetPartition) -> Hypergraph:
    """Contract each block of ``p`` to a vertex; multiple images of edges merge."""
    return quotient_masks(G, partition_masks(G, p))


def partition_restrict_masks(G: Hypergraph, blocks: Sequence[int], mode) -> Hypergraph:
    if _mode(mode) is Mode.SUBSET:
        edges = frozenset(e for e in G.edges if any(not e & ~b for b in blocks))
    else:
        edges = frozenset(
            e & b for e in G.edges for b in blocks if (e & b).bit_count() >= 2
        )
    return Hypergraph._trusted(G.labels, edges)


def partition_restrict(G: Hypergraph, p: SetPartition, mode) -> Hypergraph:
    """Disjoint union of the restrictions of ``G`` to the blocks of ``p``."""
    return partition_restrict_masks(G, partition_masks(G, p), mode)


def admissible_partition_masks(G: Hypergraph, mode) -> tuple[tuple[int, ...], ...]:
    return _admissible(G.n, G.edges, _mode(mode))


@lru_cache(maxsize=None)
def _admissible(n: int, edges: frozenset, mode: Mode) -> tuple[tuple[int, ...], ...]:
    config.check_vertices(n, "admissible partition enumeration")
    G = Hypergraph._trusted(tuple(range(n)), edges)
    ok: dict[int, bool] = {}
    out = []
    for blocks in rgs_partitions(n):
        good = True
        for b in blocks:
            flag = ok.get(b)
            if flag is None:
                flag = ok[b] = block_connected(G, b, mode)
            if not flag:
                good = False
                break
        if good:
            out.append(blocks)
    return tuple(out)


def admissible_partitions(G: Hypergraph, mode) -> list[SetPartition]:
    """Partitions whose blocks all induce connected restrictions."""
    return [to_set_partition(G, b) for b in admissible_partition_masks(G, mode)]


def gamma(G: Hypergraph) -> Hypergraph:
    """The graph joining every pair of vertices that share an edge."""
    pairs = set()
    for e in G.edges:
        for a, b in combinations(list(bits(e)), 2):
            pairs.add((1 << a) | (1 << b))
    return Hypergraph._trusted(G.labels, frozenset(pairs))


def adjacency(G: Hypergraph) -> list[int]:
    """Neighbour mask of every vertex (vertices sharing an edge)."""
    adj = [0] * G.n
    for e in G.edges:
        for v in bits(e):
            adj[v] |= e & ~(1 << v)
    return adj


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------

def _rank(values: Sequence) -> list[int]:
    order = {v: i for i, v in enumerate(sorted(set(values)))}
    return [order[v] for v in values]


@lru_cache(maxsize=None)
def _canonical_connected(n: int, edges: frozenset) -> tuple[int, ...]:
    inc = [frozenset(e for e in edges if e >> v & 1) for v in range(n)]
    twins: dict[frozenset, list[int]] = {}
    for v in range(n):
        twins.setdefault(inc[v], []).append(v)
    color = _rank([(len(twins[inc[v]]), tuple(sorted(e.bit_count() for e in inc[v]))) for v in range(n)])
    while True:
        sig = [
            (color[v], tuple(sorted((e.bit_count(), tuple(sorted(color[u] for u in bits(e)))) for e in inc[v])))
            for v in range(n)
        ]
        new = _rank(sig)
        if len(set(new)) == len(set(color)):
            break
        color = new
    cells: dict[int, list[tuple[int, ...]]] = {}
    for unit in twins.values():
        cells.setdefault(color[unit[0]], []).append(tuple(unit))
    cell_units = [cells[c] for c in sorted(cells)]
    best = None
    for choice in product(*(permutations(units) for units in cell_units)):
        relabel = [0] * n
        nxt = 0
        for arrangement in choice:
            for unit in arrangement:
                for v in unit:
                    relabel[v] = nxt
                    nxt += 1
        key = tuple(sorted(sum(1 << relabel[v] for v in bits(e)) for e in edges))
        if best is None or key < best:
            best = key
    return best


@lru_cache(maxsize=None)
def _canonical_structure(n: int, edges: frozenset) -> frozenset:
    G = Hypergraph._trusted(tuple(range(n)), edges)
    parts = []
    for comp in component_masks(G):
        idx = list(bits(comp))
        rank = {b: i for i, b in enumerate(idx)}
        sub = frozenset(_compress(e, rank) for e in edges if e & comp)
        parts.append((len(idx), _canonical_connected(len(idx), sub)))
    parts.sort()
    out = []
    offset = 0
    for k, es in parts:
        out.extend(e << offset for e in es)
        offset += k
    return frozenset(out)


def canonical_form(G: Hypergraph) -> Hypergraph:
    """Relabel to 0..n-1 so that isomorphic hypergraphs give identical values."""
    config.check_vertices(G.n, "canonical form")
    return Hypergraph._trusted(tuple(range(G.n)), _canonical_structure(G.n, G.edges))


def canonical_key(G: Hypergraph) -> bytes:
    C = canonical_form(G)
    return repr((C.n, tuple(sorted(C.edges)))).encode()


def is_isomorphic(G: Hypergraph, H: Hypergraph) -> bool:
    return G.n == H.n and len(G.edges) == len(H.edges) and canonical_form(G) == canonical_form(H)


# ---------------------------------------------------------------------------
# corpora
# ---------------------------------------------------------------------------

def _possible_edges(n: int) -> list[int]:
    return [m for m in range(1 << n) if m.bit_count() >= 2]


@lru_cache(maxsize=None)
def all_hypergraphs(n: int) -> tuple[Hypergraph, ...]:
    """One canonical representative of every isomorphism class on ``n`` vertices."""
    possible = _possible_edges(n)
    config.check_work(1 << len(possible), f"listing all hypergraphs on {n} vertices")
    seen = set()
    for choice in range(1 << len(possible)):
        edges = frozenset(possible[i] for i in bits(choice))
        seen.add(_canonical_structure(n, edges))
    labels = tuple(range(n))
    return tuple(sorted((Hypergraph._trusted(labels, e) for e in seen), key=lambda h: h.sort_key))


def all_hypergraphs_upto(n: int) -> list[Hypergraph]:
    out = []
    for k in range(n + 1):
        out.extend(all_hypergraphs(k))
    return out


def random_hypergraph(n: int, rng: random.Random, density: float | None = None) -> Hypergraph:
    """Random hypergraph on vertices 0..n-1; each possible edge kept with probability ``density``."""
    possible = _possible_edges(n)
    if density is None:
        density = rng.choice([0.1, 0.2, 0.3, 0.5])
    edges = frozenset(e for e in possible if rng.random() < density)
    return Hypergraph(tuple(range(n)), edges)


__all__ = [
    "Mode",
    "Hypergraph",
    "SetPartition",
    "EMPTY",
    "ResourceCapError",
    "single_edge",
    "edgeless",
    "restrict",
    "staircase_restrict",
    "disjoint_union",
    "connected_components",
    "quotient",
    "partition_restrict",
    "admissible_partitions",
    "gamma",
    "canonical_form",
    "canonical_key",
    "enumerate_set_partitions",
    "all_hypergraphs",
    "random_hypergraph",
]
