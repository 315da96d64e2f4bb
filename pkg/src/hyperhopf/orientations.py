"""Quasi-orders and acyclic orientations of hypergraphs.

An acyclic orientation is a quasi-order that is total with at least two classes
on every nontrivial edge, and in which every x ≤ y is joined by a path of
edge-sharing vertices x = x_0 ≤ x_1 ≤ … ≤ x_k = y.  ``classify_orientation``
can also apply the stricter reading (strictly increasing paths for x < y, tied
vertices sharing an edge) via ``literal=True``; that reading does not satisfy
the evaluation identities at -1 and is kept only for comparison.

``enumerate_quasi_orders`` + ``classify_orientation`` are the reference route.
``acyclic_orientations`` is the fast route: classes are the blocks of a
partition that are connected in Γ(G) and contain no nontrivial edge, and the
strict part is an acyclic orientation of the quotient of Γ(G).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from . import config
from .config import HyperhopfError, ResourceCapError
from .core import Hypergraph, _canonical_structure, adjacency, bits, gamma, rgs_partitions


@dataclass(frozen=True)
class QuasiOrder:
    """Set partition of vertex positions plus a strict partial order on its blocks.

    ``blocks[i]`` is a vertex mask; ``below[i]`` is the mask of block indices
    strictly below block ``i`` (transitively closed).
    """

    blocks: tuple[int, ...]
    below: tuple[int, ...]

    @property
    def cl(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return sum(b.bit_count() for b in self.blocks)

    def block_of(self) -> list[int]:
        out = [0] * self.n
        for i, b in enumerate(self.blocks):
            for v in bits(b):
                out[v] = i
        return out

    def relation(self) -> frozenset[tuple[int, int]]:
        """All pairs (x, y) with x ≤ y, over vertex positions."""
        blk = self.block_of()
        n = len(blk)
        return frozenset(
            (x, y)
            for x in range(n)
            for y in range(n)
            if blk[x] == blk[y] or self.below[blk[y]] >> blk[x] & 1
        )

    @classmethod
    def from_relation(cls, n: int, rel: frozenset[tuple[int, int]]) -> "QuasiOrder":
        """Build from a reflexive transitive relation on positions 0..n-1."""
        blocks: list[int] = []
        seen = 0
        for x in range(n):
            if seen >> x & 1:
                continue
            b = sum(1 << y for y in range(n) if (x, y) in rel and (y, x) in rel)
            blocks.append(b)
            seen |= b
        rep = [next(bits(b)) for b in blocks]
        below = tuple(
            sum(1 << j for j in range(len(blocks)) if j != i and (rep[j], rep[i]) in rel)
            for i in range(len(blocks))
        )
        return cls(tuple(blocks), below)

    def normalized(self) -> "QuasiOrder":
        """Blocks sorted by minimum element; used for comparing enumerations."""
        order = sorted(range(len(self.blocks)), key=lambda i: self.blocks[i] & -self.blocks[i])
        pos = {old: new for new, old in enumerate(order)}
        below = [0] * len(order)
        for old, new in pos.items():
            below[new] = sum(1 << pos[j] for j in bits(self.below[old]))
        return QuasiOrder(tuple(self.blocks[i] for i in order), tuple(below))

    def describe(self, labels: Sequence) -> dict:
        return {
            "classes": [[labels[v] for v in bits(b)] for b in self.blocks],
            "less": [
                [j, i] for i in range(len(self.blocks)) for j in bits(self.below[i])
            ],
        }


@dataclass(frozen=True)
class OrientationClass:
    is_acyclic: bool
    is_total: bool
    is_one_max: bool


@dataclass(frozen=True)
class OrientationSums:
    signed_all: int
    total_count: int
    signed_one_max: int


# ---------------------------------------------------------------------------
# posets and quasi-orders
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def labeled_posets(k: int) -> tuple[tuple[int, ...], ...]:
    """All strict partial orders on {0..k-1}, as ``below`` mask tuples.

    Element m is inserted with a down-closed set D of elements below it and an
    up-closed set U above it, where everything in D is already below everything
    in U.  Each poset arises from exactly one such sequence of choices.
    """
    out: list[tuple[int, ...]] = []

    def rec(m: int, below: list[int]) -> None:
        if m == k:
            out.append(tuple(below))
            return
        for D in range(1 << m):
            if any(below[d] & ~D for d in bits(D)):
                continue
            rest = ((1 << m) - 1) & ~D
            U = rest
            while True:
                ok = all(below[u] & D == D for u in bits(U))
                if ok:
                    # up-closed: anything above an element of U is in U
                    ok = all(not (below[w] & U) or (U >> w & 1) for w in range(m))
                if ok:
                    new = [b | (1 << m) if U >> i & 1 else b for i, b in enumerate(below)]
                    new.append(D)
                    rec(m + 1, new)
                if U == 0:
                    break
                U = (U - 1) & rest

    rec(0, [])
    return tuple(out)


def enumerate_quasi_orders(n: int) -> Iterator[QuasiOrder]:
    """Every quasi-order on positions 0..n-1 exactly once."""
    if n > config.caps.max_orientation_vertices:
        raise ResourceCapError(
            f"quasi-order enumeration on {n} vertices exceeds the cap {config.caps.max_orientation_vertices}"
        )
    for blocks in rgs_partitions(n):
        for below in labeled_posets(len(blocks)):
            yield QuasiOrder(blocks, below)


def quasi_orders_bruteforce(n: int) -> list[QuasiOrder]:
    """Quasi-orders found by filtering all reflexive relations for transitivity (n ≤ 4)."""
    if n > 4:
        raise ResourceCapError("the raw-relation quasi-order oracle is limited to 4 vertices")
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    diag = {(x, x) for x in range(n)}
    out = []
    for choice in range(1 << len(pairs)):
        rel = diag | {pairs[i] for i in bits(choice)}
        if all((x, z) in rel for (x, y) in rel for (yy, z) in rel if y == yy):
            out.append(QuasiOrder.from_relation(n, frozenset(rel)))
    return out


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

def classify_orientation(G: Hypergraph, q: QuasiOrder, literal: bool = False) -> OrientationClass:
    """Check acyclicity, then the total and 1-max refinements."""
    if q.n != G.n or sum(q.blocks) != G.full_mask:
        raise HyperhopfError("quasi-order and hypergraph have different ground sets")
    blk = q.block_of()
    adj = adjacency(G)
    n = G.n

    def lt(x: int, y: int) -> bool:
        return bool(q.below[blk[y]] >> blk[x] & 1)

    def le(x: int, y: int) -> bool:
        return blk[x] == blk[y] or lt(x, y)

    no = OrientationClass(False, False, False)
    met_by_edge = []
    for e in G.edges:
        met = {blk[v] for v in bits(e)}
        if len(met) < 2:
            return no
        for a in met:
            for b in met:
                if a != b and not (q.below[b] >> a & 1 or q.below[a] >> b & 1):
                    return no
        met_by_edge.append((e, met))
    step = lt if literal else le
    for x in range(n):
        reach = 1 << x
        frontier = [x]
        while frontier:
            u = frontier.pop()
            for w in bits(adj[u] & ~reach):
                if step(u, w):
                    reach |= 1 << w
                    frontier.append(w)
        for y in range(n):
            if step(x, y) and not reach >> y & 1:
                return no
    if literal:
        for b in q.blocks:
            vs = list(bits(b))
            for i, x in enumerate(vs):
                for y in vs[i + 1:]:
                    if not adj[x] >> y & 1:
                        return no
    total = all(len(met) == e.bit_count() for e, met in met_by_edge)
    one_max = True
    for e, met in met_by_edge:
        top = [a for a in met if not any(q.below[b] >> a & 1 for b in met)]
        # totality on e leaves exactly one maximal block
        if (q.blocks[top[0]] & e).bit_count() != 1:
            one_max = False
            break
    return OrientationClass(True, total, one_max)


# ---------------------------------------------------------------------------
# fast enumeration
# ---------------------------------------------------------------------------

def _acyclic_graph_orientations(k: int, arcs: Sequence[tuple[int, int]]) -> Iterator[tuple[int, ...]]:
    """Transitive closures (``below`` masks) of the acyclic orientations of a simple graph."""
    below0 = [0] * k

    def rec(i: int, below: list[int]) -> Iterator[tuple[int, ...]]:
        if i == len(arcs):
            yield tuple(below)
            return
        a, b = arcs[i]
        for lo, hi in ((a, b), (b, a)):
            if below[lo] >> hi & 1:
                continue
            new = list(below)
            down = below[lo] | (1 << lo)
            for w in range(k):
                if w == hi or below[w] >> hi & 1:
                    new[w] |= down
            yield from rec(i + 1, new)

    yield from rec(0, below0)


def acyclic_orientations(G: Hypergraph) -> Iterator[QuasiOrder]:
    """Every acyclic orientation of G, via Γ-connected edge-free partitions."""
    if G.n > config.caps.max_orientation_vertices:
        raise ResourceCapError(
            f"orientation enumeration on {G.n} vertices exceeds the cap {config.caps.max_orientation_vertices}"
        )
    adj = adjacency(G)
    edges = list(G.edges)
    for blocks in rgs_partitions(G.n):
        ok = True
        for b in blocks:
            if any(not e & ~b for e in edges):
                ok = False
                break
            if _reach_within(b, adj) != b:
                ok = False
                break
        if not ok:
            continue
        k = len(blocks)
        arcs = sorted(
            {
                (i, j)
                for i, j in product(range(k), repeat=2)
                if i < j and any(adj[v] & blocks[j] for v in bits(blocks[i]))
            }
        )
        for below in _acyclic_graph_orientations(k, arcs):
            yield QuasiOrder(blocks, below)


def _reach_within(b: int, adj: list[int]) -> int:
    reach = b & -b
    frontier = [reach.bit_length() - 1]
    while frontier:
        u = frontier.pop()
        for w in bits(adj[u] & b & ~reach):
            reach |= 1 << w
            frontier.append(w)
    return reach


@lru_cache(maxsize=None)
def _sums(n: int, edges: frozenset) -> OrientationSums:
    G = Hypergraph._trusted(tuple(range(n)), edges)
    signed_all = total = signed_one_max = 0
    for q in acyclic_orientations(G):
        cls = classify_orientation(G, q)
        sign = -1 if q.cl % 2 else 1
        signed_all += sign
        if cls.is_total:
            total += 1
        if cls.is_one_max:
            signed_one_max += sign
    return OrientationSums(signed_all, total, signed_one_max)


def orientation_sums(G: Hypergraph) -> OrientationSums:
    """Signed count of all acyclic orientations, number of total ones, signed count of 1-max ones."""
    return _sums(G.n, _canonical_structure(G.n, G.edges))


def orientation_sums_by_definition(G: Hypergraph, literal: bool = False) -> OrientationSums:
    """Same sums from the exhaustive quasi-order stream (reference route)."""
    signed_all = total = signed_one_max = 0
    for q in enumerate_quasi_orders(G.n):
        cls = classify_orientation(G, q, literal)
        if not cls.is_acyclic:
            continue
        sign = -1 if q.cl % 2 else 1
        signed_all += sign
        total += cls.is_total
        if cls.is_one_max:
            signed_one_max += sign
    return OrientationSums(signed_all, total, signed_one_max)


def stanley_count(G: Hypergraph) -> int:
    """Acyclic orientations of the graph Γ(G), by trying all 2^|E| orientations."""
    pairs = [tuple(bits(e)) for e in sorted(gamma(G).edges)]
    config.check_work(1 << len(pairs), "orientations of the 2-section graph")
    count = 0
    for choice in range(1 << len(pairs)):
        out = [0] * G.n
        for i, (a, b) in enumerate(pairs):
            if choice >> i & 1:
                out[b] |= 1 << a
            else:
                out[a] |= 1 << b
        if _is_acyclic(out):
            count += 1
    return count


def _is_acyclic(out: list[int]) -> bool:
    indeg = [0] * len(out)
    for m in out:
        for v in bits(m):
            indeg[v] += 1
    stack = [v for v, d in enumerate(indeg) if d == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in bits(out[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == len(out)
