"""Multi-complexes: vertices, a multiset of multiset-edges with identities, and a partial order.

An edge instance is stored as a multiplicity vector over vertex positions,
with total multiplicity at least 2.  The empty edge and the singletons are
implicit (multiplicity 1, forced order relations).  ``order`` holds the strict,
transitively closed relation between instance indices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Hashable, Iterable, Mapping, Sequence

from . import config
from .algebra import LinearCombination, basis_product, canonical, linear_extension
from .config import HyperhopfError, ResourceCapError
from .core import Hypergraph, Mode, admissible_partition_masks, bits, rgs_partitions
from .invariants import chromatic, signed_count, spanning_counts
from .orientations import orientation_sums

Vector = tuple[int, ...]


class MultiComplexAxiomError(HyperhopfError):
    def __init__(self, axiom: str, detail: str):
        super().__init__(f"multi-complex axiom violated ({axiom}): {detail}")
        self.axiom = axiom


def _contained(a: Vector, b: Vector) -> bool:
    """Multiset inclusion."""
    return all(x <= y for x, y in zip(a, b))


def _support(v: Vector) -> int:
    return sum(1 << i for i, m in enumerate(v) if m)


def _closure(k: int, pairs: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    above = [set() for _ in range(k)]
    for a, b in pairs:
        above[a].add(b)
    changed = True
    while changed:
        changed = False
        for a in range(k):
            extra = set()
            for b in above[a]:
                extra |= above[b] - above[a]
            if extra:
                above[a] |= extra
                changed = True
    return frozenset((a, b) for a in range(k) for b in above[a])


@dataclass(frozen=True)
class MultiComplex:
    labels: tuple
    instances: tuple  # ((id, vector), ...)
    order: frozenset  # strict pairs (low index, high index)

    def __post_init__(self) -> None:
        validate(self)

    @classmethod
    def _trusted(cls, labels: tuple, instances: tuple, order: frozenset) -> "MultiComplex":
        obj = object.__new__(cls)
        object.__setattr__(obj, "labels", labels)
        object.__setattr__(obj, "instances", instances)
        object.__setattr__(obj, "order", order)
        return obj

    @classmethod
    def build(
        cls,
        vertices: Iterable[Hashable],
        edges: Iterable[tuple[str, Mapping[Hashable, int]]] = (),
        order: Iterable[tuple[str, str]] = (),
    ) -> "MultiComplex":
        """From labels, ``(id, {vertex: multiplicity})`` instances and covering pairs of ids.

        A low end written ``"{x}"`` names the singleton edge of vertex ``x`` and
        ``"{}"`` the empty edge; such pairs are only checked, never stored.
        """
        labels = tuple(vertices)
        index = {x: i for i, x in enumerate(labels)}
        if len(index) != len(labels):
            raise HyperhopfError(f"duplicate vertex labels in {labels!r}")
        insts = []
        ids: dict[str, int] = {}
        for eid, mult in edges:
            eid = str(eid)
            if eid in ids:
                raise HyperhopfError(f"duplicate edge id {eid!r}")
            vec = [0] * len(labels)
            for x, m in mult.items():
                if x not in index:
                    raise MultiComplexAxiomError("support in V", f"edge {eid!r} uses unknown vertex {x!r}")
                if not isinstance(m, int) or m <= 0:
                    raise HyperhopfError(f"edge {eid!r}: multiplicity of {x!r} must be a positive integer")
                vec[index[x]] = m
            if sum(vec) < 2:
                raise MultiComplexAxiomError(
                    "trivial edges",
                    f"edge {eid!r} is empty or a singleton; those are implicit with multiplicity 1",
                )
            ids[eid] = len(insts)
            insts.append((eid, tuple(vec)))
        pairs = []
        for low, high in order:
            low, high = str(low), str(high)
            if high not in ids:
                raise HyperhopfError(f"order pair mentions unknown edge id {high!r}")
            if low.startswith("{") and low.endswith("}") and low not in ids:
                inner = low[1:-1].strip()
                if inner:
                    x = _label_lookup(inner, index)
                    if not insts[ids[high]][1][index[x]]:
                        raise MultiComplexAxiomError(
                            "singleton order",
                            f"{{{x}}} ≤ {high!r} but {x!r} is not in the support of {high!r}",
                        )
                continue
            if low not in ids:
                raise HyperhopfError(f"order pair mentions unknown edge id {low!r}")
            pairs.append((ids[low], ids[high]))
        k = len(insts)
        for a, b in pairs:
            if a == b:
                raise MultiComplexAxiomError("antisymmetry", f"edge {insts[a][0]!r} is listed below itself")
        closed = _closure(k, pairs)
        return cls(labels, tuple(insts), closed)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def k(self) -> int:
        return len(self.instances)

    def vectors(self) -> list[Vector]:
        return [v for _, v in self.instances]

    def supports(self) -> list[int]:
        return [_support(v) for _, v in self.instances]

    @property
    def sort_key(self) -> tuple:
        return (self.n, self.k, tuple(self.vectors()), tuple(sorted(self.order)))

    def short(self) -> str:
        if self.n == 0:
            return "1"
        if not self.instances:
            return f"MC{self.n}"
        body = ",".join("".join(str(i) * m for i, m in enumerate(v)) for v in self.vectors())
        rel = ",".join(f"{a}<{b}" for a, b in sorted(self.order))
        return f"MC{self.n}[{body}]" + (f"{{{rel}}}" if rel else "")

    def describe(self) -> dict:
        """JSON-ready form: instances with multiplicities and the covering pairs of the order."""
        cover = [
            (a, b) for a, b in sorted(self.order)
            if not any((a, c) in self.order and (c, b) in self.order for c in range(self.k))
        ]
        return {
            "vertices": [label_text(x) for x in self.labels],
            "edges": [
                {"id": eid, "multiset": {label_text(self.labels[i]): m for i, m in enumerate(v) if m}}
                for eid, v in self.instances
            ],
            "order": [[self.instances[a][0], self.instances[b][0]] for a, b in cover],
        }

    def __repr__(self) -> str:
        return f"MultiComplex({self.describe()!r})"


def label_text(x) -> str:
    """Labels of contracted blocks are tuples; render them as "{a,b}"."""
    if isinstance(x, tuple):
        return "{" + ",".join(label_text(y) for y in x) + "}"
    return str(x)


def _label_lookup(text: str, index: dict) -> Hashable:
    if text in index:
        return text
    for x in index:
        if str(x) == text:
            return x
    raise HyperhopfError(f"order pair mentions unknown vertex {text!r}")


def validate(C: MultiComplex) -> None:
    """Raise ``MultiComplexAxiomError`` naming the first violated axiom."""
    n = len(C.labels)
    if len(set(C.labels)) != n:
        raise HyperhopfError(f"duplicate vertex labels in {C.labels!r}")
    k = len(C.instances)
    for eid, v in C.instances:
        if len(v) != n or any((not isinstance(m, int)) or m < 0 for m in v):
            raise MultiComplexAxiomError("support in V", f"edge {eid!r} has a malformed multiplicity vector")
        if sum(v) < 2:
            raise MultiComplexAxiomError("trivial edges", f"edge {eid!r} is empty or a singleton")
    for a, b in C.order:
        if not (0 <= a < k and 0 <= b < k):
            raise HyperhopfError("order refers to a missing instance")
        if a == b:
            raise MultiComplexAxiomError("antisymmetry", f"edge {C.instances[a][0]!r} is below itself")
        if (b, a) in C.order:
            raise MultiComplexAxiomError(
                "antisymmetry", f"{C.instances[a][0]!r} and {C.instances[b][0]!r} are below each other"
            )
        if not _contained(C.instances[a][1], C.instances[b][1]):
            raise MultiComplexAxiomError(
                "inclusion",
                f"{C.instances[a][0]!r} ≤ {C.instances[b][0]!r} but it is not a sub-multiset",
            )
    for a, b in C.order:
        for c, d in C.order:
            if b == c and (a, d) not in C.order:
                raise MultiComplexAxiomError("transitivity", "order relation is not transitively closed")


EMPTY_MC = MultiComplex._trusted((), (), frozenset())


def _ids_disjoint(taken: set, eid: str) -> str:
    while eid in taken:
        eid = f"{eid}'"
    taken.add(eid)
    return eid


def mc_product(C: MultiComplex, D: MultiComplex) -> MultiComplex:
    """Disjoint union; clashing vertex labels and edge ids of ``D`` are primed."""
    taken = set(C.labels)
    labels = list(C.labels)
    for x in D.labels:
        y = x
        while y in taken:
            y = f"{y}'"
        taken.add(y)
        labels.append(y)
    ids = {eid for eid, _ in C.instances}
    insts = [(eid, v + (0,) * D.n) for eid, v in C.instances]
    for eid, v in D.instances:
        insts.append((_ids_disjoint(ids, eid), (0,) * C.n + v))
    shift = C.k
    order = C.order | frozenset((a + shift, b + shift) for a, b in D.order)
    return MultiComplex._trusted(tuple(labels), tuple(insts), order)


def _reindex_order(order: frozenset, keep: Sequence[int]) -> frozenset:
    pos = {old: new for new, old in enumerate(keep)}
    return frozenset((pos[a], pos[b]) for a, b in order if a in pos and b in pos)


def mc_restrict_mask(C: MultiComplex, X: int) -> MultiComplex:
    idx = list(bits(X))
    keep = [i for i, s in enumerate(C.supports()) if not s & ~X]
    insts = tuple((C.instances[i][0], tuple(C.instances[i][1][v] for v in idx)) for i in keep)
    return MultiComplex._trusted(tuple(C.labels[v] for v in idx), insts, _reindex_order(C.order, keep))


def _mask(C: MultiComplex, subset: Iterable[Hashable]) -> int:
    index = {x: i for i, x in enumerate(C.labels)}
    m = 0
    for x in subset:
        if x not in index:
            raise HyperhopfError(f"{x!r} is not a vertex of the multi-complex")
        m |= 1 << index[x]
    return m


def mc_restrict(C: MultiComplex, X: Iterable[Hashable]) -> MultiComplex:
    """Keep the instances whose support lies in ``X``."""
    return mc_restrict_mask(C, _mask(C, X))


def mc_coproduct(C: MultiComplex) -> LinearCombination:
    _check_caps(C)
    full = (1 << C.n) - 1
    return LinearCombination.collect(
        (((mc_restrict_mask(C, I), mc_restrict_mask(C, full & ~I)), 1) for I in range(full + 1)), 2
    )


def kappa(C: MultiComplex) -> Hypergraph:
    """Forget multiplicities and the order: distinct supports of size ≥ 2."""
    edges = frozenset(s for s in C.supports() if s.bit_count() >= 2)
    return Hypergraph._trusted(C.labels, edges)


def from_hypergraph(G: Hypergraph) -> MultiComplex:
    """Edges become multiplicity-one instances ordered by inclusion."""
    edges = sorted(G.edges, key=lambda e: (e.bit_count(), e))
    insts = tuple((f"e{i}", tuple(1 if e >> v & 1 else 0 for v in range(G.n))) for i, e in enumerate(edges))
    order = frozenset(
        (a, b) for a, ea in enumerate(edges) for b, eb in enumerate(edges) if a != b and not ea & ~eb
    )
    return MultiComplex._trusted(G.labels, insts, order)


def _partition_masks(C: MultiComplex, blocks: Sequence) -> tuple[int, ...]:
    masks = tuple(b if isinstance(b, int) else _mask(C, b) for b in blocks)
    acc = 0
    for m in masks:
        if m == 0 or acc & m:
            raise HyperhopfError("not a set partition: empty or overlapping block")
        acc |= m
    if acc != (1 << C.n) - 1:
        raise HyperhopfError("not a set partition: blocks do not cover the vertex set")
    return masks


def mc_quotient(C: MultiComplex, blocks: Sequence) -> MultiComplex:
    """Contract blocks; every instance survives with summed multiplicities, order transferred."""
    masks = _partition_masks(C, blocks)
    insts = tuple(
        (eid, tuple(sum(v[i] for i in bits(b)) for b in masks)) for eid, v in C.instances
    )
    labels = tuple(
        tuple(C.labels[i] for i in bits(b)) if b.bit_count() > 1 else C.labels[b.bit_length() - 1]
        for b in masks
    )
    out = MultiComplex._trusted(labels, insts, C.order)
    validate(out)
    return out


def mc_admissible_partitions(C: MultiComplex) -> tuple[tuple[int, ...], ...]:
    """Partitions whose blocks induce connected restrictions (same as for κ(C) with ⊂)."""
    return admissible_partition_masks(kappa(C), Mode.SUBSET)


def mc_partition_restrict(C: MultiComplex, blocks: Sequence) -> MultiComplex:
    masks = _partition_masks(C, blocks)
    keep = [i for i, s in enumerate(C.supports()) if any(not s & ~b for b in masks)]
    insts = tuple(C.instances[i] for i in keep)
    return MultiComplex._trusted(C.labels, insts, _reindex_order(C.order, keep))


def mc_delta_contract(C: MultiComplex) -> LinearCombination:
    _check_caps(C)
    return LinearCombination.collect(
        (
            ((mc_quotient(C, blocks), mc_partition_restrict(C, blocks)), 1)
            for blocks in mc_admissible_partitions(C)
        ),
        2,
    )


def mc_counit_eps(C: MultiComplex) -> int:
    return 1 if C.n == 0 else 0


def mc_counit_eps_delta(C: MultiComplex) -> int:
    """1 when no instance has a support of two or more vertices."""
    return 1 if all(s.bit_count() <= 1 for s in C.supports()) else 0


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------

def _check_caps(C: MultiComplex) -> None:
    if C.n > config.caps.max_mc_vertices:
        raise ResourceCapError(f"multi-complex on {C.n} vertices exceeds the cap {config.caps.max_mc_vertices}")
    if C.k > config.caps.max_mc_instances:
        raise ResourceCapError(
            f"multi-complex with {C.k} edge instances exceeds the cap {config.caps.max_mc_instances}"
        )


@lru_cache(maxsize=None)
def _canonical_mc(n: int, vectors: tuple[Vector, ...], order: frozenset) -> tuple[tuple[Vector, ...], frozenset]:
    k = len(vectors)
    below = [sorted(a for a, b in order if b == i) for i in range(k)]
    above = [sorted(b for a, b in order if a == i) for i in range(k)]
    vsig = [tuple(sorted((v[x], sum(v), len(below[i]), len(above[i])) for i, v in enumerate(vectors))) for x in range(n)]
    classes: dict = {}
    for x in range(n):
        classes.setdefault(vsig[x], []).append(x)
    groups = [classes[s] for s in sorted(classes)]
    best = None
    for choice in product(*(permutations(g) for g in groups)):
        relabel = [0] * n
        nxt = 0
        for arrangement in choice:
            for x in arrangement:
                relabel[x] = nxt
                nxt += 1
        w = []
        for v in vectors:
            nv = [0] * n
            for x, m in enumerate(v):
                nv[relabel[x]] = m
            w.append(tuple(nv))
        sig = [
            (w[i], tuple(sorted(w[a] for a in below[i])), tuple(sorted(w[b] for b in above[i])))
            for i in range(k)
        ]
        ties: dict = {}
        for i in range(k):
            ties.setdefault(sig[i], []).append(i)
        tie_groups = [ties[s] for s in sorted(ties)]
        for arrangement in product(*(permutations(g) for g in tie_groups)):
            seq = [i for group in arrangement for i in group]
            pos = {old: new for new, old in enumerate(seq)}
            key = (tuple(w[i] for i in seq), tuple(sorted((pos[a], pos[b]) for a, b in order)))
            if best is None or key < best:
                best = key
    if best is None:
        return (), frozenset()
    return best[0], frozenset(best[1])


def mc_canonical_form(C: MultiComplex) -> MultiComplex:
    """Relabel vertices to 0..n-1 and instances to e0..; isomorphic inputs give equal values."""
    _check_caps(C)
    vectors, order = _canonical_mc(C.n, tuple(C.vectors()), C.order)
    insts = tuple((f"e{i}", v) for i, v in enumerate(vectors))
    return MultiComplex._trusted(tuple(range(C.n)), insts, order)


@canonical.register
def _(x: MultiComplex) -> MultiComplex:
    return mc_canonical_form(x)


@basis_product.register
def _(a: MultiComplex, b: MultiComplex) -> MultiComplex:
    return mc_canonical_form(mc_product(a, b))


# ---------------------------------------------------------------------------
# invariants, antipode, eulerian idempotent
# ---------------------------------------------------------------------------

def mc_chromatic(C: MultiComplex):
    return chromatic(kappa(C), "subset")


def mc_takeuchi_antipode(C: MultiComplex) -> LinearCombination:
    """Σ over set partitions of (-1)^k k! C|∼ (the ordered-partition sum, collapsed)."""
    _check_caps(C)
    if C.n == 0:
        return LinearCombination.of(EMPTY_MC)
    pairs = []
    for blocks in rgs_partitions(C.n):
        k = len(blocks)
        pairs.append(((mc_partition_restrict(C, blocks),), (-1) ** k * factorial(k)))
    return LinearCombination.collect(pairs, 1)


def mc_antipode(C: MultiComplex) -> LinearCombination:
    """Σ over ∼ in E_c[C] of the signed orientation count of κ(C/∼), times C|∼."""
    _check_caps(C)
    if C.n == 0:
        return LinearCombination.of(EMPTY_MC)
    pairs = []
    for blocks in mc_admissible_partitions(C):
        c = orientation_sums(kappa(mc_quotient(C, blocks))).signed_all
        if c:
            pairs.append(((mc_partition_restrict(C, blocks),), c))
    return LinearCombination.collect(pairs, 1)


def mc_eulerian(C: MultiComplex) -> LinearCombination:
    _check_caps(C)
    pairs = []
    for blocks in mc_admissible_partitions(C):
        c = signed_count(spanning_counts(kappa(mc_quotient(C, blocks))), 1)
        if c:
            pairs.append(((mc_partition_restrict(C, blocks),), c))
    return LinearCombination.collect(pairs, 1)


def mc_eulerian_of(x: LinearCombination) -> LinearCombination:
    return linear_extension(mc_eulerian, x)


def mc_reduced_coproduct_of(x: LinearCombination) -> LinearCombination:
    out = LinearCombination.zero(2)
    for (f,), c in x.terms.items():
        term = mc_coproduct(f) - LinearCombination.of(f, EMPTY_MC) - LinearCombination.of(EMPTY_MC, f)
        out = out + term.scale(c)
    return out


def kappa_legwise(x: LinearCombination) -> LinearCombination:
    return x.map_factors(kappa)


# ---------------------------------------------------------------------------
# random generation and the worked example
# ---------------------------------------------------------------------------

def random_multicomplex(n: int, max_instances: int, rng: random.Random, max_mult: int = 2) -> MultiComplex:
    """Random instances, then a random set of inclusion-compatible relations, closed and checked."""
    while True:
        k = rng.randint(1, max_instances) if n else 0
        insts = []
        for i in range(k):
            size = rng.randint(1, n)
            support = rng.sample(range(n), size)
            vec = [0] * n
            for x in support:
                vec[x] = rng.randint(1, max_mult)
            if sum(vec) < 2:
                vec[support[0]] = 2
            insts.append((f"e{i}", tuple(vec)))
        candidates = [
            (a, b) for a in range(k) for b in range(k)
            if a != b and _contained(insts[a][1], insts[b][1])
        ]
        chosen = [p for p in candidates if rng.random() < 0.5]
        order = _closure(k, chosen)
        if any((b, a) in order for a, b in order) or any(a == b for a, b in order):
            continue
        return MultiComplex(tuple(range(n)), tuple(insts), order)


def example_complex() -> MultiComplex:
    """The worked example on {a, b, c, d} with eight stored instances."""
    return MultiComplex.build(
        "abcd",
        [
            ("ab", {"a": 1, "b": 1}),
            ("ac1", {"a": 1, "c": 1}),
            ("ac2", {"a": 1, "c": 1}),
            ("bd", {"b": 1, "d": 1}),
            ("cd", {"c": 1, "d": 1}),
            ("abc", {"a": 1, "b": 1, "c": 1}),
            ("aac", {"a": 2, "c": 1}),
            ("bbd", {"b": 2, "d": 1}),
        ],
        [("ab", "abc"), ("ac1", "abc"), ("ac2", "aac"), ("bd", "bbd")],
    )
