"""Formal sums of tensor words over canonical basis elements, and characters.

A basis element is any canonical value (a canonical hypergraph, or a canonical
multi-complex).  ``canonical`` and ``basis_product`` are single-dispatch hooks
so that other modules can plug their own basis types in.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, singledispatch
from typing import Callable, Iterable, Sequence, Union

from .config import HyperhopfError
from .polynomial import format_terms
from .core import (
    Hypergraph,
    Mode,
    _canonical_structure,
    admissible_partition_masks,
    canonical_form,
    component_masks,
    partition_restrict_masks,
    quotient_masks,
    restrict_mask,
)

Number = Union[int, Fraction]
Word = tuple


@singledispatch
def canonical(x):
    raise TypeError(f"no canonical form registered for {type(x).__name__}")


@canonical.register
def _(x: Hypergraph) -> Hypergraph:
    return canonical_form(x)


@singledispatch
def basis_product(a, b):
    """Product of two canonical basis elements, canonicalized."""
    raise TypeError(f"no product registered for {type(a).__name__}")


@basis_product.register
def _(a: Hypergraph, b: Hypergraph) -> Hypergraph:
    return _hypergraph_product(a, b)


@lru_cache(maxsize=None)
def _hypergraph_product(a: Hypergraph, b: Hypergraph) -> Hypergraph:
    n = a.n + b.n
    edges = a.edges | frozenset(e << a.n for e in b.edges)
    return Hypergraph._trusted(tuple(range(n)), _canonical_structure(n, edges))


class LinearCombination:
    """Finite sum of tensor words with rational coefficients.

    All words share the tensor degree ``degree``; zero coefficients are never
    stored.  Treat instances as immutable.
    """

    __slots__ = ("terms", "degree")

    def __init__(self, terms: dict | None = None, degree: int = 1):
        if degree < 1:
            raise HyperhopfError("tensor degree must be at least 1")
        self.degree = degree
        self.terms: dict[Word, Fraction] = {}
        for word, c in (terms or {}).items():
            if len(word) != degree:
                raise HyperhopfError(f"word of length {len(word)} in a degree-{degree} combination")
            if c:
                self.terms[word] = Fraction(c)

    @classmethod
    def zero(cls, degree: int = 1) -> "LinearCombination":
        return cls({}, degree)

    @classmethod
    def of(cls, *factors, coeff: Number = 1) -> "LinearCombination":
        """The single word ``coeff * f1 ⊗ f2 ⊗ ...`` with factors canonicalized."""
        return cls({tuple(canonical(f) for f in factors): coeff}, len(factors))

    @classmethod
    def collect(cls, pairs: Iterable[tuple[Sequence, Number]], degree: int) -> "LinearCombination":
        """Sum ``(word, coeff)`` pairs, canonicalizing every factor."""
        acc: dict[Word, Fraction] = {}
        for word, c in pairs:
            key = tuple(canonical(f) for f in word)
            acc[key] = acc.get(key, 0) + c
        return cls._clean(acc, degree)

    @classmethod
    def _clean(cls, acc: dict, degree: int) -> "LinearCombination":
        out = cls.__new__(cls)
        out.degree = degree
        out.terms = {w: Fraction(c) for w, c in acc.items() if c}
        return out

    # -- inspection ---------------------------------------------------------

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.items())

    def items(self) -> list[tuple[Word, Fraction]]:
        """Terms sorted deterministically by their factors."""
        return sorted(self.terms.items(), key=lambda t: tuple(f.sort_key for f in t[0]))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, *factors) -> Fraction:
        return self.terms.get(tuple(canonical(f) for f in factors), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        if not self.terms:
            return f"LinearCombination(0, degree={self.degree})"
        return format_terms([(c, "⊗".join(_short(f) for f in w)) for w, c in self.items()])

    # -- vector space -------------------------------------------------------

    def _check_degree(self, other: "LinearCombination") -> None:
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise HyperhopfError(f"tensor degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        if not isinstance(other, LinearCombination):
            return NotImplemented
        self._check_degree(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, 0) + c
        degree = self.degree if not self.is_zero() else other.degree
        return LinearCombination._clean(acc, degree)

    def __neg__(self) -> "LinearCombination":
        return LinearCombination._clean({w: -c for w, c in self.terms.items()}, self.degree)

    def __sub__(self, other: "LinearCombination") -> "LinearCombination":
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Number) -> "LinearCombination":
        return LinearCombination._clean({w: v * c for w, v in self.terms.items()}, self.degree)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, LinearCombination):
            return self.multiply(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    # -- algebra ------------------------------------------------------------

    def multiply(self, other: "LinearCombination") -> "LinearCombination":
        """Componentwise product (disjoint union in every tensor leg)."""
        self._check_degree(other)
        acc: dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = tuple(basis_product(a, b) for a, b in zip(w1, w2))
                acc[w] = acc.get(w, 0) + c1 * c2
        return LinearCombination._clean(acc, self.degree)

    def tensor(self, other: "LinearCombination") -> "LinearCombination":
        acc = {w1 + w2: c1 * c2 for w1, c1 in self.terms.items() for w2, c2 in other.terms.items()}
        return LinearCombination._clean(acc, self.degree + other.degree)

    def apply_leg(self, leg: int, fn: Callable[[object], "LinearCombination"]) -> "LinearCombination":
        """Apply a linear map, given on basis elements, to one tensor leg."""
        acc: dict[Word, Fraction] = {}
        new_degree = None
        for w, c in self.terms.items():
            image = fn(w[leg])
            new_degree = self.degree - 1 + image.degree
            for iw, ic in image.terms.items():
                key = w[:leg] + iw + w[leg + 1:]
                acc[key] = acc.get(key, 0) + c * ic
        if new_degree is None:
            return LinearCombination.zero(self.degree)
        return LinearCombination._clean(acc, new_degree)

    def contract_leg(self, leg: int, fn: Callable[[object], Number]) -> "LinearCombination":
        """Apply a linear functional to one leg (tensor degree drops by one)."""
        if self.degree < 2:
            raise HyperhopfError("use evaluate() to contract the last leg")
        acc: dict[Word, Fraction] = {}
        for w, c in self.terms.items():
            v = fn(w[leg])
            if v:
                key = w[:leg] + w[leg + 1:]
                acc[key] = acc.get(key, 0) + c * v
        return LinearCombination._clean(acc, self.degree - 1)

    def evaluate(self, fn: Callable[[object], Number]) -> Fraction:
        """Apply a functional to every leg and multiply: sum c * prod fn(f_i)."""
        total = Fraction(0)
        for w, c in self.terms.items():
            v = Fraction(c)
            for f in w:
                v *= fn(f)
                if not v:
                    break
            total += v
        return total

    def map_factors(self, fn: Callable[[object], object]) -> "LinearCombination":
        """Apply a basis-to-basis map legwise, re-canonicalizing."""
        return LinearCombination.collect(
            ((tuple(fn(f) for f in w), c) for w, c in self.terms.items()), self.degree
        )

    def permute_legs(self, perm: Sequence[int]) -> "LinearCombination":
        """New leg k is old leg ``perm[k]``."""
        acc = {tuple(w[p] for p in perm): c for w, c in self.terms.items()}
        return LinearCombination._clean(acc, len(perm))

    def swap(self) -> "LinearCombination":
        if self.degree != 2:
            raise HyperhopfError("swap needs tensor degree 2")
        return self.permute_legs((1, 0))

    def regroup(self, groups: Sequence[Sequence[int]]) -> "LinearCombination":
        """New leg k is the product of the old legs in ``groups[k]``.

        ``regroup([(0,), (2,), (1, 3)])`` sends a1⊗a2⊗a3⊗a4 to a1⊗a3⊗(a2·a4).
        """
        acc: dict[Word, Fraction] = {}
        for w, c in self.terms.items():
            new = []
            for g in groups:
                f = w[g[0]]
                for i in g[1:]:
                    f = basis_product(f, w[i])
                new.append(f)
            key = tuple(new)
            acc[key] = acc.get(key, 0) + c
        return LinearCombination._clean(acc, len(groups))


def _short(f) -> str:
    short = getattr(f, "short", None)
    if short is not None:
        return short()
    if isinstance(f, Hypergraph):
        if f.n == 0:
            return "1"
        return f"H{f.n}{sorted(f.edges)}" if f.edges else f"H{f.n}"
    return repr(f)


def linear_extension(fn: Callable[[Hypergraph], "LinearCombination"], x: "LinearCombination") -> "LinearCombination":
    """Extend a map given on basis elements linearly to degree-1 combinations."""
    if x.degree != 1:
        raise HyperhopfError("linear extension expects a degree-1 combination")
    out = None
    for (f,), c in x.terms.items():
        term = fn(f).scale(c)
        out = term if out is None else out + term
    return out if out is not None else LinearCombination.zero(1)


# ---------------------------------------------------------------------------
# characters of the contraction-extraction bialgebra
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def canonical_components(G: Hypergraph) -> tuple[Hypergraph, ...]:
    return tuple(canonical_form(restrict_mask(G, c, Mode.SUBSET)) for c in component_masks(G))


def grading_degree(G: Hypergraph) -> int:
    """|V| - cc: the grading of the contraction-extraction bialgebra."""
    return G.n - len(component_masks(G))


class Character:
    """Multiplicative functional: a rule on connected hypergraphs, extended to products.

    Values are memoized per canonical connected hypergraph.  Concurrent callers
    may race on the memo, which only costs a recomputation of the same value.
    """

    def __init__(self, rule: Callable[[Hypergraph], Number], name: str = "character"):
        self._rule = rule
        self._memo: dict[Hypergraph, Fraction] = {}
        self.name = name

    def on_connected(self, C: Hypergraph) -> Fraction:
        v = self._memo.get(C)
        if v is None:
            v = self._memo[C] = Fraction(self._rule(C))
        return v

    def __call__(self, x) -> Fraction:
        if isinstance(x, LinearCombination):
            if x.degree != 1:
                raise HyperhopfError("characters act on degree-1 combinations")
            return x.evaluate(self)
        v = Fraction(1)
        for comp in canonical_components(canonical_form(x)):
            v *= self.on_connected(comp)
            if not v:
                break
        return v

    def __repr__(self) -> str:
        return f"Character({self.name})"


EPSILON_DELTA = Character(lambda G: 1 if not G.edges else 0, "epsilon_delta")
LAMBDA_ZERO = Character(lambda G: 1, "lambda_0")


def _mode(mode) -> Mode:
    return mode if isinstance(mode, Mode) else Mode(mode)


def convolve(f: Character, g: Character, delta_mode) -> Character:
    """(f ⋆ g)(G) = Σ f(G/∼) g(G|∼) over the admissible partitions of G."""
    mode = _mode(delta_mode)

    def rule(G: Hypergraph) -> Fraction:
        total = Fraction(0)
        for blocks in admissible_partition_masks(G, mode):
            a = f(quotient_masks(G, blocks))
            if a:
                total += a * g(partition_restrict_masks(G, blocks, mode))
        return total

    return Character(rule, f"({f.name} * {g.name})_{mode.value}")


class NotInvertibleError(HyperhopfError):
    pass


def character_inverse(z: Character, delta_mode) -> Character:
    """Convolution inverse, by recursion on the grading |V| - cc.

    For connected G, solving (z⁻¹ ⋆ z)(G) = ε_δ(G) for the discrete-partition
    term z⁻¹(G)·z(T_1)^|V| leaves only quotients of strictly smaller degree.
    """
    mode = _mode(delta_mode)
    from .core import single_edge

    z1 = z(single_edge(1))
    if z1 == 0:
        raise NotInvertibleError(f"{z.name} vanishes on the one-vertex hypergraph")

    inv: Character

    def rule(G: Hypergraph) -> Fraction:
        n = G.n
        if n == 1:
            return 1 / z1
        discrete = tuple(1 << i for i in range(n))
        top = grading_degree(G)
        rest = Fraction(0)
        for blocks in admissible_partition_masks(G, mode):
            if blocks == discrete:
                continue
            Q = quotient_masks(G, blocks)
            assert grading_degree(Q) < top
            b = z(partition_restrict_masks(G, blocks, mode))
            if b:
                rest += inv(Q) * b
        return (EPSILON_DELTA(G) - rest) / z1 ** n

    inv = Character(rule, f"{z.name}^-1_{mode.value}")
    return inv
