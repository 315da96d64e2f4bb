"""Restriction coproducts, contraction-extraction coproducts, counits and axiom checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import config
from .algebra import LinearCombination, basis_product, canonical
from .config import HyperhopfError
from .core import (
    EMPTY,
    Hypergraph,
    Mode,
    admissible_partition_masks,
    partition_restrict_masks,
    quotient_masks,
    restrict_mask,
)


@dataclass(frozen=True)
class CoproductMode:
    left: Mode
    right: Mode

    def __post_init__(self) -> None:
        object.__setattr__(self, "left", Mode(self.left))
        object.__setattr__(self, "right", Mode(self.right))

    @classmethod
    def parse(cls, text: str) -> "CoproductMode":
        """``"subset,cap"`` or a single mode for an equal pair."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) == 1:
            parts = parts * 2
        if len(parts) != 2:
            raise HyperhopfError(f"bad coproduct mode {text!r}")
        try:
            return cls(Mode(parts[0]), Mode(parts[1]))
        except ValueError:
            raise HyperhopfError(f"bad coproduct mode {text!r}; use subset or cap") from None

    @property
    def equal(self) -> bool:
        return self.left is self.right

    def opposite(self) -> "CoproductMode":
        return CoproductMode(self.right, self.left)

    def __str__(self) -> str:
        return f"{self.left.value},{self.right.value}"


SUBSET_SUBSET = CoproductMode(Mode.SUBSET, Mode.SUBSET)
CAP_CAP = CoproductMode(Mode.CAP, Mode.CAP)
SUBSET_CAP = CoproductMode(Mode.SUBSET, Mode.CAP)
CAP_SUBSET = CoproductMode(Mode.CAP, Mode.SUBSET)
ALL_MODES = (SUBSET_SUBSET, CAP_CAP, SUBSET_CAP, CAP_SUBSET)


def _as_mode(mode) -> CoproductMode:
    if isinstance(mode, CoproductMode):
        return mode
    if isinstance(mode, str):
        return CoproductMode.parse(mode)
    left, right = mode
    return CoproductMode(Mode(left), Mode(right))


def coproduct_pair(G: Hypergraph, mode) -> LinearCombination:
    """Σ over I ⊆ V of G|_left I ⊗ G|_right (V ∖ I)."""
    mode = _as_mode(mode)
    config.check_vertices(G.n, "coproduct")
    full = G.full_mask
    return LinearCombination.collect(
        (
            ((restrict_mask(G, I, mode.left), restrict_mask(G, full & ~I, mode.right)), 1)
            for I in range(full + 1)
        ),
        2,
    )


def iterated_legs(G: Hypergraph, blocks: Sequence[int], mode) -> list[Hypergraph]:
    """Legs of the iterated coproduct term indexed by the ordered blocks.

    Leg p is G restricted (left mode) to I_1 ∪ … ∪ I_p, then restricted
    (right mode) to I_p.  For (subset, cap) this is the staircase restriction.
    """
    mode = _as_mode(mode)
    legs = []
    covered = 0
    for p, block in enumerate(blocks):
        covered |= block
        if p == 0:
            legs.append(restrict_mask(G, block, mode.left))
            continue
        H = restrict_mask(G, covered, mode.left)
        # H keeps the positions of ``covered`` in order; re-express ``block`` there.
        inner = 0
        for i, v in enumerate(_bit_list(covered)):
            if block >> v & 1:
                inner |= 1 << i
        legs.append(restrict_mask(H, inner, mode.right))
    return legs


def _bit_list(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def coproduct_iterated(G: Hypergraph, mode, k: int) -> LinearCombination:
    """Left-iterated coproduct (Δ ⊗ Id^(k-1)) ∘ … ∘ Δ, of tensor degree k + 1."""
    if k < 1:
        raise HyperhopfError("iteration count must be at least 1")
    mode = _as_mode(mode)
    out = coproduct_pair(G, mode)
    for _ in range(k - 1):
        out = out.apply_leg(0, lambda f: coproduct_pair(f, mode))
    return out


def reduced_coproduct(G: Hypergraph, mode) -> LinearCombination:
    if G.n == 0:
        raise HyperhopfError("the reduced coproduct is not defined on the empty hypergraph")
    return coproduct_pair(G, mode) - LinearCombination.of(G, EMPTY) - LinearCombination.of(EMPTY, G)


def delta_contract(G: Hypergraph, mode) -> LinearCombination:
    """Σ over admissible partitions of G/∼ ⊗ G|∼."""
    mode = Mode(mode)
    return LinearCombination.collect(
        (
            ((quotient_masks(G, blocks), partition_restrict_masks(G, blocks, mode)), 1)
            for blocks in admissible_partition_masks(G, mode)
        ),
        2,
    )


def counit_eps(G: Hypergraph) -> Fraction:
    return Fraction(1 if G.n == 0 else 0)


def counit_eps_delta(G: Hypergraph) -> Fraction:
    return Fraction(1 if not G.edges else 0)


def m_1_3_24(x: LinearCombination) -> LinearCombination:
    """a1⊗a2⊗a3⊗a4 ↦ a1⊗a3⊗(a2·a4)."""
    if x.degree != 4:
        raise HyperhopfError("m_1_3_24 needs tensor degree 4")
    return x.regroup([(0,), (2,), (1, 3)])


def product_map(x: LinearCombination) -> LinearCombination:
    """Multiply all legs together."""
    return x.regroup([tuple(range(x.degree))])


def linear_map(fn, x: LinearCombination) -> LinearCombination:
    """Apply a basis map to a degree-1 combination."""
    return x.apply_leg(0, fn)


# ---------------------------------------------------------------------------
# axiom checks
# ---------------------------------------------------------------------------

@dataclass
class AxiomResult:
    axiom: str
    ok: bool
    lhs: LinearCombination
    rhs: LinearCombination

    def __bool__(self) -> bool:
        return self.ok


AXIOMS = (
    "coassoc",
    "delta-coassoc",
    "multiplicativity",
    "delta-multiplicativity",
    "cocommutativity",
    "coopposite",
    "counit",
    "delta-counit",
    "cointeraction",
)


def _result(name: str, lhs: LinearCombination, rhs: LinearCombination) -> AxiomResult:
    return AxiomResult(name, lhs == rhs, lhs, rhs)


def check_axioms(G: Hypergraph, which: str, mode=None, other: Hypergraph | None = None) -> AxiomResult:
    """Evaluate both sides of one identity exactly.

    ``mode`` is a coproduct mode pair for the Δ axioms and a single mode for
    the δ axioms; ``other`` is the second factor for the multiplicativity checks.
    """
    if which not in AXIOMS:
        raise HyperhopfError(f"unknown axiom {which!r}; choose from {', '.join(AXIOMS)}")
    G1 = LinearCombination.of(G)

    if which == "coassoc":
        m = _as_mode(mode or SUBSET_SUBSET)
        D = coproduct_pair(G, m)
        lhs = D.apply_leg(0, lambda f: coproduct_pair(f, m))
        rhs = D.apply_leg(1, lambda f: coproduct_pair(f, m))
        return _result(f"coassoc[{m}]", lhs, rhs)

    if which == "delta-coassoc":
        dm = Mode(mode or Mode.SUBSET)
        D = delta_contract(G, dm)
        lhs = D.apply_leg(0, lambda f: delta_contract(f, dm))
        rhs = D.apply_leg(1, lambda f: delta_contract(f, dm))
        return _result(f"delta-coassoc[{dm}]", lhs, rhs)

    if which in ("multiplicativity", "delta-multiplicativity"):
        if other is None:
            raise HyperhopfError("multiplicativity needs a second hypergraph")
        if which == "multiplicativity":
            m = _as_mode(mode or SUBSET_SUBSET)
            op = lambda f: coproduct_pair(f, m)  # noqa: E731
            tag = f"multiplicativity[{m}]"
        else:
            dm = Mode(mode or Mode.SUBSET)
            op = lambda f: delta_contract(f, dm)  # noqa: E731
            tag = f"delta-multiplicativity[{dm}]"
        GH = basis_product(canonical(G), canonical(other))
        return _result(tag, op(GH), op(canonical(G)).multiply(op(canonical(other))))

    if which == "cocommutativity":
        m = _as_mode(mode or SUBSET_SUBSET)
        if not m.equal:
            raise HyperhopfError("cocommutativity is only claimed for equal modes")
        D = coproduct_pair(G, m)
        return _result(f"cocommutativity[{m}]", D.swap(), D)

    if which == "coopposite":
        return _result("coopposite", coproduct_pair(G, CAP_SUBSET).swap(), coproduct_pair(G, SUBSET_CAP))

    if which == "counit":
        m = _as_mode(mode or SUBSET_SUBSET)
        D = coproduct_pair(G, m)
        left = D.contract_leg(0, counit_eps)
        right = D.contract_leg(1, counit_eps)
        ok = left == G1 and right == G1
        return AxiomResult(f"counit[{m}]", ok, left, right if left == G1 else G1)

    if which == "delta-counit":
        dm = Mode(mode or Mode.SUBSET)
        D = delta_contract(G, dm)
        left = D.contract_leg(0, counit_eps_delta)
        right = D.contract_leg(1, counit_eps_delta)
        ok = left == G1 and right == G1
        return AxiomResult(f"delta-counit[{dm}]", ok, left, right if left == G1 else G1)

    # cointeraction: (Δ ⊗ Id) ∘ δ = m_{1,3,24} ∘ (δ ⊗ δ) ∘ Δ, with matching modes
    dm = Mode(mode or Mode.SUBSET)
    m = CoproductMode(dm, dm)
    lhs = delta_contract(G, dm).apply_leg(0, lambda f: coproduct_pair(f, m))
    D = coproduct_pair(G, m)
    DD = D.apply_leg(0, lambda f: delta_contract(f, dm)).apply_leg(2, lambda f: delta_contract(f, dm))
    return _result(f"cointeraction[{dm}]", lhs, m_1_3_24(DD))
