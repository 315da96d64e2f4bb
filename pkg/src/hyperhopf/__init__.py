"""Exact Hopf-algebraic invariants of hypergraphs and multi-complexes."""

from .algebra import Character, LinearCombination, character_inverse, convolve
from .antipode import antipode, antipode_closed, antipode_mixed, takeuchi_antipode, verify_antipode
from .config import HyperhopfError, ResourceCapError
from .coproducts import CoproductMode, check_axioms, coproduct_iterated, coproduct_pair, delta_contract
from .core import (
    EMPTY,
    Hypergraph,
    Mode,
    SetPartition,
    admissible_partitions,
    canonical_form,
    disjoint_union,
    edgeless,
    gamma,
    is_isomorphic,
    partition_restrict,
    quotient,
    restrict,
    single_edge,
)
from .invariants import (
    Variant,
    chromatic,
    chromatic_hilbert,
    coloring_oracle,
    eulerian_idempotent,
    lambda_character,
    spanning_counts,
)
from .multicomplex import (
    MultiComplex,
    example_complex,
    from_hypergraph,
    kappa,
    mc_antipode,
    mc_chromatic,
    mc_coproduct,
    mc_delta_contract,
    mc_eulerian,
    mc_product,
    mc_quotient,
    mc_restrict,
)
from .orientations import QuasiOrder, acyclic_orientations, classify_orientation, orientation_sums, stanley_count
from .polynomial import RationalPolynomial
from .serialize import parse_hypergraph, parse_multicomplex

__version__ = "0.1.0"

__all__ = [
    "Character",
    "LinearCombination",
    "character_inverse",
    "convolve",
    "antipode",
    "antipode_closed",
    "antipode_mixed",
    "takeuchi_antipode",
    "verify_antipode",
    "HyperhopfError",
    "ResourceCapError",
    "CoproductMode",
    "check_axioms",
    "coproduct_iterated",
    "coproduct_pair",
    "delta_contract",
    "EMPTY",
    "Hypergraph",
    "Mode",
    "SetPartition",
    "admissible_partitions",
    "canonical_form",
    "disjoint_union",
    "edgeless",
    "gamma",
    "is_isomorphic",
    "partition_restrict",
    "quotient",
    "restrict",
    "single_edge",
    "Variant",
    "chromatic",
    "chromatic_hilbert",
    "coloring_oracle",
    "eulerian_idempotent",
    "lambda_character",
    "spanning_counts",
    "MultiComplex",
    "example_complex",
    "from_hypergraph",
    "kappa",
    "mc_antipode",
    "mc_chromatic",
    "mc_coproduct",
    "mc_delta_contract",
    "mc_eulerian",
    "mc_product",
    "mc_quotient",
    "mc_restrict",
    "QuasiOrder",
    "acyclic_orientations",
    "classify_orientation",
    "orientation_sums",
    "stanley_count",
    "RationalPolynomial",
    "parse_hypergraph",
    "parse_multicomplex",
]
