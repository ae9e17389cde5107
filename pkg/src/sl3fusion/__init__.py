"""Exact graded decompositions of sl3 fusion products.

The fusion product of two irreducible sl3 modules carries a grading by
current-algebra degree; its graded pieces decompose into irreducibles with
multiplicities that are polynomials in q (q-analogues of the classical tensor
multiplicities).  This package computes those polynomials in closed form
(`graded_character`, `graded_multiplicity`), checks them against brute-force
constructions (`fusion_oracle`, `verification`), and exposes the classical
character theory they refine (`characters`).  All arithmetic is exact.
"""

from .characters import (
    FormalCharacter,
    char_product,
    character_mass,
    decompose_character,
    decomposition_census,
    irrep_character,
    sorted_character_terms,
    tensor_decompose,
)
from .closedform import (
    KernelDecomposition,
    KernelSummand,
    direct_decomposition,
    first_kind_index_pairs,
    fusion_dim,
    graded_character,
    graded_multiplicity,
    graded_multiplicity_direct,
    kernel_generators,
    kernel_summands,
    lr_coefficient,
    reduce_pair,
    second_kind_index_pairs,
)
from .fusion_oracle import (
    GENERATOR_NAMES,
    IrrepRealization,
    fusion_graded_character,
    graded_decomposition_oracle,
    realize_irrep,
)
from .qseries import (
    GradedDecomposition,
    QPolynomial,
    canonical_json,
    decomposition_at_q1,
    decomposition_from_json,
    decomposition_to_json,
    involute_decomposition,
    qp_format,
    qp_format_latex,
    sorted_summands,
)
from .verification import CHECK_NAMES, SweepConfig, SweepReport, run_sweep
from .weights import (
    ALPHA1,
    ALPHA2,
    THETA,
    NormalizedPair,
    PairKind,
    Weight,
    dominant_weights_up_to,
    involute,
    is_dominant,
    normalize_pair,
    pair_kind,
    size,
    weyl_dim,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # weights
    "Weight",
    "ALPHA1",
    "ALPHA2",
    "THETA",
    "PairKind",
    "NormalizedPair",
    "pair_kind",
    "normalize_pair",
    "is_dominant",
    "involute",
    "size",
    "weyl_dim",
    "dominant_weights_up_to",
    # characters
    "FormalCharacter",
    "irrep_character",
    "character_mass",
    "char_product",
    "tensor_decompose",
    "decompose_character",
    "decomposition_census",
    "sorted_character_terms",
    # q-series
    "QPolynomial",
    "GradedDecomposition",
    "qp_format",
    "qp_format_latex",
    "sorted_summands",
    "decomposition_at_q1",
    "involute_decomposition",
    "decomposition_to_json",
    "decomposition_from_json",
    "canonical_json",
    # closed form
    "reduce_pair",
    "kernel_generators",
    "kernel_summands",
    "KernelSummand",
    "KernelDecomposition",
    "first_kind_index_pairs",
    "second_kind_index_pairs",
    "graded_character",
    "graded_multiplicity",
    "graded_multiplicity_direct",
    "direct_decomposition",
    "lr_coefficient",
    "fusion_dim",
    # oracle
    "GENERATOR_NAMES",
    "IrrepRealization",
    "realize_irrep",
    "fusion_graded_character",
    "graded_decomposition_oracle",
    # verification
    "CHECK_NAMES",
    "SweepConfig",
    "SweepReport",
    "run_sweep",
]
