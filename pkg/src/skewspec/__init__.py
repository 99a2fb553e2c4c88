"""Exact analysis of characteristic polynomials of skew-signed weighted digraphs."""

from .charpoly import CharPolynomial, bareiss_determinant, char_poly, determinant
from .graph import (
    RationalMatrix,
    WeightedDigraph,
    from_graph,
    from_matrix,
    to_matrix,
    validate_pwls,
)
from .signing import (
    SkewSigning,
    apply_signing,
    brute_force_invariance,
    decide_invariance,
    enumerate_skew_signings,
    invariant_char_poly,
    orientations_of_graph,
    signed_cycle_coefficient,
)
from .subdigraphs import (
    Cycle,
    coefficient_via_subdigraphs,
    enumerate_cycles,
    enumerate_digon_covers,
    enumerate_linear_subdigraphs,
    partition_cycles_by_sign,
    reverse_cycle,
    skew_coefficient_via_even_subdigraphs,
)
from .symmetry import (
    build_scaling_certificate,
    check_matrix_cycle_symmetric,
    cycle_symmetry_up_to,
    skew_symmetrize,
    symmetrize,
)
from .wdg import parse_wdg, serialize_wdg

__version__ = "0.1.0"

__all__ = [
    "CharPolynomial",
    "Cycle",
    "RationalMatrix",
    "SkewSigning",
    "WeightedDigraph",
    "apply_signing",
    "bareiss_determinant",
    "brute_force_invariance",
    "build_scaling_certificate",
    "char_poly",
    "check_matrix_cycle_symmetric",
    "coefficient_via_subdigraphs",
    "cycle_symmetry_up_to",
    "decide_invariance",
    "determinant",
    "enumerate_cycles",
    "enumerate_digon_covers",
    "enumerate_linear_subdigraphs",
    "enumerate_skew_signings",
    "from_graph",
    "from_matrix",
    "invariant_char_poly",
    "orientations_of_graph",
    "parse_wdg",
    "partition_cycles_by_sign",
    "reverse_cycle",
    "serialize_wdg",
    "signed_cycle_coefficient",
    "skew_coefficient_via_even_subdigraphs",
    "skew_symmetrize",
    "symmetrize",
    "to_matrix",
    "validate_pwls",
]
