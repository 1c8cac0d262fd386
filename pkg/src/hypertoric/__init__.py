"""Combinatorial invariants of affine hypertoric varieties Y_A(0).

A variety is described by a unimodular integer matrix A (d x n) or by its
Gale dual B (n x (n-d)); everything here is exact integer arithmetic.
"""

from __future__ import annotations

from .analysis import (
    AnalysisReport,
    DecompositionReport,
    HypertoricDatum,
    MomentIdeal,
    UniversalCoverDatum,
    analyze,
    classify_equal,
    decompose,
    generate_example,
    is_irreducible,
    moment_ideal,
    two_form_dim,
    universal_cover,
    verify_simplification_diagram,
)
from .arrangement import (
    ParallelData,
    affine_offsets,
    has_isolated_singularities,
    is_generic,
    is_simple,
    parallel_classes,
    simplify,
    sing_codim,
    strata,
)
from .errors import (
    BadParams,
    GroundTooLarge,
    HypertoricError,
    NonUnitRatio,
    NoIntegralSolution,
    NotSurjective,
    NotUnimodular,
    OracleBoundExceeded,
    ParseError,
    RankDeficient,
    ZeroBRow,
)
from .exact_linalg import AbelianGroup, IntMatrix, cokernel, hnf_column, kernel_basis, snf
from .fungroup import pi1, pi1_oracle, pi1_order
from .gale import GalePair, gale_dual_of_A, gale_dual_of_B, verify_gale_pair
from .matroid import Flat, VectorMatroid, is_isomorphic
from .report_io import emit_report, parse_matrix, parse_report, read_matrix

__version__ = "0.1.0"
