"""Exact expansivity tests for integer polynomials.

An integer polynomial is expansive when all of its roots lie strictly outside
the unit circle. This package decides that with fraction-free determinants,
certifies root-radius thresholds, and bounds how close the roots can get to
the circle.
"""
from .bench import BenchConfig, GrowthProfile, bench_growth
from .bounds import (
    GapBoundReport,
    LiouvilleQuery,
    best_bound_report,
    bound_a,
    bound_az,
    bound_height,
    bound_length,
    liouville_rhs,
)
from .dpoly import (
    SymbolicPoly,
    TermCountReport,
    d_polynomial,
    pair_product_polynomial,
    resultant_pair_product,
    term_count,
)
from .enumeration import CensusResult, EnumerationSpec, enumerate_expansive
from .expansivity import (
    DMatrixSpec,
    ExpansivityVerdict,
    RootCountReport,
    build_d_matrix,
    certified_gap,
    check_d_conditions,
    check_schur_cohn,
    coefficient_bound_filter,
    count_roots_inside_unit,
    roots_outside_radius,
)
from .linalg import EliminationTrace, ExactMatrix, bareiss_determinant, determinant_sign, hadamard_bound
from .oracle import NumericRoots, find_roots_numeric, numeric_expansive, numeric_gap
from .poly import (
    IntPolynomial,
    Measures,
    PolynomialError,
    evaluate,
    measures,
    normalize_sign,
    reverse,
    scale_argument,
    schur_transform,
)

__version__ = "0.1.0"
