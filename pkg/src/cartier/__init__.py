"""Cartier matrix, a-number and p-rank of y^((q+1)/2) = x^m + x over F_(q^2)."""

from .bipoly import BiPoly, curve_reduce, nabla, parse_bipoly, poly_mul, root_exponents, trinomial_power_shift
from .curve import CurveParams, DifferentialBasis, enumerate_basis, enumerate_paper_index_set, genus, validate_params
from .engine import (
    CartierMatrix,
    VerificationReport,
    a_number,
    cartier_apply,
    cartier_matrix,
    congruence_count,
    p_rank,
    paper_a_formula,
    paper_rank_formula,
    rank,
    verify,
)
from .fields import ExtElement, ExtFieldCtx, FpElement, PrimeModulus, ext_pow, find_irreducible, fp_inv
from .points import PointCount, count_points, is_maximal

__version__ = "0.1.0"
