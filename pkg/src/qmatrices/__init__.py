"""Exact computations in the quantum matrix algebra O_q(M_n) and its relatives."""

from .qfield import ONE, Q, ZERO, PoleError, QScalar
from .ring import Element, QuantumMatrixRing, commutator, slice_dimension
from .minors import Permutation, quantum_det, quantum_minor, sigma, sigma_exponents, sigma_monomials
from .coalgebra import (
    TensorElement,
    cocommutativity_witness,
    coproduct,
    counit,
    flip,
    is_cocommutative,
    tensor,
)
from .quotients import (
    BElement,
    CommutativePoly,
    GLElement,
    SLElement,
    delta_map,
    divide_by_det,
    eta,
    gamma,
    homogenize_mod_n,
    phi,
    sigma_b,
    sl2_engine_commutator,
    sl2_normal_form,
    sl2_trace_commutator_formula,
    sl_ideal_member,
)
from .centralizer import (
    CentralizerReport,
    build_slice_matrix,
    count_partitions_max_part,
    filtered_degree,
    gr_ad_sigma1,
    gr_consistency_check,
    kernel_basis,
    verify_centralizer_theorem,
)
from .expr import ExprError, IndexRangeError, ParseError, eval_expr, evaluate, parse

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
