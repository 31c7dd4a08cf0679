"""Exact functional decomposition of polynomials over finite fields."""

from .addecomp import (
    Decomposition,
    OrderedFactorisation,
    UnorderedFactorisation,
    abs_decompose,
    all_complete_decompositions,
    basis_to_dec,
    complete_decomposition,
    cr_decompose,
    decompose_ordered,
    factors_to_right,
    indec_basis,
    indec_right_factors,
    is_refinement,
    simfree_bidecomp,
    unordered_refinements,
)
from .additive import (
    AdditivePoly,
    KernelBasis,
    add_compose,
    add_rdivrem,
    counts,
    from_kernel_basis,
    is_similar,
    join,
    meet,
    min_add_mult,
    transform,
    transform_composition,
    transmutable,
)
from .field import (
    Felt,
    Field,
    build_extension,
    build_prime_field,
    find_irreducible,
    frobenius,
    parse_field_spec,
    pth_root,
)
from .gendecomp import (
    Strategy,
    first_complete,
    irred_ff_bidecomp,
    ord_fact_decomp,
    sep_bidecomp,
    tame_bidecomp,
)
from .ratfun import (
    FracLinear,
    RationalFunction,
    flt_apply,
    general_rat_dec,
    norm_rat_dec,
    normalize,
    parse_rational,
    poly_in_h,
    rat_compose,
    rat_reduce,
    rat_right_divide,
)
from .upoly import (
    NEG_INF,
    Poly,
    chebyshev,
    compose,
    factor,
    gcd,
    is_irreducible,
    right_divide,
)

__all__ = [name for name in dir() if not name.startswith("_")]
