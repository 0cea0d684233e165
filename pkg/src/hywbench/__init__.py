"""Numerical workbench for the operator-valued Fourier transform on group
extensions, with exact discrete verification of the norm inequalities that
connect it to the classical Hausdorff-Young theorem.
"""

from .groups import (
    DualOrbitModel,
    DualSamplingConfig,
    GroupElement,
    GroupExtensionModel,
    GROUP_NAMES,
    character_value,
    make_axb,
    make_group,
    make_heisenberg,
)
from .grids import (
    Grid1D,
    SampledFunction,
    TestFunctionSpec,
    fixture_checksum,
    load_sampled,
    lp_norm_G,
    make_grids,
    sample,
    sample_from_callable,
    save_sampled,
)
from .schatten import (
    NumericalError,
    WeightedKernel,
    adjoint_kernel,
    conjugate_exponent,
    cross_norm_qpq,
    russo_gap,
    schatten_norm,
    weighted_operator_matrix,
)
from .transform import (
    CharacterSlice,
    FormalDimensionOperator,
    FourierField,
    assemble_kernel,
    bq_oplus_norm,
    fourier_along_N,
    fourier_transform_p,
    induced_rep_apply,
    induced_rep_matrix,
    kernel_from_pair_table,
    pair_rows,
)
from .verify import (
    TOLERANCES,
    CheckResult,
    babenko_constant,
    check_gaussian_extremality,
    check_hausdorff_young,
    check_minkowski,
    check_nilpotent_bound,
    check_plancherel,
    check_proof_chain,
    check_russo_fournier,
    check_semi_invariance,
    default_grids,
    proof_chain_quantities,
    slice_ratios,
)

__all__ = [
    "DualOrbitModel",
    "DualSamplingConfig",
    "GroupElement",
    "GroupExtensionModel",
    "GROUP_NAMES",
    "character_value",
    "make_axb",
    "make_group",
    "make_heisenberg",
    "Grid1D",
    "SampledFunction",
    "TestFunctionSpec",
    "fixture_checksum",
    "load_sampled",
    "lp_norm_G",
    "make_grids",
    "sample",
    "sample_from_callable",
    "save_sampled",
    "NumericalError",
    "WeightedKernel",
    "adjoint_kernel",
    "conjugate_exponent",
    "cross_norm_qpq",
    "russo_gap",
    "schatten_norm",
    "weighted_operator_matrix",
    "CharacterSlice",
    "FormalDimensionOperator",
    "FourierField",
    "assemble_kernel",
    "bq_oplus_norm",
    "fourier_along_N",
    "fourier_transform_p",
    "induced_rep_apply",
    "induced_rep_matrix",
    "kernel_from_pair_table",
    "pair_rows",
    "TOLERANCES",
    "CheckResult",
    "babenko_constant",
    "check_gaussian_extremality",
    "check_hausdorff_young",
    "check_minkowski",
    "check_nilpotent_bound",
    "check_plancherel",
    "check_proof_chain",
    "check_russo_fournier",
    "check_semi_invariance",
    "default_grids",
    "proof_chain_quantities",
    "slice_ratios",
]

__version__ = "0.1.0"
