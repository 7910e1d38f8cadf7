"""Exact arithmetic layer: number fields, matrices and polynomials."""

from .matrices import (
    Definiteness,
    EchelonForm,
    FieldMatrix,
    IntMatrix,
    SmithForm,
    check_smith_form,
    definiteness,
    det_bareiss,
    field_rank,
    int_inverse_unimodular,
    int_rank,
    is_positive_definite,
    rational_kernel_primitive,
    rref,
    snf,
)
from .number_field import (
    PRESETS,
    Q,
    Q_ZETA3,
    Q_ZETA12,
    NumberFieldElement,
    NumberFieldSpec,
    Rational,
    lift,
    nf_inv,
    rational_dth_root,
)
from .polynomials import (
    BinaryForm,
    MultiPoly,
    dth_power_root,
    restrict_to_subspace,
    substitute_linear,
)

__all__ = [
    # Number fields
    "NumberFieldSpec",
    "NumberFieldElement",
    "Rational",
    "Q",
    "Q_ZETA3",
    "Q_ZETA12",
    "PRESETS",
    "lift",
    "nf_inv",
    "rational_dth_root",

    # Matrices
    "IntMatrix",
    "FieldMatrix",
    "EchelonForm",
    "SmithForm",
    "Definiteness",
    "rref",
    "field_rank",
    "int_rank",
    "det_bareiss",
    "snf",
    "check_smith_form",
    "rational_kernel_primitive",
    "is_positive_definite",
    "definiteness",
    "int_inverse_unimodular",

    # Polynomials
    "MultiPoly",
    "BinaryForm",
    "substitute_linear",
    "restrict_to_subspace",
    "dth_power_root",
]
