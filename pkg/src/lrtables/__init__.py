"""Tensor product multiplicities for GL_n, O_n and Sp_2n via LR-contingency tables."""
from .contingency import (
    MarginSpec,
    PartitionMatrix,
    enumerate_lrct,
    hom_dimension,
    lrc_general,
    lrc_zero,
    table_norm,
)
from .errors import (
    DimensionMismatch,
    LengthOverflow,
    LrTablesError,
    NotDecreasing,
    NotSymmetric,
    OutsideStableRange,
    ParseError,
    PreconditionViolated,
)
from .identities import hook_identity_check, hook_multiplicity
from .lr import ExpansionMap, lr_coefficient, multi_lr, pieri_column, pieri_row, schur_product
from .oracle import oracle_gl_invariants, oracle_osp_invariants
from .orthosymplectic import SymMarginSpec, enumerate_sym_lrct, osp_invariant_dim, sym_table_norm
from .partition import GlWeight, Partition, combine, conjugate, dual, parse_weight, split
from .tables import TableSpec, count_tables, derangement_count, enumerate_tables, fpf_involution_count

__version__ = "0.1.0"

__all__ = [
    "DimensionMismatch",
    "ExpansionMap",
    "GlWeight",
    "LengthOverflow",
    "LrTablesError",
    "MarginSpec",
    "NotDecreasing",
    "NotSymmetric",
    "OutsideStableRange",
    "ParseError",
    "Partition",
    "PartitionMatrix",
    "PreconditionViolated",
    "SymMarginSpec",
    "TableSpec",
    "combine",
    "conjugate",
    "count_tables",
    "derangement_count",
    "dual",
    "enumerate_lrct",
    "enumerate_sym_lrct",
    "enumerate_tables",
    "fpf_involution_count",
    "hom_dimension",
    "hook_identity_check",
    "hook_multiplicity",
    "lr_coefficient",
    "lrc_general",
    "lrc_zero",
    "multi_lr",
    "oracle_gl_invariants",
    "oracle_osp_invariants",
    "osp_invariant_dim",
    "parse_weight",
    "pieri_column",
    "pieri_row",
    "schur_product",
    "split",
    "sym_table_norm",
    "table_norm",
]
