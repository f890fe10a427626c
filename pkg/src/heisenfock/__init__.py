"""Exact-arithmetic Heisenberg algebra, Fock representation, and graded
dimension calculus, with mechanical verification of the generator
relations."""

from .config import Config, ConfigError, default_config, load_config
from .dimensions import DimComparison, DimRow, compare_dims, vistoli_dim
from .expressions import ExprSyntaxError, evaluate, parse_expr, to_element
from .fock import FockVector, act_element, act_generator, fock_dim
from .generators import (
    MIXED,
    PLAIN,
    TRANSPOSED,
    check_triangularity,
    expand_p,
    expand_q,
    pq_to_a_basis,
    s_coefficient,
    verify_qp_relation,
    verify_qq_pp_commute,
)
from .graded import GradedDims, euler, ext_power, sym_power, tensor
from .heisenberg import (
    BasisIndexError,
    Element,
    GeneratorSymbol,
    InvalidModeError,
    NormalElement,
    PairingMatrix,
    commutator,
    commutator_scalar,
    multiply,
    normal_order,
    symbol,
)
from .partitions import (
    MultiPartition,
    Partition,
    is_coarser,
    multipartition_coarser,
    multipartitions_of_weight,
    partitions_of,
    z_constant,
)

__version__ = "1.0.0"

__all__ = [
    "BasisIndexError",
    "Config",
    "ConfigError",
    "DimComparison",
    "DimRow",
    "Element",
    "ExprSyntaxError",
    "FockVector",
    "GeneratorSymbol",
    "GradedDims",
    "InvalidModeError",
    "MIXED",
    "MultiPartition",
    "NormalElement",
    "PLAIN",
    "PairingMatrix",
    "Partition",
    "TRANSPOSED",
    "act_element",
    "act_generator",
    "check_triangularity",
    "commutator",
    "commutator_scalar",
    "compare_dims",
    "default_config",
    "euler",
    "evaluate",
    "expand_p",
    "expand_q",
    "ext_power",
    "fock_dim",
    "is_coarser",
    "load_config",
    "multipartition_coarser",
    "multipartitions_of_weight",
    "multiply",
    "normal_order",
    "parse_expr",
    "partitions_of",
    "pq_to_a_basis",
    "s_coefficient",
    "sym_power",
    "symbol",
    "tensor",
    "to_element",
    "verify_qp_relation",
    "verify_qq_pp_commute",
    "vistoli_dim",
    "z_constant",
]
