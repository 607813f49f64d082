"""mspkit: exact multivariate Stirling polynomials of both kinds, partition
type combinatorics, Stirling/Lah/Bell number tables, and Lagrange inversion
of exponential generating functions, all in arbitrary-precision arithmetic."""

from .msp import (
    MspCache,
    assoc_bell,
    bell_explicit,
    bell_recursive,
    complete_bell,
    compose_transform,
    compose_transform_second,
    convolution_recurrence,
    cor45_expand,
    eq68_invert,
    first_from_second_schloemilch,
    generate,
    lah_poly,
    lie_first,
    second_from_first,
    snk1_nested,
    stirling_first_explicit,
    stirling_first_from_assoc,
    stirling_first_recursive,
)
from .poly import BigRational, LaurentX1, MPoly, format_poly, parse_poly
from .ptypes import (
    PartitionType,
    cycle_fn,
    order_fn,
    partition_types,
    stirling_fn,
    subset_fn,
)
from .series import (
    EgfCoeffs,
    TPoly,
    egf_compose,
    egf_product,
    exp_transform,
    exp_transform_inverse,
    identity_egf,
    revert_comtet,
    revert_msp,
    revert_oracle,
    total_partitions_recurrence,
)
from .stirling import (
    NumberTable,
    assoc_s2_table,
    bell_numbers,
    cycle_table,
    lah_tables,
    s1_schloemilch,
    s1_table,
    s1_via_assoc,
    s2_bertrand,
    s2_table,
    s2_via_cycle,
)
from .verify import CheckResult, golden_table_check, run_suite

__version__ = "0.1.0"

__all__ = [
    "BigRational",
    "CheckResult",
    "EgfCoeffs",
    "LaurentX1",
    "MPoly",
    "MspCache",
    "NumberTable",
    "PartitionType",
    "TPoly",
    "assoc_bell",
    "assoc_s2_table",
    "bell_explicit",
    "bell_numbers",
    "bell_recursive",
    "complete_bell",
    "compose_transform",
    "compose_transform_second",
    "convolution_recurrence",
    "cor45_expand",
    "cycle_fn",
    "cycle_table",
    "egf_compose",
    "egf_product",
    "eq68_invert",
    "exp_transform",
    "exp_transform_inverse",
    "first_from_second_schloemilch",
    "format_poly",
    "generate",
    "golden_table_check",
    "identity_egf",
    "lah_poly",
    "lah_tables",
    "lie_first",
    "order_fn",
    "parse_poly",
    "partition_types",
    "revert_comtet",
    "revert_msp",
    "revert_oracle",
    "run_suite",
    "s1_schloemilch",
    "s1_table",
    "s1_via_assoc",
    "s2_bertrand",
    "s2_table",
    "s2_via_cycle",
    "second_from_first",
    "snk1_nested",
    "stirling_first_explicit",
    "stirling_first_from_assoc",
    "stirling_first_recursive",
    "stirling_fn",
    "subset_fn",
    "total_partitions_recurrence",
]
