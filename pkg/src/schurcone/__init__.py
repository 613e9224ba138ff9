"""Exact Schur-function combinatorics and extreme rays of the (N,k)-Schur cone."""

from .cone import ExtremalityCertificate, count_extreme, count_nested, is_extreme
from .partitions import (
    BadPairReport,
    Partition,
    PartitionMultiset,
    bump,
    bump_iter,
    dominates,
    enumerate_generators,
    enumerate_partitions,
    leq_p,
    nested_report,
    parse_multiset,
    parse_partition,
    phi,
    syt_count,
)
from .schur import SchurVector, expand_product, expand_product_oracle, lr_multi

__version__ = "0.1.0"

__all__ = [
    "BadPairReport",
    "ExtremalityCertificate",
    "Partition",
    "PartitionMultiset",
    "SchurVector",
    "bump",
    "bump_iter",
    "count_extreme",
    "count_nested",
    "dominates",
    "enumerate_generators",
    "enumerate_partitions",
    "expand_product",
    "expand_product_oracle",
    "is_extreme",
    "leq_p",
    "lr_multi",
    "nested_report",
    "parse_multiset",
    "parse_partition",
    "phi",
    "syt_count",
]
