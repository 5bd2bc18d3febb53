"""Mate censuses: sources, bucketing engine, pairwise tables and report output."""

from .sources import GraphSource, parse_generator_spec
from .engine import (
    Semantics, HashingMode, CensusConfig, Bucket, ClassTable, CensusReport, SignatureTable,
    build_signature_table, census_from_table, run_census, run_joint_census,
    extract_mate_classes, decimal_string,
)
from .pairwise import pairwise_table, rank_pairs, all_pairs, uncertainty_series
from .report_writer import ReportWriter, CSV_COLUMNS

__all__ = [
    'GraphSource', 'parse_generator_spec',
    'Semantics', 'HashingMode', 'CensusConfig', 'Bucket', 'ClassTable', 'CensusReport', 'SignatureTable',
    'build_signature_table', 'census_from_table', 'run_census', 'run_joint_census',
    'extract_mate_classes', 'decimal_string',
    'pairwise_table', 'rank_pairs', 'all_pairs', 'uncertainty_series',
    'ReportWriter', 'CSV_COLUMNS',
]
