"""
Tables of joint censuses.

Every cell reuses one SignatureTable, so each (graph, invariant) signature
is computed once no matter how many pairs are requested.
"""

import logging
from typing import List, Optional, Sequence, Union

import pandas as pd

from ..core.batch_processor import SignatureProcessor
from ..generators.connected import gen_connected_graphs
from ..invariants.signatures import InvariantKind, JointParam, Parameter, parameter_kinds
from .engine import (
    CensusConfig, CensusReport, GraphStream, Progress, Semantics, SignatureTable,
    build_signature_table, census_from_table,
)

logger = logging.getLogger(__name__)


def _as_table(stream: Union[SignatureTable, GraphStream], kinds: Sequence[InvariantKind],
              processor: Optional[SignatureProcessor], progress: Progress = None) -> SignatureTable:
    if isinstance(stream, SignatureTable):
        return stream
    return build_signature_table(stream, kinds, processor, progress)


def pairwise_table(stream: Union[SignatureTable, GraphStream],
                   rows: Sequence[InvariantKind], cols: Sequence[InvariantKind],
                   semantics: Semantics = Semantics.JOINT,
                   processor: Optional[SignatureProcessor] = None,
                   progress: Progress = None) -> pd.DataFrame:
    """
    Graphs-with-mate counts for every (row, col) pair.

    Returns:
        DataFrame indexed by row tokens with one column per col token
    """
    if not rows or not cols:
        raise ValueError("row and column invariant lists must be non-empty")
    table = _as_table(stream, list(rows) + list(cols), processor, progress)

    counts = []
    for r in rows:
        line = []
        for c in cols:
            report, _ = census_from_table(table, CensusConfig(JointParam(r, c), semantics))
            line.append(report.with_mate)
        counts.append(line)
        logger.info(f"Table row {r.token} done")

    return pd.DataFrame(counts, index=[r.token for r in rows], columns=[c.token for c in cols])


def rank_pairs(table: SignatureTable, candidates: Sequence[JointParam], top: Optional[int] = None,
               semantics: Semantics = Semantics.JOINT) -> List[CensusReport]:
    """Joint parameters with the fewest graphs having a mate, ties broken by token."""
    reports = [census_from_table(table, CensusConfig(p, semantics))[0] for p in candidates]
    reports.sort(key=lambda r: (r.with_mate, r.parameter))
    return reports if top is None else reports[:top]


def all_pairs(kinds: Sequence[InvariantKind]) -> List[JointParam]:
    """Unordered pairs of distinct invariants, in list order."""
    return [JointParam(a, b) for i, a in enumerate(kinds) for b in kinds[i + 1:]]


def uncertainty_series(orders: Sequence[int], parameters: Sequence[Parameter],
                       processor: Optional[SignatureProcessor] = None,
                       semantics: Semantics = Semantics.JOINT,
                       progress: Progress = None) -> List[CensusReport]:
    """
    Fraction of connected graphs with a mate, per order and parameter.

    One signature table per order serves every parameter.
    """
    kinds = [k for p in parameters for k in parameter_kinds(p)]
    reports = []
    for n in orders:
        table = build_signature_table(gen_connected_graphs(n), kinds, processor, progress)
        for p in parameters:
            reports.append(census_from_table(table, CensusConfig(p, semantics))[0])
    return reports
