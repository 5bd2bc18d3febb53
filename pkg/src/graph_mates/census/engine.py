"""
Census engine: bucket graphs by signature and count graphs with mates.

Joint semantics buckets by the concatenated key of both invariants, so a
graph has a mate only if another graph matches it on both at once.
Set-intersection semantics runs the two single censuses and intersects the
sets of graphs having a mate.
"""

import logging
import zlib
from collections import Counter
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from enum import Enum
from fractions import Fraction
from hashlib import blake2b
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from ..core.batch_processor import SignatureProcessor
from ..errors import CensusConfigError, MembersNotCollected, MixedOrder
from ..graphs.graph import Graph
from ..graphs.graph6 import record_order, to_graph6_str
from ..invariants.signatures import (
    InvariantKind, JointParam, Parameter, ParamKey, parameter_kinds, signature_rows,
)
from .sources import GraphSource

logger = logging.getLogger(__name__)

DECIMAL_DIGITS = 15
HASH_BYTES = 16
PARTIAL_RECORDS = 4096
# exact keys start with a header byte below 0x40
_HASHED_TAG = b'\xff'

GraphStream = Union[GraphSource, Iterable[Graph], Iterable[str]]
Progress = Optional[Callable[[int], None]]


class Semantics(Enum):
    JOINT = "joint"
    SET_INTERSECTION = "set-intersection"


class HashingMode(Enum):
    EXACT = "exact"
    HASHED = "hashed"


@dataclass(frozen=True)
class CensusConfig:
    parameter: Parameter
    semantics: Semantics = Semantics.JOINT
    collect_members: bool = False
    hashing_mode: HashingMode = HashingMode.EXACT
    shards: int = 16

    def __post_init__(self):
        if self.semantics is Semantics.SET_INTERSECTION:
            if not isinstance(self.parameter, JointParam):
                raise CensusConfigError("set-intersection semantics needs two invariants")
            if self.collect_members:
                raise CensusConfigError("mate classes are only defined for joint semantics")
        if self.shards < 1:
            raise CensusConfigError(f"shard count must be positive, got {self.shards}")


@dataclass
class Bucket:
    count: int = 0
    members: Optional[List[str]] = None


class ClassTable:
    """
    Buckets of graphs sharing a key, split into shards by a checksum of the key.

    Merging two tables is commutative and associative, so partial tables can
    be combined in any order.
    """

    def __init__(self, shards: int = 16, collect_members: bool = False):
        self.collect_members = collect_members
        self._shards: List[Dict[ParamKey, Bucket]] = [{} for _ in range(shards)]

    def _shard(self, key: ParamKey) -> Dict[ParamKey, Bucket]:
        return self._shards[zlib.crc32(key) % len(self._shards)]

    def add(self, key: ParamKey, record: str):
        bucket = self._shard(key).setdefault(key, Bucket(members=[] if self.collect_members else None))
        bucket.count += 1
        if bucket.members is not None:
            bucket.members.append(record)

    def merge(self, other: 'ClassTable') -> 'ClassTable':
        if len(other._shards) != len(self._shards):
            raise CensusConfigError("cannot merge class tables with different shard counts")
        for mine, theirs in zip(self._shards, other._shards):
            for key, bucket in theirs.items():
                target = mine.setdefault(key, Bucket(members=[] if self.collect_members else None))
                target.count += bucket.count
                if target.members is not None:
                    target.members.extend(bucket.members or [])
        self.collect_members = self.collect_members and other.collect_members
        return self

    def buckets(self) -> Iterator[Tuple[ParamKey, Bucket]]:
        for shard in self._shards:
            yield from shard.items()

    def __len__(self) -> int:
        return sum(len(shard) for shard in self._shards)

    @property
    def total(self) -> int:
        return sum(b.count for _, b in self.buckets())

    @property
    def with_mate(self) -> int:
        return sum(b.count for _, b in self.buckets() if b.count >= 2)

    @property
    def class_count(self) -> int:
        return sum(1 for _, b in self.buckets() if b.count >= 2)

    @property
    def singletons(self) -> int:
        return sum(1 for _, b in self.buckets() if b.count == 1)


def decimal_string(value: Fraction, digits: int = DECIMAL_DIGITS) -> str:
    """Fixed-point rendering rounded to the given number of significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        result = Decimal(value.numerator) / Decimal(value.denominator)
    return format(result, 'f')


@dataclass(frozen=True)
class CensusReport:
    n: int
    parameter: str
    semantics: str
    total: int
    with_mate: int
    classes: int

    @property
    def uncertainty(self) -> Fraction:
        return Fraction(self.with_mate, self.total)

    @property
    def uncertainty_decimal(self) -> str:
        return decimal_string(self.uncertainty)

    def as_row(self) -> Dict[str, object]:
        return {
            'n': self.n,
            'parameter': self.parameter,
            'semantics': self.semantics,
            'total': self.total,
            'with_mate': self.with_mate,
            'classes': self.classes,
            'uncertainty': self.uncertainty_decimal,
        }


@dataclass
class SignatureTable:
    """Keys of every record for several invariants, aligned with the records."""
    n: int
    records: List[str]
    columns: Dict[InvariantKind, List[ParamKey]] = field(default_factory=dict)

    @property
    def kinds(self) -> List[InvariantKind]:
        return list(self.columns)

    def key_views(self, parameter: Parameter, semantics: Semantics) -> List[List[ParamKey]]:
        """One key list per bucketing: the joint key, or one per invariant."""
        kinds = parameter_kinds(parameter)
        missing = [k.token for k in kinds if k not in self.columns]
        if missing:
            raise CensusConfigError(f"signature table lacks {', '.join(missing)}")
        if semantics is Semantics.SET_INTERSECTION:
            return [self.columns[k] for k in kinds]
        if len(kinds) == 1:
            return [self.columns[kinds[0]]]
        first, second = (self.columns[k] for k in kinds)
        return [[a + b for a, b in zip(first, second)]]


def _collect_records(stream: GraphStream) -> Tuple[int, List[str]]:
    if isinstance(stream, GraphSource):
        items: Iterable = stream.records()
    else:
        items = stream
    records: List[str] = []
    n = None
    for item in items:
        record = to_graph6_str(item) if isinstance(item, Graph) else item
        order = record_order(record)
        if n is None:
            n = order
        elif order != n:
            raise MixedOrder(n, order)
        records.append(record)
    if n is None:
        raise CensusConfigError("graph stream is empty")
    return n, records


def _unique(kinds: Iterable[InvariantKind]) -> List[InvariantKind]:
    return list(dict.fromkeys(kinds))


def build_signature_table(stream: GraphStream, kinds: Sequence[InvariantKind],
                          processor: Optional[SignatureProcessor] = None,
                          progress: Progress = None) -> SignatureTable:
    """Compute every requested signature of every graph once."""
    processor = processor or SignatureProcessor()
    kinds = _unique(kinds)
    n, records = _collect_records(stream)
    rows = processor.map_records(signature_rows, records, kinds, progress=progress)
    columns = {k: [row[i] for row in rows] for i, k in enumerate(kinds)}
    logger.info(f"Signature table: {len(records):,} graphs on {n} vertices, {len(kinds)} invariants")
    return SignatureTable(n, records, columns)


def _mate_flags(keys: Sequence[ParamKey]) -> List[bool]:
    counts = Counter(keys)
    return [counts[k] >= 2 for k in keys]


def _class_table(keys: List[ParamKey], records: List[str], cfg: CensusConfig) -> ClassTable:
    """Partial tables over consecutive blocks of records, merged in stream order."""
    table = ClassTable(cfg.shards, cfg.collect_members)
    for start in range(0, len(records), PARTIAL_RECORDS):
        partial = ClassTable(cfg.shards, cfg.collect_members)
        for key, record in zip(keys[start:start + PARTIAL_RECORDS], records[start:start + PARTIAL_RECORDS]):
            partial.add(key, record)
        table.merge(partial)
    return table


def _report_from_views(n: int, records: List[str], views: List[List[ParamKey]],
                       cfg: CensusConfig) -> Tuple[CensusReport, Optional[ClassTable]]:
    parameter = cfg.parameter.token
    if cfg.semantics is Semantics.JOINT:
        table = _class_table(views[0], records, cfg)
        report = CensusReport(n, parameter, cfg.semantics.value, len(records), table.with_mate, table.class_count)
        return report, table

    first, second = views
    both = [a and b for a, b in zip(_mate_flags(first), _mate_flags(second))]
    # classes: first-invariant mate classes holding at least one graph of the intersection
    classes = len({key for key, flag in zip(first, both) if flag})
    report = CensusReport(n, parameter, cfg.semantics.value, len(records), sum(both), classes)
    return report, None


def census_from_table(table: SignatureTable, cfg: CensusConfig) -> Tuple[CensusReport, Optional[ClassTable]]:
    """Census over precomputed signatures."""
    views = table.key_views(cfg.parameter, cfg.semantics)
    return _report_from_views(table.n, table.records, views, cfg)


def _digest(key: ParamKey) -> bytes:
    return blake2b(key, digest_size=HASH_BYTES).digest()


def _view_keys(row: Tuple[ParamKey, ...], semantics: Semantics) -> List[ParamKey]:
    if semantics is Semantics.SET_INTERSECTION:
        return list(row)
    return [b"".join(row)]


def _run_hashed(stream: GraphStream, cfg: CensusConfig, processor: SignatureProcessor,
                progress: Progress) -> Tuple[CensusReport, Optional[ClassTable]]:
    kinds = _unique(parameter_kinds(cfg.parameter))
    n, records = _collect_records(stream)
    batch = processor.chunk_size * processor.workers * 4

    # pass 1: 128-bit digests only
    digests: List[List[bytes]] = []
    for start in range(0, len(records), batch):
        rows = processor.map_records(signature_rows, records[start:start + batch], kinds, progress=progress)
        for row in rows:
            digests.append([_digest(key) for key in _view_keys(_full_row(row, kinds, cfg), cfg.semantics)])

    view_count = len(digests[0])
    counts = [Counter(d[v] for d in digests) for v in range(view_count)]
    colliding = [i for i, d in enumerate(digests) if any(counts[v][d[v]] >= 2 for v in range(view_count))]
    logger.info(f"Hashed pass 1: {len(colliding):,} of {len(records):,} graphs share a digest")

    # pass 2: exact keys for graphs whose digest is shared
    exact: Dict[int, List[ParamKey]] = {}
    rows = processor.map_records(signature_rows, [records[i] for i in colliding], kinds)
    for i, row in zip(colliding, rows):
        exact[i] = _view_keys(_full_row(row, kinds, cfg), cfg.semantics)

    views: List[List[ParamKey]] = [[] for _ in range(view_count)]
    for i, d in enumerate(digests):
        for v in range(view_count):
            if counts[v][d[v]] >= 2:
                views[v].append(exact[i][v])
            else:
                views[v].append(_HASHED_TAG + d[v])
    return _report_from_views(n, records, views, cfg)


def _full_row(row: Tuple[ParamKey, ...], kinds: List[InvariantKind], cfg: CensusConfig) -> Tuple[ParamKey, ...]:
    """Row in parameter order, repeating a key when both invariants coincide."""
    index = {k: i for i, k in enumerate(kinds)}
    return tuple(row[index[k]] for k in parameter_kinds(cfg.parameter))


def run_census(stream: GraphStream, cfg: CensusConfig,
               processor: Optional[SignatureProcessor] = None,
               progress: Progress = None) -> Tuple[CensusReport, Optional[ClassTable]]:
    """
    Count graphs of the stream that have a mate under cfg.parameter.

    Returns:
        The report and, for joint semantics, the class table
    """
    processor = processor or SignatureProcessor()
    if cfg.hashing_mode is HashingMode.HASHED:
        report, table = _run_hashed(stream, cfg, processor, progress)
    else:
        signatures = build_signature_table(stream, parameter_kinds(cfg.parameter), processor, progress)
        report, table = census_from_table(signatures, cfg)
    logger.info(f"Census n={report.n} {report.parameter} ({report.semantics}): "
                f"{report.with_mate:,}/{report.total:,} graphs with a mate")
    return report, table


def run_joint_census(stream: GraphStream, p: JointParam, semantics: Semantics = Semantics.JOINT,
                     processor: Optional[SignatureProcessor] = None) -> CensusReport:
    """Census for a pair of invariants under the chosen semantics."""
    report, _ = run_census(stream, CensusConfig(p, semantics), processor)
    return report


def extract_mate_classes(table: ClassTable) -> List[List[str]]:
    """Buckets of two or more graphs, members sorted, classes ordered by smallest member."""
    if not table.collect_members:
        raise MembersNotCollected("census ran without member collection; rerun with collect_members")
    classes = [sorted(b.members) for _, b in table.buckets() if b.count >= 2]
    return sorted(classes)
