"""
Replayable graph sources.

A source yields graph6 records (str, no header, no newline) and can be read
any number of times: files are reopened, standard input is read once and
kept in memory, generators are rerun.
"""

import logging
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, List, Optional, Tuple

from ..errors import CensusConfigError
from ..generators import gen_connected_graphs, gen_trees
from ..graphs.graph import Graph
from ..graphs.graph6 import HEADER, to_graph6_str

logger = logging.getLogger(__name__)

_GENERATOR_SPEC = re.compile(r'^(graphs|trees):(\d+)(?:-(\d+))?$')
_HEADER_TEXT = HEADER.decode('ascii')


def _clean(line: str) -> Optional[str]:
    record = line.strip()
    if record.startswith(_HEADER_TEXT):
        record = record[len(_HEADER_TEXT):]
    return record or None


def parse_generator_spec(text: str) -> Tuple[str, List[int]]:
    """`graphs:6` -> ('graphs', [6]); `trees:9-13` -> ('trees', [9, ..., 13])."""
    match = _GENERATOR_SPEC.match(text.strip().lower())
    if not match:
        raise CensusConfigError(f"invalid generator spec {text!r}; expected graphs:N, trees:N or a range like graphs:4-8")
    family, low, high = match.group(1), int(match.group(2)), match.group(3)
    high = int(high) if high else low
    if low < 1 or high < low:
        raise CensusConfigError(f"invalid order range in {text!r}")
    return family, list(range(low, high + 1))


@dataclass
class GraphSource:
    """
    Replayable stream of graph6 records.

    Exactly one of path, stored or (family, order) is set.
    """
    name: str
    path: Optional[Path] = None
    family: Optional[str] = None
    order: Optional[int] = None
    stored: Optional[List[str]] = field(default=None, repr=False)

    @classmethod
    def from_file(cls, path) -> 'GraphSource':
        path = Path(path)
        if not path.exists():
            raise CensusConfigError(f"input file not found: {path}")
        return cls(name=str(path), path=path)

    @classmethod
    def from_stdin(cls) -> 'GraphSource':
        records = [r for r in (_clean(line) for line in sys.stdin) if r]
        logger.info(f"Read {len(records):,} records from standard input")
        return cls(name="-", stored=records)

    @classmethod
    def generated(cls, family: str, order: int) -> 'GraphSource':
        if family not in ("graphs", "trees"):
            raise CensusConfigError(f"unknown generator family {family!r}")
        return cls(name=f"{family}:{order}", family=family, order=order)

    @classmethod
    def from_spec(cls, text: str) -> List['GraphSource']:
        """One source per order of a generator spec."""
        family, orders = parse_generator_spec(text)
        return [cls.generated(family, n) for n in orders]

    def records(self) -> Iterator[str]:
        if self.stored is not None:
            yield from self.stored
        elif self.path is not None:
            with open(self.path, 'r', encoding='ascii') as handle:
                for line in handle:
                    record = _clean(line)
                    if record:
                        yield record
        else:
            yield from (to_graph6_str(g) for g in self._generate())

    def materialize(self) -> List[str]:
        """Keep the records in memory so replays skip regeneration."""
        if self.stored is None:
            self.stored = list(self.records())
        return self.stored

    def _generate(self) -> Iterator[Graph]:
        if self.family == "graphs":
            return gen_connected_graphs(self.order)
        return gen_trees(self.order)
