"""
Process-pool batch processor for per-graph signature work.

Records are cut into fixed-size chunks and mapped over a
ProcessPoolExecutor; results come back in submission order, so every
downstream merge sees the same sequence for any worker count.
"""

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Dict, List, Optional, Sequence

logger = logging.getLogger(__name__)


class SignatureProcessor:
    """Maps a picklable chunk function over graph6 records with a worker pool."""

    def __init__(self, workers: Optional[int] = None, chunk_size: int = 256):
        self.workers = max(1, workers or os.cpu_count() or 1)
        self.chunk_size = max(1, chunk_size)
        self.stats = {
            'calls': 0,
            'chunks': 0,
            'records': 0,
            'elapsed_seconds': 0.0,
        }

    def _chunks(self, records: Sequence[str]) -> List[Sequence[str]]:
        return [records[i:i + self.chunk_size] for i in range(0, len(records), self.chunk_size)]

    def map_records(self, func: Callable[..., List[Any]], records: Sequence[str], *args,
                    progress: Optional[Callable[[int], None]] = None) -> List[Any]:
        """
        Apply func(chunk, *args) to every chunk and concatenate the results.

        Args:
            func: top-level function returning one result per record
            records: graph6 records
            progress: called with the number of records finished after each chunk

        Returns:
            Results aligned with records
        """
        start = time.time()
        chunks = self._chunks(records)
        results: List[Any] = []

        if self.workers == 1 or len(chunks) <= 1:
            for chunk in chunks:
                results.extend(func(chunk, *args))
                if progress:
                    progress(len(chunk))
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                futures = [executor.submit(func, chunk, *args) for chunk in chunks]
                for chunk, future in zip(chunks, futures):
                    # result() re-raises the worker's exception here
                    results.extend(future.result())
                    if progress:
                        progress(len(chunk))

        elapsed = time.time() - start
        self.stats['calls'] += 1
        self.stats['chunks'] += len(chunks)
        self.stats['records'] += len(records)
        self.stats['elapsed_seconds'] += elapsed
        logger.debug(f"Processed {len(records):,} records in {len(chunks)} chunks with "
                     f"{self.workers} workers ({elapsed:.2f}s)")
        return results

    def get_performance_stats(self) -> Dict[str, Any]:
        """Totals over every map_records call."""
        elapsed = self.stats['elapsed_seconds']
        return {
            **self.stats,
            'workers': self.workers,
            'chunk_size': self.chunk_size,
            'records_per_second': self.stats['records'] / elapsed if elapsed > 0 else 0.0,
        }
