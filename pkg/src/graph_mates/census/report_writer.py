"""
Census report output.

CSV reports and mate files are written byte-for-byte deterministically;
rich tables are rendered for the console.
"""

import logging
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Union

import pandas as pd
from rich.console import Console
from rich.table import Table

from .engine import CensusReport

logger = logging.getLogger(__name__)

CSV_COLUMNS = ['n', 'parameter', 'semantics', 'total', 'with_mate', 'classes', 'uncertainty']


class ReportWriter:
    """
    Writes census results as CSV, mate files and console tables.

    Args:
        output_dir: directory for relative output paths
    """

    def __init__(self, output_dir: Union[str, Path] = "reports", console: Optional[Console] = None):
        self.output_dir = Path(output_dir)
        self.console = console or Console(stderr=True)

    def _resolve(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        if not path.is_absolute() and path.parent == Path('.'):
            path = self.output_dir / path
        path.parent.mkdir(parents=True, exist_ok=True)
        return path

    @staticmethod
    def reports_frame(reports: Iterable[CensusReport]) -> pd.DataFrame:
        return pd.DataFrame([r.as_row() for r in reports], columns=CSV_COLUMNS)

    def csv_text(self, reports: Iterable[CensusReport]) -> str:
        return self.reports_frame(reports).to_csv(index=False, lineterminator='\n')

    def save_csv(self, reports: Iterable[CensusReport], path: Union[str, Path]) -> Path:
        target = self._resolve(path)
        target.write_text(self.csv_text(reports), encoding='ascii')
        logger.info(f"Wrote CSV report to {target}")
        return target

    @staticmethod
    def mate_lines(classes: Sequence[Sequence[str]]) -> str:
        """One class per line, members separated by single spaces."""
        return "".join(" ".join(members) + "\n" for members in classes)

    def save_mates(self, classes: Sequence[Sequence[str]], path: Union[str, Path]) -> Path:
        target = self._resolve(path)
        target.write_text(self.mate_lines(classes), encoding='ascii')
        logger.info(f"Wrote {len(classes):,} mate classes to {target}")
        return target

    def save_frame(self, frame: pd.DataFrame, path: Union[str, Path]) -> Path:
        target = self._resolve(path)
        target.write_text(frame.to_csv(lineterminator='\n'), encoding='ascii')
        logger.info(f"Wrote table to {target}")
        return target

    def print_reports(self, reports: List[CensusReport], title: str = "Census"):
        table = Table(title=title, show_header=True, header_style="bold magenta")
        table.add_column("n", justify="right")
        table.add_column("Parameter", style="cyan")
        table.add_column("Semantics")
        table.add_column("Graphs", justify="right")
        table.add_column("With mate", justify="right", style="green")
        table.add_column("Classes", justify="right")
        table.add_column("Fraction", justify="right")
        table.add_column("Uncertainty", justify="right", style="yellow")
        for r in reports:
            table.add_row(
                str(r.n), r.parameter, r.semantics, f"{r.total:,}", f"{r.with_mate:,}",
                f"{r.classes:,}", str(r.uncertainty), r.uncertainty_decimal,
            )
        self.console.print(table)

    def print_frame(self, frame: pd.DataFrame, title: str):
        table = Table(title=title, show_header=True, header_style="bold magenta")
        table.add_column("", style="cyan")
        for column in frame.columns:
            table.add_column(str(column), justify="right")
        for index, row in frame.iterrows():
            table.add_row(str(index), *(f"{int(x):,}" for x in row))
        self.console.print(table)
