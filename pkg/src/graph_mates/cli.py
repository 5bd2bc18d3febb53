"""
Command-line interface for the graph mates census engine

CSV goes to standard output; tables, progress and diagnostics go to standard
error, so `census ... > report.csv` captures only the report.
"""

import functools
import logging
import shutil
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import click
from rich.console import Console
from rich.logging import RichHandler
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskProgressColumn, TextColumn
from rich.table import Table

from . import __version__
from .census import (
    CensusConfig, CensusReport, GraphSource, HashingMode, ReportWriter, Semantics,
    all_pairs, build_signature_table, census_from_table, extract_mate_classes,
    pairwise_table, rank_pairs, run_census, uncertainty_series,
)
from .config import Config
from .core import SignatureProcessor
from .errors import CensusConfigError, GraphMatesError, UnknownInvariant
from .graphs import parse_graph6
from .invariants import InvariantKind, JointParam, Parameter, parse_parameter
from .matrices import MatrixKind, build_matrix, char_poly, cokernel_decomposition, snf
from .verification import run_oracle_suite

console = Console(stderr=True)
logger = logging.getLogger(__name__)

TREE_PARAMETERS = [
    'spec:D', 'spec:DL', 'spec:DQ', 'spec:Ddeg', 'spec:DdegPlus', 'spec:Atr', 'spec:AtrPlus',
    'spec:WA', 'spec:WD', 'spec:WQ', 'spec:WDQ', 'spec:WAtr', 'spec:WDdeg',
    'snf:D', 'snf:DL', 'snf:DQ', 'snf:Ddeg', 'snf:DdegPlus', 'snf:Atr', 'snf:AtrPlus',
]

GROUP_NAMES = {
    MatrixKind.A: "Smith group",
    MatrixKind.L: "critical (sandpile) group as torsion part",
}


def setup_logging(level: str):
    logging.basicConfig(
        level=level.upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )


def handle_errors(func):
    """Bad tokens become usage errors (exit 2); data errors print a diagnostic and exit 1."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except UnknownInvariant as e:
            raise click.UsageError(str(e))
        except GraphMatesError as e:
            console.print(f"[red]❌ Error: {e}[/]")
            sys.exit(1)
    return wrapper


def input_options(func):
    func = click.option('--gen', 'gen_spec', help='Generator spec: graphs:N, trees:N or a range like graphs:4-8')(func)
    func = click.option('--input', 'input_path', help='graph6 file, or - for standard input')(func)
    return func


def worker_options(func):
    func = click.option('--quiet', is_flag=True, help='No progress bars or console tables')(func)
    func = click.option('--workers', type=int, help='Worker processes (default: GRAPH_MATES_WORKERS or CPU count)')(func)
    return func


def _sources(input_path: Optional[str], gen_spec: Optional[str]) -> List[GraphSource]:
    if bool(input_path) == bool(gen_spec):
        raise click.UsageError("give exactly one of --input and --gen")
    if gen_spec:
        try:
            return GraphSource.from_spec(gen_spec)
        except CensusConfigError as e:
            raise click.UsageError(str(e))
    if input_path == '-':
        return [GraphSource.from_stdin()]
    return [GraphSource.from_file(input_path)]


def _processor(ctx: click.Context, workers: Optional[int]) -> SignatureProcessor:
    config: Config = ctx.obj['config']
    if workers is not None and workers < 1:
        raise click.UsageError("--workers must be at least 1")
    return SignatureProcessor(workers or config.workers, config.chunk_size)


def _parse_tokens(tokens: Sequence[str]) -> List[InvariantKind]:
    kinds = []
    for token in tokens:
        for part in token.split(','):
            if part.strip():
                kinds.append(InvariantKind.parse(part))
    return kinds


def _with_suffix(path: Path, n: int, many: bool) -> Path:
    return path.with_name(f"{path.stem}_n{n}{path.suffix}") if many else path


class _ProgressSink:
    """Rich progress bar fed by processor callbacks; silent when quiet."""

    def __init__(self, quiet: bool):
        self.quiet = quiet
        self.progress: Optional[Progress] = None

    def __enter__(self):
        if not self.quiet:
            self.progress = Progress(
                SpinnerColumn(),
                TextColumn("[progress.description]{task.description}"),
                BarColumn(),
                TaskProgressColumn(),
                console=console,
                transient=True,
            )
            self.progress.start()
        return self

    def __exit__(self, *exc):
        if self.progress:
            self.progress.stop()

    def task(self, description: str, total: Optional[int]):
        if not self.progress:
            return None
        task_id = self.progress.add_task(description, total=total)
        return lambda done: self.progress.update(task_id, advance=done)


def _run_censuses(ctx, sources: List[GraphSource], parameters: List[Parameter], semantics: Semantics,
                  hashing: Optional[str], mates: Optional[str], output: Optional[str],
                  workers: Optional[int], quiet: bool, title: str):
    config: Config = ctx.obj['config']
    processor = _processor(ctx, workers)
    hashing_mode = HashingMode(hashing or config.hashing_mode)
    collect = mates is not None
    if collect and len(parameters) != 1:
        raise click.UsageError("--mates needs exactly one parameter")
    try:
        configs = [CensusConfig(p, semantics, collect, hashing_mode) for p in parameters]
    except CensusConfigError as e:
        raise click.UsageError(str(e))
    writer = ReportWriter(config.reports_dir, console)

    reports: List[CensusReport] = []
    # generated connected graphs: one signature table per order covers every parameter
    series = not collect and hashing_mode is HashingMode.EXACT and all(s.family == 'graphs' for s in sources)
    with _ProgressSink(quiet) as sink:
        if series:
            orders = [s.order for s in sources]
            advance = sink.task(f"graphs:{orders[0]}-{orders[-1]}", None)
            reports = uncertainty_series(orders, parameters, processor, semantics, advance)
        else:
            for source in sources:
                records = source.materialize()
                for cfg in configs:
                    advance = sink.task(f"{source.name} {cfg.parameter.token}", len(records))
                    report, table = run_census(source, cfg, processor, advance)
                    reports.append(report)
                    if collect:
                        path = _with_suffix(Path(mates), report.n, len(sources) > 1)
                        writer.save_mates(extract_mate_classes(table), path)

    click.echo(writer.csv_text(reports), nl=False)
    if output:
        writer.save_csv(reports, output)
    if not quiet:
        writer.print_reports(reports, title)
    logger.debug(f"Processor stats: {processor.get_performance_stats()}")


@click.group()
@click.version_option(version=__version__, prog_name='graph-mates')
@click.option('--log-level', help='Logging level (default: GRAPH_MATES_LOG_LEVEL or WARNING)')
@click.pass_context
def cli(ctx: click.Context, log_level: Optional[str]):
    """
    Graph Mates: exact census of cospectral and coinvariant graph mates.

    Computes characteristic polynomials and Smith normal forms of twenty
    integer matrices per graph and counts the graphs sharing an invariant.
    """
    config = Config()
    setup_logging(log_level or config.log_level)
    logger.debug(f"Configuration: {config.as_dict()}")
    ctx.ensure_object(dict)
    ctx.obj['config'] = config


@cli.command()
def setup():
    """Create config/config.env from the template."""
    config_dir = Path('config')
    config_file = config_dir / 'config.env'
    template_file = config_dir / 'config_template.env'

    if config_file.exists():
        console.print(f"[yellow]Configuration file already exists: {config_file}[/]")
        return
    if not template_file.exists():
        console.print("[red]❌ Template file not found. Expected config/config_template.env[/]")
        sys.exit(1)
    shutil.copyfile(template_file, config_file)
    console.print(f"[green]✅ Created {config_file}[/] - edit it to change workers, reports directory or hashing mode")


@cli.command()
@input_options
@click.option('--param', 'params', multiple=True, required=True,
              help='Invariant such as spec:A or snf:DL; a joint pair as spec:WA+snf:D. Repeatable.')
@click.option('--semantics', type=click.Choice([s.value for s in Semantics]), default='joint')
@click.option('--hashing', type=click.Choice([m.value for m in HashingMode]), help='Bucket by exact keys or by digests')
@click.option('--mates', help='Write mate classes (one per line) to this file')
@click.option('--output', help='Also write the CSV report to this file')
@worker_options
@click.pass_context
@handle_errors
def census(ctx, input_path, gen_spec, params, semantics, hashing, mates, output, workers, quiet):
    """Count graphs with a mate under each parameter."""
    sources = _sources(input_path, gen_spec)
    parameters = [parse_parameter([token]) for token in params]
    _run_censuses(ctx, sources, parameters, Semantics(semantics), hashing, mates, output,
                  workers, quiet, "Mate census")


@cli.command('pair-census')
@input_options
@click.option('--param', 'params', multiple=True, required=True, help='Give exactly two invariants')
@click.option('--semantics', type=click.Choice([s.value for s in Semantics]), default='joint')
@click.option('--hashing', type=click.Choice([m.value for m in HashingMode]))
@click.option('--mates', help='Write mate classes (one per line) to this file')
@click.option('--output', help='Also write the CSV report to this file')
@worker_options
@click.pass_context
@handle_errors
def pair_census(ctx, input_path, gen_spec, params, semantics, hashing, mates, output, workers, quiet):
    """Count graphs with a mate matching two invariants."""
    sources = _sources(input_path, gen_spec)
    parameter = parse_parameter(params)
    if not isinstance(parameter, JointParam):
        raise click.UsageError("pair-census needs two invariants")
    _run_censuses(ctx, sources, [parameter], Semantics(semantics), hashing, mates, output,
                  workers, quiet, "Joint mate census")


@cli.command()
@input_options
@click.option('--rows', 'row_tokens', multiple=True, help='Row invariants (repeatable or comma-separated; default all 40)')
@click.option('--cols', 'col_tokens', multiple=True, help='Column invariants (default: same as rows)')
@click.option('--semantics', type=click.Choice([s.value for s in Semantics]), default='joint')
@click.option('--top', type=int, help='Instead of the grid, rank the K pairs with the fewest mates')
@click.option('--output', help='Also write the table to this file')
@worker_options
@click.pass_context
@handle_errors
def table(ctx, input_path, gen_spec, row_tokens, col_tokens, semantics, top, output, workers, quiet):
    """Joint-census grid over row x column invariants."""
    config: Config = ctx.obj['config']
    sources = _sources(input_path, gen_spec)
    if len(sources) != 1:
        raise click.UsageError("table works on a single order")
    rows = _parse_tokens(row_tokens) or InvariantKind.all()
    cols = _parse_tokens(col_tokens) or rows
    chosen = Semantics(semantics)
    processor = _processor(ctx, workers)
    writer = ReportWriter(config.reports_dir, console)
    source = sources[0]

    with _ProgressSink(quiet) as sink:
        records = source.materialize()
        advance = sink.task(f"Signatures for {source.name}", len(records))
        signatures = build_signature_table(source, list(rows) + list(cols), processor, advance)

    if top is not None:
        if top < 1:
            raise click.UsageError("--top must be positive")
        candidates = all_pairs(list(dict.fromkeys(list(rows) + list(cols))))
        reports = rank_pairs(signatures, candidates, top, chosen)
        click.echo(writer.csv_text(reports), nl=False)
        if output:
            writer.save_csv(reports, output)
        if not quiet:
            writer.print_reports(reports, f"Best {top} joint parameters, n={signatures.n}")
        return

    frame = pairwise_table(signatures, rows, cols, chosen)
    click.echo(frame.to_csv(lineterminator='\n'), nl=False)
    if output:
        writer.save_frame(frame, output)
    if not quiet:
        writer.print_frame(frame, f"Graphs with a joint mate, n={signatures.n} ({chosen.value})")


@cli.command()
@click.option('--orders', default='1-14', show_default=True, help='Tree orders, N or a range A-B')
@click.option('--param', 'params', multiple=True, help='Invariants (default: the distance-type tree parameters)')
@click.option('--output', help='Also write the CSV report to this file')
@worker_options
@click.pass_context
@handle_errors
def trees(ctx, orders, params, output, workers, quiet):
    """Single-invariant censuses over all free trees of each order."""
    try:
        sources = GraphSource.from_spec(f"trees:{orders}")
    except CensusConfigError as e:
        raise click.UsageError(str(e))
    parameters = [parse_parameter([token]) for token in (params or TREE_PARAMETERS)]
    _run_censuses(ctx, sources, parameters, Semantics.JOINT, None, None, output,
                  workers, quiet, "Tree mate census")


@cli.command()
@click.argument('spec')
@click.option('--output', help='Write graph6 lines to this file instead of standard output')
@handle_errors
def gen(spec, output):
    """Emit graph6 records of a generator spec such as graphs:7 or trees:10."""
    try:
        sources = GraphSource.from_spec(spec)
    except CensusConfigError as e:
        raise click.UsageError(str(e))
    lines = [record + "\n" for source in sources for record in source.records()]
    if output:
        Path(output).write_text("".join(lines), encoding='ascii')
        console.print(f"[green]✅ Wrote {len(lines):,} graphs to {output}[/]")
    else:
        click.echo("".join(lines), nl=False)


@cli.command()
@click.option('--kind', required=True, help='Matrix name, e.g. A, DL, WDdegPlus')
@click.option('--graph6', 'record', required=True, help='graph6 record of the graph')
@handle_errors
def matrix(kind, record):
    """Print one matrix of a graph with its char poly, SNF and cokernel."""
    matrix_kind = MatrixKind.parse(kind)
    g = parse_graph6(record)
    m = build_matrix(matrix_kind, g)
    result = snf(m)
    cokernel = cokernel_decomposition(result)

    click.echo(f"# {matrix_kind.label} of {record} (n={g.order}, {g.edge_count} edges)")
    click.echo(m.dump())
    click.echo(f"charpoly: {' '.join(str(c) for c in char_poly(m).coeffs)}")
    click.echo(f"charpoly_text: {char_poly(m)}")
    click.echo(f"snf: {' '.join(str(f) for f in result.factors)}")
    click.echo(f"rank: {result.rank}")
    click.echo(f"cokernel: {cokernel}")
    if matrix_kind in GROUP_NAMES:
        click.echo(f"group: {GROUP_NAMES[matrix_kind]}")


@cli.command()
@click.option('--max-order', default=6, show_default=True, type=click.IntRange(1, 8), help='Largest order of the test corpus')
@click.option('--minor-order', default=4, show_default=True, type=click.IntRange(1, 8), help='Largest order for the minors check')
@click.option('--samples', default=100, show_default=True, help='Random relabellings to test')
@click.option('--seed', default=0, show_default=True)
@handle_errors
def verify(max_order, minor_order, samples, seed):
    """Run the cross-algorithm oracle suite; exit 1 on any violation."""
    results = run_oracle_suite(max_order, min(minor_order, max_order), samples, seed)

    result_table = Table(title="Oracle suite", show_header=True, header_style="bold magenta")
    result_table.add_column("Check", style="cyan")
    result_table.add_column("Status")
    result_table.add_column("Checked", justify="right")
    result_table.add_column("Detail")
    for r in results:
        result_table.add_row(r.name, r.status, f"{r.checked:,}", r.message)
    console.print(result_table)

    if not all(r.ok for r in results):
        console.print("[red]❌ Verification failed[/]")
        sys.exit(1)
    console.print("[green]✅ All checks passed[/]")


if __name__ == '__main__':
    cli()
