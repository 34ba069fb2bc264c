#----------------------------------------------------------------------------#
# Imports
#----------------------------------------------------------------------------#

import csv
import logging
import os
import sys
from functools import wraps
from logging import FileHandler, Formatter, StreamHandler

import click

from . import create_config
from .apsp_bfs import bfs_apsp
from .apsp_pst import pst_apsp
from .errors import (ApspError, InvalidConfig, MatrixTooLarge, ReportIOError,
                     VerificationFailed)
from .forms import FAMILIES
from .graph_model import (HYPERCUBE, SCALE_FREE, GenSpec, degree_summary,
                          generate, load_edge_list, save_edge_list)
from .matrices import NO_PARENT, NOT_SEARCHED, UNREACHED
from .metrics_bench import (FORMATS, BenchConfig, compare_with_reference,
                            emit_report, full_grid, render_decimal,
                            run_benchmark)
from .oracle import first_divergence, floyd_warshall, verify_parents

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s %(levelname)s: %(message)s [in %(pathname)s:%(lineno)d]'
KINDS = {'hypercube': HYPERCUBE, 'scale-free': SCALE_FREE}
RUNNERS = {'pst': pst_apsp, 'bfs': bfs_apsp}


#----------------------------------------------------------------------------#
# Logging and error handling.
#----------------------------------------------------------------------------#

def configure_logging(settings):
    package_logger = logging.getLogger('pst_apsp')
    package_logger.handlers.clear()
    level = logging.DEBUG if settings['DEBUG'] else \
        getattr(logging, str(settings['LOG_LEVEL']).upper(), logging.WARNING)
    package_logger.setLevel(level)

    stream_handler = StreamHandler(sys.stderr)
    stream_handler.setFormatter(Formatter(LOG_FORMAT))
    package_logger.addHandler(stream_handler)
    if settings['LOG_FILE']:
        file_handler = FileHandler(settings['LOG_FILE'])
        file_handler.setFormatter(Formatter(LOG_FORMAT))
        file_handler.setLevel(level)
        package_logger.addHandler(file_handler)


'''
handles_errors(f)
    turns an ApspError raised by a command into a one-line message on stderr
    and the error's exit code
'''
def handles_errors(f):
    @wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ApspError as error:
            logger.debug('%s failed: %s', f.__name__, error.error)
            click.echo(f'error: {error.description}', err=True)
            for line in getattr(error, 'diagnostics', ()):
                click.echo(f'  {line}', err=True)
            raise click.exceptions.Exit(error.exit_code)
    return wrapper


def _output_path(settings, path, default_name):
    if path:
        return path
    return os.path.join(settings['OUTPUT_DIR'], default_name)


def _parse_csv_option(value, cast=str):
    try:
        return [cast(part.strip()) for part in value.split(',')
                if part.strip()]
    except ValueError:
        raise click.BadParameter(f'{value!r} is not a comma-separated list.')


#----------------------------------------------------------------------------#
# Commands.
#----------------------------------------------------------------------------#

@click.group()
@click.option('--debug/--no-debug', default=None,
              help='Log at DEBUG level.')
@click.pass_context
def cli(ctx, debug):
    '''All-pairs shortest paths by pruning with shortest path trees.'''
    settings = create_config()
    if debug is not None:
        settings['DEBUG'] = debug
    configure_logging(settings)
    ctx.obj = settings


#  Generate
#  ----------------------------------------------------------------
@cli.command('generate')
@click.option('--kind', type=click.Choice(sorted(KINDS)), required=True)
@click.option('--n', 'n', type=int, required=True, help='Vertex count.')
@click.option('--n-prime', type=int, default=None,
              help='Seed clique size (scale-free only).')
@click.option('--seed', type=int, default=0, show_default=True,
              help='RNG seed (scale-free only).')
@click.option('--out', type=click.Path(dir_okay=False), default=None,
              help='Edge-list file; defaults to OUTPUT_DIR/<kind>-<n>.el.')
@click.pass_obj
@handles_errors
def generate_cmd(settings, kind, n, n_prime, seed, out):
    '''Write a generated graph as an edge list.'''
    spec = GenSpec(KINDS[kind], n, n_prime, seed)
    graph = generate(spec)
    path = _output_path(settings, out, f'{kind}-{n}.el')
    try:
        save_edge_list(graph, path)
    except OSError as ex:
        raise ReportIOError(path, ex.strerror or str(ex))
    low, average, high = degree_summary(graph)
    click.echo(f'wrote {path}')
    click.echo(f'n={graph.n} m={graph.m} degree min/avg/max='
               f'{low}/{average:.2f}/{high}')


#  Run
#  ----------------------------------------------------------------
def write_matrix_csv(path, matrix, sentinels):
    '''
    write_matrix_csv(path, matrix, sentinels)
        one CSV line per matrix row; sentinel values are replaced by the
        strings in `sentinels`
    '''
    try:
        with open(path, 'w', newline='', encoding='ascii') as handle:
            writer = csv.writer(handle, lineterminator='\n')
            for row in matrix.tolist():
                writer.writerow([sentinels.get(value, value) for value in row])
    except OSError as ex:
        raise ReportIOError(path, ex.strerror or str(ex))


@cli.command()
@click.option('--algo', type=click.Choice(sorted(RUNNERS)), required=True)
@click.option('--graph', 'graph_path', required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option('--out-dist', type=click.Path(dir_okay=False), default=None,
              help='Distance matrix CSV (UNREACHED written as "inf").')
@click.option('--out-parents', type=click.Path(dir_okay=False), default=None,
              help='Parent matrix CSV (NO_PARENT "-", NOT_SEARCHED "?").')
@click.option('--force', is_flag=True,
              help='Allow matrix CSVs above MATRIX_CSV_MAX_N.')
@click.pass_obj
@handles_errors
def run(settings, algo, graph_path, out_dist, out_parents, force):
    '''Run one algorithm on an edge-list file and print its counters.'''
    graph = load_edge_list(graph_path)
    limit = settings['MATRIX_CSV_MAX_N']
    if (out_dist or out_parents) and graph.n > limit and not force:
        raise MatrixTooLarge(graph.n, limit)

    result = RUNNERS[algo](graph)
    stats = result.stats
    click.echo(f'algorithm: {algo}')
    click.echo(f'n: {graph.n}  m: {graph.m}')
    click.echo(f'accesses: {stats.accesses}')
    click.echo(f'alpha: {render_decimal(stats.alpha)}')
    click.echo(f'time_main_s: {result.time_main:.6f}')
    click.echo(f'time_init_s: {result.time_init:.6f}')
    if algo == 'pst':
        click.echo(f't-vertices: {result.tree_nodes}  '
                   f'pool bytes: {result.pool_bytes}')

    if out_dist:
        write_matrix_csv(out_dist, result.distances, {UNREACHED: 'inf'})
    if out_parents:
        write_matrix_csv(out_parents, result.parents,
                         {NO_PARENT: '-', NOT_SEARCHED: '?'})


#  Verify
#  ----------------------------------------------------------------
@cli.command()
@click.option('--graph', 'graph_path', required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.pass_obj
@handles_errors
def verify(settings, graph_path):
    '''Check PST and BFS against Floyd-Warshall and validate both trees.'''
    graph = load_edge_list(graph_path)
    limit = settings['ORACLE_MAX_N']
    if graph.n > limit:
        raise click.UsageError(
            f'graph has {graph.n} vertices; the oracle limit is {limit}.')

    reference = floyd_warshall(graph)
    results = {'bfs': bfs_apsp(graph), 'pst': pst_apsp(graph)}
    failures = []
    for name, result in results.items():
        divergence = first_divergence(reference, result.distances)
        if divergence is not None:
            failures.append(
                f'{name} distance: source {divergence.source}, vertex '
                f'{divergence.vertex}, expected {divergence.expected}, '
                f'actual {divergence.actual}')
        violations = verify_parents(graph, result.distances, result.parents)
        failures += [f'{name} parents: {v}' for v in violations[:10]]
    divergence = first_divergence(results['bfs'].distances,
                                  results['pst'].distances)
    if divergence is not None:
        failures.append(
            f'bfs/pst distance: source {divergence.source}, vertex '
            f'{divergence.vertex}, bfs {divergence.expected}, '
            f'pst {divergence.actual}')

    if failures:
        click.echo('FAIL')
        raise VerificationFailed(f'{len(failures)} check(s) failed.', failures)
    click.echo('PASS')


#  Bench
#  ----------------------------------------------------------------
def bench_settings(settings, config_file):
    if config_file:
        try:
            settings.from_pyfile(os.path.abspath(config_file))
        except (OSError, SyntaxError, NameError) as ex:
            raise InvalidConfig({'config': [f'{config_file}: {ex}']})
    return settings


@cli.command()
@click.option('--config', 'config_file',
              type=click.Path(exists=True, dir_okay=False),
              help='KEY = value settings file (FAMILY, SIZES, ...). '
                   'It is executed as Python; only load trusted files.')
@click.option('--family', type=click.Choice(FAMILIES), default=None)
@click.option('--sizes', default=None, help='Comma-separated n values.')
@click.option('--algorithms', default=None,
              help='Comma-separated subset of pst,bfs.')
@click.option('--repetitions', type=int, default=None)
@click.option('--seed', type=int, default=None)
@click.option('--verify/--no-verify', default=None)
@click.option('--format', 'fmt', type=click.Choice(FORMATS), default=None)
@click.option('--out', type=click.Path(dir_okay=False), default=None,
              help='Report file; stdout when omitted.')
@click.option('--paper-grid', is_flag=True,
              help='Run the published grid: all three families at '
                   'n = 64, 256, 1024, 4096.')
@click.pass_obj
@handles_errors
def bench(settings, config_file, family, sizes, algorithms, repetitions, seed,
          verify, fmt, out, paper_grid):
    '''Benchmark PST against BFS and emit a report.'''
    settings = bench_settings(settings, config_file)
    overrides = {
        'FAMILY': family,
        'SIZES': sizes and _parse_csv_option(sizes, int),
        'ALGORITHMS': algorithms and _parse_csv_option(algorithms),
        'REPETITIONS': repetitions,
        'SEED': seed,
        'VERIFY': verify,
        'FORMAT': fmt,
    }
    settings.update({k: v for k, v in overrides.items() if v is not None})

    if paper_grid:
        configs = full_grid(settings['SEED'], settings['REPETITIONS'],
                             settings['VERIFY'], settings['VERIFY_CUTOFF'])
    else:
        configs = [BenchConfig.from_mapping({
            'family': settings['FAMILY'],
            'sizes': list(settings['SIZES']),
            'algorithms': list(settings['ALGORITHMS']),
            'repetitions': settings['REPETITIONS'],
            'seed': settings['SEED'],
            'verify': settings['VERIFY'],
            'verify_cutoff': settings['VERIFY_CUTOFF'],
        })]

    rows = []
    for cfg in configs:
        logger.info('bench %s sizes=%s algorithms=%s', cfg.family,
                    cfg.sizes, cfg.algorithms)
        rows += run_benchmark(cfg)
    for deviation in compare_with_reference(rows):
        logger.warning('outside published tolerance: %s', deviation)
    emit_report(rows, settings['FORMAT'], out)
