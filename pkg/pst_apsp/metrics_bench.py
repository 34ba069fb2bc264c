"""Benchmark harness: algorithm x graph family x size, access counts, α and
wall-times, rendered as CSV, JSON or markdown tables."""
import csv
import io
import json
import logging
import math
import sys
from collections import OrderedDict
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from babel.numbers import format_decimal

from .apsp_bfs import bfs_apsp
from .apsp_pst import pst_apsp
from .errors import (EmptyReport, InvalidConfig, ReportIOError,
                     VerificationFailed)
from .forms import ALGORITHMS, FAMILIES, BenchConfigForm
from .graph_model import HYPERCUBE, SCALE_FREE, GenSpec, Graph, generate
from .matrices import AccessStats, ApspResult
from .oracle import first_divergence, floyd_warshall, verify_parents

logger = logging.getLogger(__name__)

RUNNERS = {
    'pst': pst_apsp,
    'bfs': bfs_apsp,
}

FORMATS = ('csv', 'json', 'markdown-table')
COLUMNS = ('family', 'n', 'n_prime', 'algorithm', 'time_main_s',
           'time_init_s', 'accesses', 'alpha', 'ratio')
GRID_SIZES = (64, 256, 1024, 4096)

# Published α values per family and n: (PST, BFS).
PUBLISHED_ALPHA = {
    'hypercube': {
        64: (Decimal('1.71'), Decimal('5.42')),
        256: (Decimal('1.60'), Decimal('7.75')),
        1024: (Decimal('1.54'), Decimal('9.90')),
        4096: (Decimal('1.52'), Decimal('11.96')),
    },
    'scale-free-sparse': {
        64: (Decimal('1.38'), Decimal('3.15')),
        256: (Decimal('1.25'), Decimal('3.53')),
        1024: (Decimal('1.21'), Decimal('3.71')),
        4096: (Decimal('1.19'), Decimal('3.88')),
    },
    'scale-free-dense': {
        64: (Decimal('3.50'), Decimal('4.58')),
        256: (Decimal('4.47'), Decimal('7.52')),
        1024: (Decimal('5.36'), Decimal('10.02')),
        4096: (Decimal('6.23'), Decimal('12.12')),
    },
}
# Relative tolerance around PUBLISHED_ALPHA, per family.
TOLERANCE = {
    'hypercube': Decimal('0.10'),
    'scale-free-sparse': Decimal('0.20'),
    'scale-free-dense': Decimal('0.25'),
}


@dataclass(frozen=True)
class BenchConfig:
    family: str
    sizes: Tuple[int, ...]
    algorithms: Tuple[str, ...] = ALGORITHMS
    repetitions: int = 1
    seed: int = 1
    verify: bool = False
    verify_cutoff: int = 512

    @classmethod
    def from_mapping(cls, mapping: Mapping) -> 'BenchConfig':
        form = BenchConfigForm(data=dict(mapping))
        if not form.validate():
            raise InvalidConfig(form.errors)
        return cls(family=form.family.data,
                   sizes=tuple(form.sizes.data),
                   algorithms=tuple(a for a in ALGORITHMS
                                    if a in form.algorithms.data),
                   repetitions=form.repetitions.data,
                   seed=form.seed.data,
                   verify=form.verify.data,
                   verify_cutoff=form.verify_cutoff.data)


@dataclass(frozen=True)
class BenchRow:
    family: str
    n: int
    n_prime: Optional[int]
    algorithm: str
    time_main_s: float
    time_init_s: float
    accesses: int
    alpha: Fraction
    ratio: Optional[Fraction] = None


@dataclass
class _Measurement:
    result: ApspResult
    main_times: List[float] = field(default_factory=list)
    init_times: List[float] = field(default_factory=list)


def alpha(stats: AccessStats) -> Fraction:
    return Fraction(stats.accesses, stats.n * stats.n)


def render_decimal(value, digits: int = 2) -> str:
    if isinstance(value, Fraction):
        value = Decimal(value.numerator) / Decimal(value.denominator)
    pattern = '0.' + '0' * digits if digits else '0'
    return format_decimal(value, format=pattern, locale='en_US')


def graph_spec(family: str, n: int, seed: int) -> GenSpec:
    if family == 'hypercube':
        return GenSpec(HYPERCUBE, n)
    if family == 'scale-free-sparse':
        return GenSpec(SCALE_FREE, n, 2, seed)
    if family == 'scale-free-dense':
        return GenSpec(SCALE_FREE, n, round(math.sqrt(n)), seed)
    raise InvalidConfig({'family': [f'unknown family {family!r}']})


def full_grid(seed: int = 1, repetitions: int = 1, verify: bool = False,
               verify_cutoff: int = 512) -> List[BenchConfig]:
    return [BenchConfig(family, GRID_SIZES, ALGORITHMS, repetitions, seed,
                        verify, verify_cutoff)
            for family in FAMILIES]


def _measure(name: str, graph: Graph, repetitions: int) -> _Measurement:
    runner = RUNNERS[name]
    first = runner(graph)
    measurement = _Measurement(first, [first.time_main], [first.time_init])
    for _ in range(repetitions - 1):
        again = runner(graph)
        if again.stats.accesses != first.stats.accesses:
            raise VerificationFailed(
                f'{name} access count changed between repetitions '
                f'({first.stats.accesses} != {again.stats.accesses}).')
        measurement.main_times.append(again.time_main)
        measurement.init_times.append(again.time_init)
    return measurement


def verify_results(graph: Graph, results: Dict[str, ApspResult],
                   oracle_cutoff: int) -> None:
    if 'pst' in results and 'bfs' in results:
        divergence = first_divergence(results['bfs'].distances,
                                      results['pst'].distances)
        if divergence is not None:
            raise VerificationFailed('pst and bfs distances differ.',
                                     [divergence])
    if graph.n > oracle_cutoff:
        return
    reference = floyd_warshall(graph)
    for name, result in results.items():
        divergence = first_divergence(reference, result.distances)
        if divergence is not None:
            raise VerificationFailed(
                f'{name} distances differ from Floyd-Warshall.', [divergence])
        violations = verify_parents(graph, result.distances, result.parents)
        if violations:
            raise VerificationFailed(
                f'{name} parent matrix has {len(violations)} violations.',
                violations[:10])
    logger.info('n=%d verified against Floyd-Warshall', graph.n)


def run_benchmark(cfg: BenchConfig) -> List[BenchRow]:
    rows = []
    for n in cfg.sizes:
        spec = graph_spec(cfg.family, n, cfg.seed)
        graph = generate(spec)
        logger.info('%s n=%d n_prime=%s: m=%d', cfg.family, n, spec.n_prime,
                    graph.m)
        measurements = {name: _measure(name, graph, cfg.repetitions)
                        for name in cfg.algorithms}
        if cfg.verify:
            verify_results(graph, {name: m.result
                                   for name, m in measurements.items()},
                           cfg.verify_cutoff)

        alphas = {name: alpha(m.result.stats)
                  for name, m in measurements.items()}
        for name, measurement in measurements.items():
            ratio = None
            if name == 'bfs' and alphas.get('pst'):
                ratio = alphas['bfs'] / alphas['pst']
            rows.append(BenchRow(
                family=cfg.family,
                n=n,
                n_prime=spec.n_prime,
                algorithm=name,
                time_main_s=float(np.median(measurement.main_times)),
                time_init_s=float(np.median(measurement.init_times)),
                accesses=measurement.result.stats.accesses,
                alpha=alphas[name],
                ratio=ratio,
            ))
        del measurements
    return rows


def compare_with_reference(rows: Sequence[BenchRow]) -> List[str]:
    """Rows whose α lies outside the family's tolerance around the
    published value."""
    deviations = []
    for row in rows:
        published = PUBLISHED_ALPHA.get(row.family, {}).get(row.n)
        if published is None:
            continue
        expected = published[0 if row.algorithm == 'pst' else 1]
        measured = Decimal(row.alpha.numerator) / Decimal(row.alpha.denominator)
        if abs(measured - expected) > expected * TOLERANCE[row.family]:
            deviations.append(
                f'{row.family} n={row.n} {row.algorithm}: alpha '
                f'{render_decimal(measured)} vs published {expected}')
    return deviations


## Report rendering

def _csv_values(row: BenchRow) -> List[str]:
    return [
        row.family,
        str(row.n),
        '' if row.n_prime is None else str(row.n_prime),
        row.algorithm,
        render_decimal(Decimal(repr(row.time_main_s)), 6),
        render_decimal(Decimal(repr(row.time_init_s)), 6),
        str(row.accesses),
        render_decimal(row.alpha),
        '' if row.ratio is None else render_decimal(row.ratio),
    ]


def render_csv(rows: Sequence[BenchRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow(_csv_values(row))
    return buffer.getvalue()


def render_json(rows: Sequence[BenchRow]) -> str:
    objects = []
    for row in rows:
        objects.append({
            'family': row.family,
            'n': row.n,
            'n_prime': row.n_prime,
            'algorithm': row.algorithm,
            'time_main_s': round(row.time_main_s, 6),
            'time_init_s': round(row.time_init_s, 6),
            'accesses': row.accesses,
            'alpha': float(render_decimal(row.alpha)),
            'ratio': None if row.ratio is None
            else float(render_decimal(row.ratio)),
        })
    return json.dumps(objects, indent=2) + '\n'


def _family_title(family: str) -> str:
    if family == 'scale-free-sparse':
        return "scale-free graphs, sparse (n' = 2)"
    if family == 'scale-free-dense':
        return "scale-free graphs, dense (n' = sqrt(n))"
    return 'hypercube-shaped graphs'


def _time_cell(row: Optional[BenchRow]) -> str:
    if row is None:
        return '-'
    return render_decimal(Decimal(repr(row.time_main_s)))


def _time_ratio(bfs: Optional[BenchRow], pst: Optional[BenchRow]) -> str:
    if bfs is None or pst is None or not pst.time_main_s:
        return '-'
    return render_decimal(Decimal(repr(bfs.time_main_s))
                          / Decimal(repr(pst.time_main_s)))


def render_markdown(rows: Sequence[BenchRow]) -> str:
    grouped = OrderedDict()
    for row in rows:
        grouped.setdefault(row.family, OrderedDict()) \
            .setdefault(row.n, {})[row.algorithm] = row

    lines = []
    for family, by_size in grouped.items():
        title = _family_title(family)
        lines += [f'### {title}: comparison in CPU time', '',
                  '| n | PST time (s) | BFS time (s) | /PST |',
                  '|---:|---:|---:|---:|']
        for n, by_algo in by_size.items():
            pst, bfs = by_algo.get('pst'), by_algo.get('bfs')
            lines.append('| {} | {} | {} | {} |'.format(
                n, _time_cell(pst), _time_cell(bfs), _time_ratio(bfs, pst)))
        lines += ['', f'### {title}: comparison in α', '',
                  '| n | PST α | BFS α | /PST |',
                  '|---:|---:|---:|---:|']
        for n, by_algo in by_size.items():
            pst, bfs = by_algo.get('pst'), by_algo.get('bfs')
            lines.append('| {} | {} | {} | {} |'.format(
                n,
                '-' if pst is None else render_decimal(pst.alpha),
                '-' if bfs is None else render_decimal(bfs.alpha),
                '-' if bfs is None or bfs.ratio is None
                else render_decimal(bfs.ratio)))
        lines.append('')
    return '\n'.join(lines)


RENDERERS = {
    'csv': render_csv,
    'json': render_json,
    'markdown-table': render_markdown,
}


def emit_report(rows: Sequence[BenchRow], fmt: str, path=None) -> str:
    if not rows:
        raise EmptyReport()
    text = RENDERERS[fmt](rows)
    if path is None:
        sys.stdout.write(text)
        return text
    try:
        with open(path, 'w', encoding='utf-8', newline='\n') as handle:
            handle.write(text)
    except OSError as ex:
        raise ReportIOError(path, ex.strerror or str(ex))
    logger.info('wrote %d rows to %s', len(rows), path)
    return text
