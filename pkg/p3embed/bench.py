"""
Benchmark runner: generates instance suites, embeds them in every requested mode and reports
wall time, algorithm counters, oracle counters and fitted growth exponents as JSON.

Suite specs are 'key=value' pairs separated by ';', for example

    kind=yes; n=256,512,1024; seeds=3; modes=baseline,improved; general=0; workers=4

or the path of a JSON file holding the same keys.
"""
import asyncio
import json
import logging
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, asdict
from typing import List

import numpy as np

from p3embed import generator
from p3embed.embedder import Mode, embed, QUERY_BUDGET_CONSTANT
from p3embed.errors import BenchFormatError
from p3embed.general import DPTable, embed_general
from p3embed.geometry import get_coordinate_bound, set_coordinate_bound
from p3embed.plane3tree import validate_and_build
from p3embed.range_oracle import Backend, RangeOracle
from p3embed.verifier import VerifyMode, verify

logger = logging.getLogger(__name__)

REPORT_SCHEMA = 'p3embed-bench/1'

KINDS = ('yes', 'random', 'collinear')

# the dynamic program is O(n k^4), larger instances are skipped
GENERAL_MAX_N = 12


@dataclass
class SuiteSpec:
    kind: str = 'yes'
    n: List[int] = field(default_factory=lambda: [64, 128, 256])
    seeds: int = 3
    modes: List[str] = field(default_factory=lambda: [Mode.BASELINE.value, Mode.IMPROVED.value])
    general: bool = False
    workers: int = 1
    coord_bound: int = generator.DEFAULT_COORD_BOUND
    backend: str = Backend.HIERARCHICAL.value

    def check(self):
        if self.kind not in KINDS:
            raise BenchFormatError(f'Unknown suite kind "{self.kind}", expected one of {", ".join(KINDS)}')
        if not self.n or any(n < 3 for n in self.n):
            raise BenchFormatError(f'Suite sizes must be at least 3, got {self.n}')
        if self.seeds < 1 or self.workers < 1:
            raise BenchFormatError('seeds and workers must be positive')
        try:
            for mode in self.modes:
                Mode.from_arg(mode)
            Backend.from_arg(self.backend)
        except ValueError as e:
            raise BenchFormatError(str(e)) from e
        return self

    def as_dict(self):
        return asdict(self)


def _parse_value(key, value):
    try:
        if key in ('n', 'modes'):
            items = [item.strip() for item in value.split(',') if item.strip()]
            return [int(item) for item in items] if key == 'n' else items
        if key == 'general':
            return value.strip().lower() in ('1', 'true', 'yes')
        if key in ('seeds', 'workers', 'coord_bound'):
            return int(value)
        return value.strip()
    except ValueError:
        raise BenchFormatError(f'Bad value "{value}" for suite key "{key}"')


def parse_suite(spec) -> SuiteSpec:
    """
    :param spec: 'key=value; ...' string or path of a JSON file
    :raises BenchFormatError
    """
    if os.path.isfile(spec):
        with open(spec, 'r') as f:
            try:
                values = json.load(f)
            except json.JSONDecodeError as e:
                raise BenchFormatError(f'Suite file {spec} is not valid JSON: {e}') from e
        if isinstance(values.get('n'), int):
            values['n'] = [values['n']]
    else:
        values = {}
        for item in spec.split(';'):
            if not item.strip():
                continue
            if '=' not in item:
                raise BenchFormatError(f'Suite item "{item.strip()}" is not of the form key=value')
            key, value = (part.strip() for part in item.split('=', 1))
            values[key] = _parse_value(key, value)

    known = set(SuiteSpec.__dataclass_fields__)
    unknown = set(values) - known
    if unknown:
        raise BenchFormatError(f'Unknown suite keys: {", ".join(sorted(unknown))}')
    return SuiteSpec(**values).check()


def _make_instance(kind, n, seed, coord_bound):
    if kind == 'yes':
        return generator.gen_yes_instance(n, seed, coord_bound)
    if kind == 'collinear':
        return generator.gen_yes_instance(n, seed, coord_bound, general_position=False)
    return generator.gen_random_instance(n, seed, coord_bound)


def query_budget(n, coord_bound):
    return QUERY_BUDGET_CONSTANT * n * (math.log2(n) + math.log2(coord_bound))


def step_budget(coord_bound):
    return 2 * (4 * math.log2(coord_bound) + 4)


def run_instance(kind, n, seed, modes, general, coord_bound, backend, bound=None):
    """
    Runs one generated instance in every mode. Module level so process pools can pickle it.
    :returns list of run records (dicts)
    """
    if bound is not None:
        set_coordinate_bound(bound)
    instance = _make_instance(kind, n, seed, coord_bound)
    tree = validate_and_build(instance.graph)
    backend = Backend.from_arg(backend)
    instance_id = f'{kind}-n{n}-s{seed}'

    runs = []
    for mode in modes:
        mode = Mode.from_arg(mode)
        start = time.perf_counter()
        oracle = RangeOracle(instance.points, backend)
        build_time = time.perf_counter() - start
        result = embed(tree, instance.points, mode=mode, oracle=oracle)
        wall_time = time.perf_counter() - start

        valid = None
        if result.found:
            valid = verify(instance.graph, instance.points, result.mapping).valid
        stats = result.stats
        runs.append({
            'instance': instance_id,
            'kind': kind,
            'n': n,
            'seed': seed,
            'mode': mode.value,
            'found': result.found,
            'reason': result.reason.value if result.reason else None,
            'verified': valid,
            'build_time': build_time,
            'wall_time': wall_time,
            'algo_stats': stats.as_dict(),
            'query_stats': oracle.snapshot().as_dict(),
            'within_query_budget': stats.mapping_count_queries <= query_budget(n, coord_bound),
            'within_step_budget': stats.max_steps_per_node <= step_budget(coord_bound),
        })

    if general:
        if n > GENERAL_MAX_N:
            logger.warning(f'Skipping generalized run of {instance_id}, n > {GENERAL_MAX_N}')
        else:
            table = DPTable()
            start = time.perf_counter()
            mapping = embed_general(tree, instance.points, backend=backend, table=table)
            valid = None
            if mapping is not None:
                valid = verify(instance.graph, instance.points, mapping, VerifyMode.GENERALIZED).valid
            runs.append({
                'instance': instance_id,
                'kind': kind,
                'n': n,
                'seed': seed,
                'mode': 'general',
                'found': mapping is not None,
                'reason': None,
                'verified': valid,
                'build_time': 0.0,
                'wall_time': time.perf_counter() - start,
                'dp_entries': table.entries_evaluated,
            })
    logger.info(f'Finished {instance_id}')
    return runs


def _summarize(runs):
    summary = {}
    for run in runs:
        per_mode = summary.setdefault(run['mode'], {})
        entry = per_mode.setdefault(str(run['n']), {'runs': 0, 'found': 0, 'wall_time': [],
                                                    'count_queries': [], 'candidates_checked': []})
        entry['runs'] += 1
        entry['found'] += int(run['found'])
        entry['wall_time'].append(run['wall_time'])
        if 'algo_stats' in run:
            entry['count_queries'].append(run['algo_stats']['count_queries'])
            entry['candidates_checked'].append(run['algo_stats']['candidates_checked'])

    for per_mode in summary.values():
        for entry in per_mode.values():
            for key in ('wall_time', 'count_queries', 'candidates_checked'):
                values = entry[key]
                entry[key] = float(np.mean(values)) if values else None
    return summary


def fit_exponent(ns, values):
    """
    Slope of log(values) against log(ns) by least squares, or None with fewer than two usable sizes.
    """
    pairs = [(n, v) for n, v in zip(ns, values) if v is not None and v > 0]
    if len({n for n, _ in pairs}) < 2:
        return None
    xs = np.log([n for n, _ in pairs])
    ys = np.log([v for _, v in pairs])
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


def _fits(summary):
    fits = {}
    for mode, per_mode in summary.items():
        ns = sorted(per_mode, key=int)
        fits[mode] = {
            key: fit_exponent([int(n) for n in ns], [per_mode[n][key] for n in ns])
            for key in ('count_queries', 'candidates_checked', 'wall_time')
        }
    return fits


def _run_order(run):
    return run['n'], run['seed'], run['mode']


async def run_suite(suite: SuiteSpec):
    """
    Runs every (n, seed) instance of the suite, in a process pool if suite.workers > 1.
    :returns report dict following REPORT_SCHEMA
    """
    jobs = [(suite.kind, n, seed, suite.modes, suite.general, suite.coord_bound, suite.backend,
             get_coordinate_bound())
            for n in suite.n for seed in range(suite.seeds)]
    logger.info(f'Running {len(jobs)} instances with {suite.workers} workers')

    loop = asyncio.get_event_loop()
    if suite.workers > 1:
        with ProcessPoolExecutor(max_workers=suite.workers) as executor:
            results = await asyncio.gather(*(loop.run_in_executor(executor, run_instance, *job) for job in jobs))
    else:
        results = [await loop.run_in_executor(None, run_instance, *job) for job in jobs]

    runs = sorted((run for result in results for run in result), key=_run_order)
    summary = _summarize(runs)
    return {
        'schema': REPORT_SCHEMA,
        'suite': suite.as_dict(),
        'runs': runs,
        'summary': summary,
        'fits': _fits(summary),
    }


def bench(spec):
    """
    Synchronous entry point.
    :param spec: SuiteSpec or suite spec string
    """
    suite = spec if isinstance(spec, SuiteSpec) else parse_suite(spec)
    return asyncio.run(run_suite(suite))


def dump_report(report) -> str:
    return json.dumps(report, indent=1, sort_keys=True)


def load_report(text):
    """
    Parses and validates a report produced by dump_report.
    :raises BenchFormatError
    """
    try:
        report = json.loads(text)
    except json.JSONDecodeError as e:
        raise BenchFormatError(f'Report is not valid JSON: {e}') from e
    if not isinstance(report, dict) or report.get('schema') != REPORT_SCHEMA:
        raise BenchFormatError(f'Report schema must be "{REPORT_SCHEMA}"')
    for key in ('suite', 'runs', 'summary', 'fits'):
        if key not in report:
            raise BenchFormatError(f'Report is missing "{key}"')
    for run in report['runs']:
        missing = {'instance', 'n', 'seed', 'mode', 'found', 'wall_time'} - run.keys()
        if missing:
            raise BenchFormatError(f'Run record is missing {", ".join(sorted(missing))}')
    SuiteSpec(**report['suite']).check()
    return report
