"""Wall-clock and work-counter benchmark of the induced-path search."""

import csv
import io
import logging
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List, Sequence

from .generators import generate
from .graph import GraphPair
from .search import run
from .types import BenchOptions, BenchRow, GenSpec, GraphModel

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("n", "m", "medianNanos", "workCounter", "workRatio")


def instance_spec(options: BenchOptions, n: int) -> GenSpec:
    if options.model is GraphModel.RANDOM_REGULAR:
        return GenSpec(model=options.model, n=n, d=options.d, seed=options.seed)
    return GenSpec(model=options.model, n=n, p=min(1.0, options.p_scale / n), seed=options.seed)


def measure(options: BenchOptions, n: int) -> BenchRow:
    """Generate one instance of size ``n`` and time ``options.repeats`` unchecked runs."""
    g = generate(instance_spec(options, n))
    pair = GraphPair.single(g)
    timings: List[int] = []
    work = 0
    for _ in range(options.repeats):
        start = time.perf_counter_ns()
        result = run(pair)
        timings.append(time.perf_counter_ns() - start)
        work = result.work_counter
    scale = pair.g.m + pair.g_prime.m + pair.n
    row = BenchRow(
        n=n,
        m=g.m,
        median_nanos=int(statistics.median(timings)),
        work_counter=work,
        work_ratio=work / scale if scale else 0.0,
    )
    logger.info("bench n=%d m=%d: %d ns, work ratio %.3f", n, g.m, row.median_nanos, row.work_ratio)
    return row


def run_bench(options: BenchOptions) -> List[BenchRow]:
    """Measure every size, fanning out over ``options.jobs`` worker processes."""
    if options.jobs == 1:
        return [measure(options, n) for n in options.sizes]
    with ProcessPoolExecutor(max_workers=options.jobs) as pool:
        return list(pool.map(measure, [options] * len(options.sizes), options.sizes))


def format_csv(rows: Sequence[BenchRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            [row.n, row.m, row.median_nanos, row.work_counter, f"{row.work_ratio:.6f}"]
        )
    return buffer.getvalue()
