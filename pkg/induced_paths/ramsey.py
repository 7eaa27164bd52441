"""Monochromatic induced paths in edge-coloured binomial random graphs.

Pipeline: sample ``G(nk, c log k / n)``, colour its edges with ``k`` colours,
keep the densest colour class, peel vertices of degree below ``c log k / 4``
and search the surviving pair for a path that is induced in ``G``.
"""

import heapq
import logging
from dataclasses import dataclass
from typing import List, Literal, NamedTuple

import numpy as np

from .exceptions import PipelineError
from .generators import gen_gnp, make_rng
from .graph import Graph, GraphPair, IntArray
from .search import is_induced, is_path, run, verify_induced_path
from .types import AlgParams, ColoringStrategy, RamseyParams, RamseyReport

logger = logging.getLogger(__name__)

PeelOrder = Literal["least_id", "random"]


@dataclass(frozen=True, eq=False)
class ColoredGraph:
    """A graph with one colour per edge, aligned with ``g.edges()``."""

    g: Graph
    colors: IntArray
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"need at least one colour, got k={self.k}")
        if len(self.colors) != self.g.m:
            raise ValueError(f"{len(self.colors)} colours for {self.g.m} edges")
        if len(self.colors) and (self.colors.min() < 0 or self.colors.max() >= self.k):
            raise ValueError(f"colours must lie in 0..{self.k - 1}")

    def class_sizes(self) -> IntArray:
        return np.bincount(self.colors, minlength=self.k)

    @property
    def densest_color(self) -> int:
        """Colour with most edges, least index on ties."""
        return int(np.argmax(self.class_sizes()))


def _balanced_colors(g: Graph, k: int) -> IntArray:
    # per edge in sorted order: colour minimising the two endpoint colour degrees
    color_degree = [[0] * k for _ in range(g.n)]
    colors = np.empty(g.m, dtype=np.int64)
    palette = range(k)
    for i, (u, v) in enumerate(g.edge_list()):
        row_u, row_v = color_degree[u], color_degree[v]
        c = min(palette, key=lambda col: row_u[col] + row_v[col])
        row_u[c] += 1
        row_v[c] += 1
        colors[i] = c
    return colors


def color_edges(g: Graph, k: int, strategy: ColoringStrategy, seed: int = 0) -> ColoredGraph:
    """Colour every edge of ``g`` with one of ``k`` colours.

    Args:
        g: Graph to colour.
        k: Number of colours.
        strategy: ``uniformRandom`` draws colours i.i.d.; ``adversarialBalanced``
            greedily keeps every vertex's colour degrees level.
        seed: PRNG seed for the random strategy.

    Raises:
        ValueError: If ``k < 1``.
    """
    if k < 1:
        raise ValueError(f"need at least one colour, got k={k}")
    if strategy is ColoringStrategy.UNIFORM_RANDOM:
        colors = make_rng(seed).integers(k, size=g.m).astype(np.int64)
    else:
        colors = _balanced_colors(g, k)
    return ColoredGraph(g, colors, k)


def densest_color_class(cg: ColoredGraph) -> Graph:
    """Spanning subgraph formed by the edges of the densest colour."""
    edges = cg.g.edges()[cg.colors == cg.densest_color]
    return Graph.from_canonical_edges(cg.g.n, edges[:, 0], edges[:, 1])


class PeelResult(NamedTuple):
    g_prime: Graph
    survivors: IntArray
    removed_order: List[int]


def peel_min_degree(
    g0: Graph, threshold: float, order: PeelOrder = "least_id", seed: int = 0
) -> PeelResult:
    """Delete vertices of degree below ``threshold`` one at a time until none is left.

    Among removable vertices the least id goes first, or the first in a seeded
    random priority when ``order="random"``; the survivor set does not depend on
    the order.

    Returns:
        The survivor subgraph relabelled to ``0..|survivors|-1``, the sorted
        original ids of the survivors and the removal sequence.

    Raises:
        ValueError: If ``threshold`` is negative.
    """
    if threshold < 0:
        raise ValueError(f"threshold must be non-negative, got {threshold}")
    n = g0.n
    if order == "random":
        priority = make_rng(seed).permutation(n).tolist()
    else:
        priority = list(range(n))
    degree = g0.degrees.tolist()
    alive = [True] * n
    heap = [(priority[v], v) for v in range(n) if degree[v] < threshold]
    heapq.heapify(heap)
    removed: List[int] = []
    adjacency = g0.adjacency
    while heap:
        _, v = heapq.heappop(heap)
        alive[v] = False
        removed.append(v)
        for w in adjacency[v]:
            if alive[w]:
                degree[w] -= 1
                if degree[w] < threshold <= degree[w] + 1:
                    heapq.heappush(heap, (priority[w], w))
    survivors = np.flatnonzero(np.array(alive, dtype=bool)).astype(np.int64)
    g_prime, _ = g0.induced_subgraph(survivors.tolist())
    logger.debug("peeling below %g removed %d of %d vertices", threshold, len(removed), n)
    return PeelResult(g_prime, survivors, removed)


def _average_degree(g: Graph) -> float:
    return 2 * g.m / g.n if g.n else 0.0


def run_ramsey_pipeline(
    params: RamseyParams,
    strategy: ColoringStrategy = ColoringStrategy.UNIFORM_RANDOM,
    seed: int = 0,
) -> RamseyReport:
    """Sample, colour, peel and search once.

    The witness is mapped back to host ids and checked to be a path of the
    densest colour that is induced both in the host restricted to the
    survivors and in the whole host.

    Raises:
        PipelineError: If peeling removes every vertex; the partial report is attached.
    """
    graph_seed, color_seed = (int(s) for s in make_rng(seed).integers(2**63, size=2))
    host = gen_gnp(params.vertex_count, params.p, graph_seed)
    report = RamseyReport(
        seed=seed,
        n=params.n,
        k=params.k,
        c=params.c,
        p=params.p,
        m_host=host.m,
        m_host_per_n=host.m / params.n,
        threshold=params.peel_threshold,
        target_len=params.target_len,
    )
    logger.info("ramsey seed %d: host n=%d m=%d", seed, host.n, host.m)

    colored = color_edges(host, params.k, strategy, color_seed)
    densest = densest_color_class(colored)
    report.densest_color = colored.densest_color
    report.m_densest = densest.m
    report.avg_degree_densest = _average_degree(densest)

    peeled = peel_min_degree(densest, params.peel_threshold)
    if len(peeled.survivors) == 0:
        report.failure = "empty survivor set after peeling"
        raise PipelineError(f"seed {seed}: peeling removed every vertex", report)
    report.survivor_n = peeled.g_prime.n
    report.survivor_min_deg = peeled.g_prime.min_degree()
    report.avg_degree_survivor = _average_degree(peeled.g_prime)
    logger.info(
        "ramsey seed %d: colour %d has %d edges, %d vertices survive peeling",
        seed,
        report.densest_color,
        densest.m,
        report.survivor_n,
    )

    restricted, keep = host.induced_subgraph(peeled.survivors.tolist())
    pair = GraphPair(restricted, peeled.g_prime)
    target = params.target_len
    result = run(pair, AlgParams(target_len=target if target else None))
    witness = [int(v) for v in keep[result.best_path]]

    report.found_len = result.best_len
    report.target_met = target is not None and result.best_len >= target
    report.witness = witness
    report.checks_passed = (
        verify_induced_path(pair, result.best_path)
        and is_induced(host, witness)
        and is_path(densest, witness)
    )
    if not report.checks_passed:
        logger.warning("ramsey seed %d: witness %s failed verification", seed, witness)
    return report
