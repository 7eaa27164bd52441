"""Seeded graph constructions.

All randomness comes from ``numpy.random.Philox`` seeded with the caller's
64-bit seed, so a ``(spec, seed)`` pair reproduces the same edge list.
"""

import logging
from typing import List, NamedTuple, Optional

import numpy as np

from .exceptions import GenerationError
from .graph import Graph, IntArray, build_graph
from .types import GenSpec, GraphModel

logger = logging.getLogger(__name__)

MAX_RESTARTS = 1000


def make_rng(seed: int) -> np.random.Generator:
    """The package's pinned counter-based generator."""
    return np.random.Generator(np.random.Philox(seed))


def _keys_to_graph(n: int, keys: IntArray) -> Graph:
    keys = np.unique(keys)
    return Graph.from_canonical_edges(n, keys // n, keys % n)


def _can_still_pair(n: int, accepted: IntArray, leftover: IntArray) -> bool:
    """Whether two distinct leftover vertices are not yet joined."""
    vertices = np.unique(leftover)
    k = len(vertices)
    if k < 2:
        return False
    inside = np.isin(accepted // n, vertices) & np.isin(accepted % n, vertices)
    return int(inside.sum()) < k * (k - 1) // 2


def _try_regular(n: int, d: int, rng: np.random.Generator) -> Optional[IntArray]:
    stubs = np.repeat(np.arange(n, dtype=np.int64), d)
    accepted = np.empty(0, dtype=np.int64)
    while stubs.size:
        stubs = rng.permutation(stubs)
        lo = np.minimum(stubs[0::2], stubs[1::2])
        hi = np.maximum(stubs[0::2], stubs[1::2])
        keys = lo * n + hi
        ok = lo != hi
        first = np.zeros(len(keys), dtype=bool)
        first[np.unique(keys, return_index=True)[1]] = True
        ok &= first & ~np.isin(keys, accepted)
        accepted = np.union1d(accepted, keys[ok])
        stubs = np.concatenate((lo[~ok], hi[~ok]))
        if stubs.size and not _can_still_pair(n, accepted, stubs):
            return None
    return accepted


def gen_random_regular(n: int, d: int, seed: int, max_restarts: int = MAX_RESTARTS) -> Graph:
    """Random simple ``d``-regular graph from the configuration model.

    Stubs are paired uniformly; pairs that would form a loop or a repeated
    edge are returned to the pool and re-paired. When the leftover stubs can
    no longer be completed the attempt restarts from scratch. Re-pairing makes
    the output close to, but not exactly, uniform over d-regular graphs.

    Args:
        n: Vertex count.
        d: Degree, ``0 <= d < n`` with ``n * d`` even.
        seed: PRNG seed.
        max_restarts: Attempts before giving up.

    Raises:
        ValueError: On parity or range violations.
        GenerationError: If every attempt got stuck.
    """
    if (n * d) % 2:
        raise ValueError("n * d must be even")
    if not 0 <= d < n:
        raise ValueError(f"need 0 <= d < n, got n={n}, d={d}")
    rng = make_rng(seed)
    for attempt in range(1, max_restarts + 1):
        keys = _try_regular(n, d, rng)
        if keys is not None:
            if attempt > 1:
                logger.info("random regular n=%d d=%d needed %d attempts", n, d, attempt)
            return _keys_to_graph(n, keys)
        logger.debug("random regular attempt %d stuck, restarting", attempt)
    raise GenerationError(
        f"no simple {d}-regular graph on {n} vertices after {max_restarts} attempts"
    )


def _pair_index_to_edges(n: int, index: IntArray) -> IntArray:
    """Map linear indices of the upper triangle (row-major) to ``(u, v)`` pairs."""
    u_all = np.arange(n, dtype=np.int64)
    starts = u_all * (2 * n - u_all - 1) // 2
    u = np.searchsorted(starts, index, side="right") - 1
    v = index - starts[u] + u + 1
    return np.column_stack((u, v))


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Binomial random graph by geometric skipping over the ``n(n-1)/2`` pairs.

    Raises:
        ValueError: If ``p`` is outside ``[0, 1]``.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    total = n * (n - 1) // 2
    if p == 0.0 or total == 0:
        return build_graph(n, np.empty((0, 2), dtype=np.int64))
    if p == 1.0:
        return build_graph(n, _pair_index_to_edges(n, np.arange(total, dtype=np.int64)))

    rng = make_rng(seed)
    expected = total * p
    batch = int(expected + 5 * np.sqrt(expected) + 16)
    chunks: List[IntArray] = []
    position = -1
    while position < total:
        steps = rng.geometric(p, size=batch).astype(np.int64)
        index = position + np.cumsum(steps)
        chunks.append(index)
        position = int(index[-1])
    index = np.concatenate(chunks)
    index = index[index < total]
    logger.debug("G(%d, %g) sampled %d edge(s)", n, p, len(index))
    return build_graph(n, _pair_index_to_edges(n, index))


class CliqueInstance(NamedTuple):
    graph: Graph
    cliques: List[List[int]]


def gen_clique_superimposed(
    base: GenSpec, clique_count: int, clique_size: int, seed: int
) -> CliqueInstance:
    """Union a base graph with vertex-disjoint cliques on random vertex sets.

    Args:
        base: Generator request for the base graph.
        clique_count: Number of cliques.
        clique_size: Vertices per clique.
        seed: Seed for placing the cliques (the base uses its own seed).

    Returns:
        The graph and the clique partition, each clique sorted.

    Raises:
        GenerationError: If the cliques do not fit disjointly into the base.
    """
    host = generate(base)
    covered = clique_count * clique_size
    if covered > host.n:
        raise GenerationError(
            f"{clique_count} disjoint cliques of size {clique_size} need {covered} "
            f"vertices, base has {host.n}"
        )
    rng = make_rng(seed)
    blocks = np.sort(rng.permutation(host.n)[:covered].reshape(clique_count, clique_size), axis=1)
    rows, cols = np.triu_indices(clique_size, k=1)
    clique_edges = np.column_stack((blocks[:, rows].ravel(), blocks[:, cols].ravel()))
    graph = build_graph(host.n, np.concatenate((host.edges(), clique_edges)))
    return CliqueInstance(graph, blocks.tolist())


def gen_named(model: GraphModel, n: int = 10) -> Graph:
    """Deterministic constructions.

    Raises:
        ValueError: For an unsupported model or an invalid ``n``.
    """
    if model is GraphModel.PETERSEN:
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return build_graph(10, outer + spokes + inner)
    if model is GraphModel.CYCLE:
        if n < 3:
            raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if model is GraphModel.PATH:
        if n < 1:
            raise ValueError(f"a path needs at least 1 vertex, got {n}")
        return build_graph(n, [(i, i + 1) for i in range(n - 1)])
    if model is GraphModel.COMPLETE:
        if n < 1:
            raise ValueError(f"a complete graph needs at least 1 vertex, got {n}")
        rows, cols = np.triu_indices(n, k=1)
        return build_graph(n, np.column_stack((rows, cols)))
    raise ValueError(f"{model.value} is not a named construction")


def generate(spec: GenSpec) -> Graph:
    """Build the graph a :class:`GenSpec` describes."""
    logger.info("generating %s n=%d seed=%d", spec.model.value, spec.n, spec.seed)
    if spec.model is GraphModel.RANDOM_REGULAR:
        assert spec.d is not None
        return gen_random_regular(spec.n, spec.d, spec.seed)
    if spec.model is GraphModel.GNP:
        assert spec.p is not None
        return gen_gnp(spec.n, spec.p, spec.seed)
    if spec.model is GraphModel.CLIQUE_SUPERIMPOSED:
        return generate_with_cliques(spec).graph
    return gen_named(spec.model, spec.n)


def generate_with_cliques(spec: GenSpec) -> CliqueInstance:
    """Like :func:`generate` but keeps the clique partition of a superimposed instance."""
    if spec.model is not GraphModel.CLIQUE_SUPERIMPOSED:
        return CliqueInstance(generate(spec), [])
    assert spec.base is not None and spec.clique_count is not None
    assert spec.clique_size is not None
    return gen_clique_superimposed(spec.base, spec.clique_count, spec.clique_size, spec.seed)
