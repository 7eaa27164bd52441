"""Set-pair sampling for edge-distribution conditions.

Every condition checked in this package has the shape
``max over |X| = a, |Y| = b of e(F(X), Y) < bound`` where ``F`` is either the
identity or a closed neighbourhood. For a fixed ``X`` the sum over ``Y``
separates per vertex, so the best ``Y`` is simply the ``b`` vertices with the
largest neighbour count into ``F(X)``. Samplers therefore only search over
``X``.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterator, List, NamedTuple, Optional, Tuple

import numpy as np

from .graph import Graph, IntArray, VertexSet, count_into, gamma, gamma_closed

logger = logging.getLogger(__name__)

SourceMap = Callable[[VertexSet], VertexSet]


class Evaluation(NamedTuple):
    """Worst ``Y`` for a given ``X`` and the edge count it attains."""

    x: List[int]
    y: List[int]
    value: int


def top_by_count(counts: IntArray, size: int) -> IntArray:
    """Indices of the ``size`` largest entries, ties broken by smaller index."""
    order = np.lexsort((np.arange(len(counts)), -counts))
    return np.sort(order[:size])


def identity_source(x: VertexSet) -> VertexSet:
    return x


def neighbourhood_source(host: Graph, closed: bool = True) -> SourceMap:
    """``X -> Gamma_host[X]``, or the open ``Gamma_host(X)`` when ``closed`` is False."""

    def source(x: VertexSet) -> VertexSet:
        return gamma_closed(host, x) if closed else gamma(host, x)

    return source


@dataclass
class ConditionObjective:
    """``X -> max over |Y| = y_size of e_graph(source(X), Y)``."""

    graph: Graph
    y_size: int
    source: SourceMap = field(default=identity_source)

    def evaluate(self, x: VertexSet) -> Evaluation:
        counts = count_into(self.graph, self.source(x))
        y = top_by_count(counts, self.y_size)
        return Evaluation(x.members(), [int(v) for v in y], int(counts[y].sum()))


def random_subset(rng: np.random.Generator, n: int, size: int) -> VertexSet:
    return VertexSet(n, rng.choice(n, size=size, replace=False).tolist())


def greedy_dense_set(g: Graph, start: int, size: int) -> VertexSet:
    """Grow a set from ``start`` by repeatedly adding the vertex with most edges into it.

    Ties prefer higher degree, then smaller id.
    """
    degrees = g.degrees
    weight = int(degrees.max()) + 1 if g.n else 1
    counts = np.zeros(g.n, dtype=np.int64)
    chosen = VertexSet(g.n)
    if size <= 0:
        return chosen
    v = start
    for _ in range(size):
        chosen.add(v)
        counts[g.adjacency[v]] += 1
        if len(chosen) == size:
            break
        score = counts * weight + degrees
        score[chosen.mask] = -1
        v = int(np.argmax(score))
    return chosen


def improve_by_swaps(
    objective: ConditionObjective, start: VertexSet, max_passes: int = 3
) -> Evaluation:
    """First-improvement local search exchanging one member of ``X`` for a non-member."""
    current = objective.evaluate(start)
    x = VertexSet(start.n, current.x)
    n = start.n
    for _ in range(max_passes):
        improved = False
        for out in list(x):
            for into in range(n):
                if into in x:
                    continue
                x.discard(out)
                x.add(into)
                candidate = objective.evaluate(x)
                if candidate.value > current.value:
                    current = candidate
                    improved = True
                    break
                x.discard(into)
                x.add(out)
            if improved:
                break
        if not improved:
            break
    return current


class SetPairSampler:
    """Produces candidate ``X`` sets: greedy seeds by descending degree, then random sets.

    Args:
        g: Graph whose density drives the greedy growth.
        x_size: Size of every produced set.
        rng: Source of the random sets.
        swap_limit: Local search runs only when ``x_size * n`` stays within this.
    """

    def __init__(
        self,
        g: Graph,
        x_size: int,
        rng: np.random.Generator,
        swap_limit: int = 4096,
    ) -> None:
        self.g = g
        self.x_size = x_size
        self.rng = rng
        self.swap_limit = swap_limit

    def _by_degree(self) -> List[int]:
        return [int(v) for v in np.lexsort((np.arange(self.g.n), -self.g.degrees))]

    def candidates(self, samples: int) -> Iterator[VertexSet]:
        """Yield ``samples`` sets; roughly half greedy, the rest uniform."""
        if samples <= 0 or self.g.n == 0:
            return
        greedy = min(self.g.n, (samples + 1) // 2)
        for v in self._by_degree()[:greedy]:
            yield greedy_dense_set(self.g, v, self.x_size)
        for _ in range(samples - greedy):
            yield random_subset(self.rng, self.g.n, self.x_size)

    def worst(
        self, objective: ConditionObjective, samples: int
    ) -> Tuple[Optional[Evaluation], int]:
        """Largest objective value over the sampled sets and the number of sets tried."""
        best: Optional[Evaluation] = None
        tried = 0
        use_swaps = self.x_size * self.g.n <= self.swap_limit
        for x in self.candidates(samples):
            tried += 1
            result = improve_by_swaps(objective, x) if use_swaps else objective.evaluate(x)
            if best is None or result.value > best.value:
                best = result
        logger.debug(
            "sampled %d set(s) of size %d, worst value %s",
            tried,
            self.x_size,
            best.value if best else None,
        )
        return best, tried
