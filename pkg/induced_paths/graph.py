"""Immutable graph representation and the set-level primitives Γ, Γ[·], N and e(X, Y)."""

import logging
from bisect import bisect_left
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
import numpy.typing as npt
from scipy import sparse
from typing_extensions import Self

from .exceptions import InvalidGraphError

logger = logging.getLogger(__name__)

IntArray = npt.NDArray[np.int64]
BoolArray = npt.NDArray[np.bool_]
EdgeInput = Union[Iterable[Tuple[int, int]], IntArray]


def _readonly(array: IntArray) -> IntArray:
    array.flags.writeable = False
    return array


class Graph:
    """Undirected simple graph on vertices ``0..n-1`` in CSR form.

    Adjacency lists are strictly increasing and symmetric. Instances are
    immutable after construction; use :func:`build_graph` to create one.
    """

    __slots__ = ("n", "m", "indptr", "indices", "_adjacency", "_matrix")

    def __init__(self, n: int, indptr: IntArray, indices: IntArray) -> None:
        self.n = n
        self.m = len(indices) // 2
        self.indptr = _readonly(indptr)
        self.indices = _readonly(indices)
        self._adjacency: Optional[List[List[int]]] = None
        self._matrix: Optional[sparse.csr_array] = None

    @classmethod
    def from_canonical_edges(cls, n: int, u: IntArray, v: IntArray) -> Self:
        """Build from deduplicated edge endpoints with ``u < v``.

        Args:
            n: Vertex count.
            u: Smaller endpoints.
            v: Larger endpoints, aligned with ``u``.

        Returns:
            The graph with sorted symmetric adjacency.
        """
        src = np.concatenate((u, v)).astype(np.int64, copy=False)
        dst = np.concatenate((v, u)).astype(np.int64, copy=False)
        order = np.lexsort((dst, src))
        indices = np.ascontiguousarray(dst[order])
        counts = np.bincount(src, minlength=n).astype(np.int64)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        return cls(n, indptr, indices)

    @property
    def adjacency(self) -> List[List[int]]:
        """Per-vertex sorted neighbour lists as plain Python lists."""
        if self._adjacency is None:
            flat = self.indices.tolist()
            bounds = self.indptr.tolist()
            self._adjacency = [flat[bounds[i] : bounds[i + 1]] for i in range(self.n)]
        return self._adjacency

    @property
    def matrix(self) -> sparse.csr_array:
        """The adjacency matrix as a sparse 0/1 array."""
        if self._matrix is None:
            data = np.ones(len(self.indices), dtype=np.int64)
            self._matrix = sparse.csr_array(
                (data, self.indices, self.indptr), shape=(self.n, self.n)
            )
        return self._matrix

    @property
    def degrees(self) -> IntArray:
        return np.diff(self.indptr)

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def neighbors(self, v: int) -> List[int]:
        return self.adjacency[v]

    def min_degree(self) -> int:
        return int(self.degrees.min()) if self.n else 0

    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    def is_regular(self) -> bool:
        return self.n == 0 or self.min_degree() == self.max_degree()

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adjacency[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> IntArray:
        """Edges as an ``(m, 2)`` array with ``u < v``, sorted lexicographically."""
        rows = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        keep = rows < self.indices
        return np.column_stack((rows[keep], self.indices[keep]))

    def edge_list(self) -> List[Tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self.edges()]

    def induced_subgraph(self, vertices: Iterable[int]) -> Tuple["Graph", IntArray]:
        """Restrict the graph to a vertex subset.

        Args:
            vertices: Vertices to keep (duplicates ignored).

        Returns:
            The relabelled induced subgraph and the array mapping new ids to old ids.
        """
        keep = np.unique(np.fromiter(vertices, dtype=np.int64))
        relabel = np.full(self.n, -1, dtype=np.int64)
        relabel[keep] = np.arange(len(keep), dtype=np.int64)
        edges = self.edges()
        mapped = relabel[edges]
        inside = (mapped >= 0).all(axis=1)
        mapped = mapped[inside]
        sub = Graph.from_canonical_edges(len(keep), mapped[:, 0], mapped[:, 1])
        return sub, keep

    def union(self, other: "Graph") -> "Graph":
        """Edge union of two graphs on the same vertex set."""
        if other.n != self.n:
            raise ValueError("union needs graphs on the same vertex set")
        return build_graph(self.n, np.concatenate((self.edges(), other.edges())))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: EdgeInput) -> Graph:
    """Build a simple graph from an edge list.

    Repeated pairs (in either orientation) are merged silently.

    Args:
        n: Vertex count; vertices are ``0..n-1``.
        edges: Vertex pairs.

    Returns:
        The constructed graph.

    Raises:
        InvalidGraphError: If an endpoint is out of range or a pair is a self-loop.
    """
    if n < 0:
        raise InvalidGraphError(f"vertex count must be non-negative, got {n}")
    arr = np.asarray(edges if isinstance(edges, np.ndarray) else list(edges))
    arr = arr.astype(np.int64, copy=False).reshape(-1, 2)

    out_of_range = np.flatnonzero(((arr < 0) | (arr >= n)).any(axis=1))
    if out_of_range.size:
        u, v = arr[out_of_range[0]]
        raise InvalidGraphError("endpoint out of range", (int(u), int(v)))
    loops = np.flatnonzero(arr[:, 0] == arr[:, 1])
    if loops.size:
        u, v = arr[loops[0]]
        raise InvalidGraphError("self-loop", (int(u), int(v)))

    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    keys = np.unique(lo * max(n, 1) + hi)
    graph = Graph.from_canonical_edges(n, keys // max(n, 1), keys % max(n, 1))
    if len(keys) != len(arr):
        logger.debug("merged %d repeated edge(s)", len(arr) - len(keys))
    return graph


class VertexSet:
    """Subset of ``0..n-1`` backed by a dense boolean mask.

    Single-owner and mutable through :meth:`add` and :meth:`discard`; the set
    operators return new sets.
    """

    __slots__ = ("_mask",)

    def __init__(self, n: int, members: Iterable[int] = ()) -> None:
        self._mask: BoolArray = np.zeros(n, dtype=bool)
        idx = np.fromiter(members, dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= n):
            raise ValueError(f"vertex set members must lie in 0..{n - 1}")
        self._mask[idx] = True

    @classmethod
    def from_mask(cls, mask: BoolArray) -> "VertexSet":
        result = cls(len(mask))
        result._mask = np.array(mask, dtype=bool)
        return result

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls.from_mask(np.ones(n, dtype=bool))

    @property
    def n(self) -> int:
        return len(self._mask)

    @property
    def mask(self) -> BoolArray:
        return self._mask

    def as_vector(self) -> IntArray:
        return self._mask.astype(np.int64)

    def members(self) -> List[int]:
        return [int(v) for v in np.flatnonzero(self._mask)]

    def add(self, v: int) -> None:
        self._mask[v] = True

    def discard(self, v: int) -> None:
        self._mask[v] = False

    def _check(self, other: "VertexSet") -> None:
        if other.n != self.n:
            raise ValueError("vertex sets live on different vertex counts")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet.from_mask(self._mask | other._mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet.from_mask(self._mask & other._mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet.from_mask(self._mask & ~other._mask)

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check(other)
        return not bool((self._mask & other._mask).any())

    def __len__(self) -> int:
        return int(np.count_nonzero(self._mask))

    def __contains__(self, v: object) -> bool:
        return isinstance(v, (int, np.integer)) and 0 <= v < self.n and bool(self._mask[v])

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return np.array_equal(self._mask, other._mask)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"VertexSet({self.members()})"


def _same_universe(g: Graph, *sets: VertexSet) -> None:
    for s in sets:
        if s.n != g.n:
            raise ValueError(f"vertex set over {s.n} vertices used with graph on {g.n}")


def gamma(g: Graph, x: VertexSet) -> VertexSet:
    """Vertices with at least one neighbour in ``x`` (may intersect ``x``)."""
    _same_universe(g, x)
    return VertexSet.from_mask((g.matrix @ x.as_vector()) > 0)


def gamma_closed(g: Graph, x: VertexSet) -> VertexSet:
    """``x`` together with :func:`gamma` of ``x``."""
    return gamma(g, x) | x


def external_nbhd(g: Graph, x: VertexSet) -> VertexSet:
    """External neighbourhood: :func:`gamma` of ``x`` minus ``x`` itself."""
    return gamma(g, x) - x


def e_between(g: Graph, x: VertexSet, y: VertexSet) -> int:
    """Ordered-pair edge count ``sum over x in X, y in Y of 1[xy in E]``.

    An edge with both endpoints in ``x & y`` contributes 2.
    """
    _same_universe(g, x, y)
    return int(x.as_vector() @ (g.matrix @ y.as_vector()))


def count_into(g: Graph, x: VertexSet) -> IntArray:
    """Per-vertex number of neighbours inside ``x``."""
    _same_universe(g, x)
    return np.asarray(g.matrix @ x.as_vector(), dtype=np.int64)


class GraphPair:
    """A supergraph ``G`` and a subgraph ``G'`` on the same vertex set.

    Attributes:
        g: The host graph ``G``.
        g_prime: The subgraph ``G'``; every edge of it is an edge of ``g``.
        d_min: Minimum degree of ``G'``.
    """

    __slots__ = ("g", "g_prime", "d_min")

    def __init__(self, g: Graph, g_prime: Graph) -> None:
        if g.n != g_prime.n:
            raise InvalidGraphError(
                f"pair graphs differ in vertex count ({g.n} vs {g_prime.n})"
            )
        if g_prime is not g and g_prime.m:
            scale = max(g.n, 1)
            host = g.edges()
            sub = g_prime.edges()
            missing = ~np.isin(sub[:, 0] * scale + sub[:, 1], host[:, 0] * scale + host[:, 1])
            if missing.any():
                u, v = sub[np.flatnonzero(missing)[0]]
                raise InvalidGraphError("subgraph edge absent from host", (int(u), int(v)))
        self.g = g
        self.g_prime = g_prime
        self.d_min = g_prime.min_degree()

    @classmethod
    def single(cls, g: Graph) -> "GraphPair":
        """The pair ``(G, G)``."""
        return cls(g, g)

    @property
    def n(self) -> int:
        return self.g.n

    def restrict(self, vertices: Sequence[int]) -> Tuple["GraphPair", IntArray]:
        """Both graphs restricted to ``vertices``, relabelled consistently."""
        g_sub, keep = self.g.induced_subgraph(vertices)
        gp_sub, _ = self.g_prime.induced_subgraph(keep.tolist())
        return GraphPair(g_sub, gp_sub), keep

    def __repr__(self) -> str:
        return (
            f"GraphPair(n={self.n}, m_g={self.g.m}, "
            f"m_g_prime={self.g_prime.m}, d_min={self.d_min})"
        )
