"""Modified depth-first search for a path in G' that is induced in G.

The search keeps the vertex partition ``V = T + P + S1 + S2``: ``T`` holds
untouched vertices, ``P`` is the current path kept as a stack, and ``S1``/``S2``
are the two discard piles. Each round either starts a new path, pops the top
of the stack into ``S2`` or ``S1``, or pushes a new vertex. The bookkeeping
below (anchors, frozen step-2 counters, incremental step-3 counters and a
single candidate cursor per vertex) keeps the total work linear in
``e(G) + e(G') + n``.
"""

import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .exceptions import InternalConsistencyError, InvariantViolation
from .graph import Graph, GraphPair
from .types import Action, AlgParams, Label, RoundEvent, RunResult, StopReason

logger = logging.getLogger(__name__)

NO_ANCHOR = -1
WORK_CONSTANT = 8

_T, _P, _S1, _S2 = int(Label.T), int(Label.P), int(Label.S1), int(Label.S2)

RoundHook = Callable[["InducedPathSearch", Action, int], None]


def is_path(graph: Graph, path: Sequence[int]) -> bool:
    """Whether ``path`` lists distinct in-range vertices with consecutive ones adjacent."""
    if any(not 0 <= v < graph.n for v in path) or len(set(path)) != len(path):
        return False
    return all(graph.has_edge(a, b) for a, b in zip(path, path[1:]))


def is_induced(graph: Graph, path: Sequence[int]) -> bool:
    """Whether no two non-consecutive vertices of ``path`` are adjacent in ``graph``."""
    if any(not 0 <= v < graph.n for v in path) or len(set(path)) != len(path):
        return False
    position = {v: i for i, v in enumerate(path)}
    adjacency = graph.adjacency
    for i, v in enumerate(path):
        for w in adjacency[v]:
            j = position.get(w)
            if j is not None and abs(i - j) != 1:
                return False
    return True


def verify_induced_path(pair: GraphPair, path: Sequence[int]) -> bool:
    """Check that ``path`` is a path in ``G'`` and induced in ``G``.

    Args:
        pair: The graph pair.
        path: Vertex sequence.

    Returns:
        True iff vertices are distinct, consecutive ones are adjacent in ``G'``
        and non-consecutive ones are non-adjacent in ``G``. Malformed input
        yields False.
    """
    try:
        vertices = [int(v) for v in path]
    except (TypeError, ValueError):
        return False
    return is_path(pair.g_prime, vertices) and is_induced(pair.g, vertices)


def _sigma_sorted(adjacency: List[List[int]], order: Sequence[int]) -> List[List[int]]:
    # bucket pass: visiting u in sigma order appends u to each neighbour's list
    result: List[List[int]] = [[] for _ in adjacency]
    for u in order:
        for w in adjacency[u]:
            result[w].append(u)
    return result


class InducedPathSearch:
    """Partition state of one search run.

    Attributes:
        label: Partition class per vertex (``Label`` values).
        stack: Path vertices, bottom first.
        anchor: Per vertex, its ``G``-neighbour on the path closest to the bottom,
            or ``NO_ANCHOR``.
        n1: Frozen step-2 counter, ``-1`` until the vertex first reaches the top.
        n2: Running count of ``G'``-neighbours in ``P + S1 + S2``.
        cursor: Next sigma position to scan when starting a new path.
        work: Adjacency entries and cursor steps scanned so far.
    """

    def __init__(self, pair: GraphPair, params: Optional[AlgParams] = None) -> None:
        self.pair = pair
        self.params = params or AlgParams()
        n = pair.n
        self.n = n
        self.order = self.params.resolve_order(n)
        self.adj_g = pair.g.adjacency
        self.adj_gp = pair.g_prime.adjacency
        self.deg_gp = [len(row) for row in self.adj_gp]
        self.work = 0
        if self.params.order is None:
            self.candidates = self.adj_gp
        else:
            self.candidates = _sigma_sorted(self.adj_gp, self.order)
            self.work += 2 * pair.g_prime.m

        self.label: List[int] = [_T] * n
        self.stack: List[int] = []
        self.anchor: List[int] = [NO_ANCHOR] * n
        self.n1: List[int] = [-1] * n
        self.n2: List[int] = [0] * n
        self.candidate_ptr: List[int] = [0] * n
        self.pushed_round: List[int] = [0] * n
        self.cursor = 0
        self.round = 0
        self.s1_size = 0
        self.s2_size = 0
        self.stop_reason: Optional[StopReason] = StopReason.EXHAUSTED if n == 0 else None
        self.trace: Optional[List[RoundEvent]] = [] if self.params.record_trace else None

        self._best: List[int] = []
        self._shared = 0

    def _push(self, u: int) -> None:
        self.label[u] = _P
        self.stack.append(u)
        self.pushed_round[u] = self.round
        anchor = self.anchor
        row = self.adj_g[u]
        for w in row:
            if anchor[w] == NO_ANCHOR:
                anchor[w] = u
        n2 = self.n2
        row_p = self.adj_gp[u]
        for w in row_p:
            n2[w] += 1
        self.work += len(row) + len(row_p)

        size = len(self.stack)
        if size > len(self._best):
            del self._best[self._shared :]
            self._best.extend(self.stack[self._shared :])
            self._shared = size
        target = self.params.target_len
        if target is not None and size - 1 >= target:
            self.stop_reason = StopReason.TARGET_REACHED

    def _pop(self, v: int, into: int) -> None:
        self.stack.pop()
        self.label[v] = into
        anchor = self.anchor
        row = self.adj_g[v]
        for w in row:
            if anchor[w] == v:
                anchor[w] = NO_ANCHOR
        self.work += len(row)
        self._shared = min(self._shared, len(self.stack))

        params = self.params
        if into == _S1:
            self.s1_size += 1
            if params.s1_cap is not None and self.s1_size >= params.s1_cap:
                self.stop_reason = StopReason.CAP_HIT
        else:
            self.s2_size += 1
            if params.s2_cap is not None and self.s2_size >= params.s2_cap:
                self.stop_reason = StopReason.CAP_HIT
        if self.stop_reason is None and self.s1_size + self.s2_size == self.n:
            self.stop_reason = StopReason.EXHAUSTED

    def _outside_count(self, v: int) -> int:
        """``|N_G'(v) & N_G(P - v)|``, valid while ``v`` is the top of the stack."""
        anchor = self.anchor
        label = self.label
        with_members = self.params.count_path_members_in_n1
        count = 0
        row = self.adj_gp[v]
        for w in row:
            a = anchor[w]
            if a != NO_ANCHOR and a != v and (with_members or label[w] != _P):
                count += 1
        self.work += len(row)
        return count

    def _next_candidate(self, v: int) -> int:
        row = self.candidates[v]
        label = self.label
        anchor = self.anchor
        start = i = self.candidate_ptr[v]
        while i < len(row):
            w = row[i]
            i += 1
            if label[w] == _T and (anchor[w] == NO_ANCHOR or anchor[w] == v):
                self.candidate_ptr[v] = i
                self.work += i - start
                return w
        raise InternalConsistencyError(
            f"round {self.round}: no step-4 candidate for vertex {v} although steps 2 and 3 failed"
        )

    def step(self) -> Tuple[Action, int]:
        """Execute one round.

        Returns:
            The action taken and the vertex it acted on.

        Raises:
            InternalConsistencyError: If steps 2-3 fail and no candidate exists.
        """
        if self.stop_reason is not None:
            raise RuntimeError("search already finished")
        self.round += 1
        self.work += 1

        if not self.stack:
            label = self.label
            order = self.order
            t = self.cursor
            while label[order[t]] != _T:
                t += 1
            self.work += t - self.cursor
            self.cursor = t + 1
            v = order[t]
            self._push(v)
            return self._record(Action.START_NEW_PATH, v)

        v = self.stack[-1]
        degree = self.deg_gp[v]
        if self.n1[v] < 0:
            self.n1[v] = self._outside_count(v)
        if 2 * self.n1[v] >= degree:
            self._pop(v, _S2)
            return self._record(Action.POP_TO_S2, v)
        if 2 * self.n2[v] >= degree:
            self._pop(v, _S1)
            return self._record(Action.POP_TO_S1, v)
        w = self._next_candidate(v)
        self._push(w)
        return self._record(Action.PUSH, w)

    def _record(self, action: Action, vertex: int) -> Tuple[Action, int]:
        if self.trace is not None:
            self.trace.append(RoundEvent(round=self.round, action=action, vertex=vertex))
        return action, vertex

    def result(self) -> RunResult:
        if self.stop_reason is None:
            raise RuntimeError("search has not finished")
        s1 = [v for v, lab in enumerate(self.label) if lab == _S1]
        s2 = [v for v, lab in enumerate(self.label) if lab == _S2]
        return RunResult(
            best_path=list(self._best),
            best_len=max(len(self._best) - 1, 0),
            rounds=self.round,
            stop_reason=self.stop_reason,
            trace=self.trace,
            s1_size=self.s1_size,
            s2_size=self.s2_size,
            work_counter=self.work,
            s1_members=s1,
            s2_members=s2,
            path_members=list(self.stack),
        )

    def execute(self, hook: Optional[RoundHook] = None) -> RunResult:
        """Run rounds until a stop condition holds."""
        logger.info(
            "search start: n=%d m_G=%d m_G'=%d target=%s",
            self.n,
            self.pair.g.m,
            self.pair.g_prime.m,
            self.params.target_len,
        )
        debug = logger.isEnabledFor(logging.DEBUG)
        while self.stop_reason is None:
            action, vertex = self.step()
            if debug:
                logger.debug("round %d: %s %d", self.round, action.value, vertex)
            if hook is not None:
                hook(self, action, vertex)
        result = self.result()
        logger.info(
            "search stop: %s after %d rounds, best length %d, work %d",
            result.stop_reason.value,
            result.rounds,
            result.best_len,
            result.work_counter,
        )
        return result


def run(pair: GraphPair, params: Optional[AlgParams] = None) -> RunResult:
    """Find a path in ``G'`` that is induced in ``G``.

    Args:
        pair: The graphs ``G' <= G``.
        params: Ordering, target length and caps; defaults to identity order
            and running to completion.

    Returns:
        The longest path snapshot observed and run statistics.
    """
    return InducedPathSearch(pair, params).execute()


_ALLOWED_MOVES = {(_T, _P), (_P, _S1), (_P, _S2)}


class ObservationChecker:
    """Re-derives the search invariants from scratch after every round."""

    def __init__(self, search: InducedPathSearch) -> None:
        self.previous = list(search.label)
        self.discarded = 0

    def __call__(self, search: InducedPathSearch, action: Action, vertex: int) -> None:
        r = search.round
        pair = search.pair
        stack = search.stack

        if not verify_induced_path(pair, stack):
            raise InvariantViolation("A", r, f"stack {stack} is not an induced path")

        for v, (old, new) in enumerate(zip(self.previous, search.label)):
            if old != new and (old, new) not in _ALLOWED_MOVES:
                raise InvariantViolation(
                    "B", r, f"vertex {v} moved {Label(old).name} -> {Label(new).name}"
                )
        self.previous = list(search.label)

        discarded = search.s1_size + search.s2_size
        if discarded - self.discarded > 1:
            raise InvariantViolation("D", r, f"{discarded - self.discarded} vertices discarded")
        self.discarded = discarded

        if action is Action.POP_TO_S2 and search.pushed_round[vertex] + 1 != r:
            raise InvariantViolation(
                "E", r, f"vertex {vertex} pushed in round {search.pushed_round[vertex]}"
            )

        on_path = [v for v, lab in enumerate(search.label) if lab == _P]
        if sorted(on_path) != sorted(stack):
            raise InvariantViolation("A", r, "stack and P labels disagree")

        position: Dict[int, int] = {v: i for i, v in enumerate(stack)}
        for v in range(search.n):
            path_nbrs = [position[w] for w in search.adj_g[v] if w in position]
            expected = stack[min(path_nbrs)] if path_nbrs else NO_ANCHOR
            if search.anchor[v] != expected:
                raise InvariantViolation(
                    "anchor", r, f"vertex {v} anchored at {search.anchor[v]}, expected {expected}"
                )
            true_n2 = sum(1 for w in search.adj_gp[v] if search.label[w] != _T)
            if search.n2[v] != true_n2:
                raise InvariantViolation("n2", r, f"vertex {v}: {search.n2[v]} != {true_n2}")

        if r > 2 * search.n:
            raise InvariantViolation("rounds", r, f"more than 2n = {2 * search.n} rounds")

    def finish(self, search: InducedPathSearch, result: RunResult) -> None:
        covered = result.s1_size + result.s2_size
        if result.stop_reason is StopReason.EXHAUSTED and covered != search.n:
            raise InvariantViolation("C", result.rounds, "S1 + S2 does not cover V")
        budget = WORK_CONSTANT * (search.pair.g.m + search.pair.g_prime.m + search.n)
        if result.work_counter > budget:
            raise InvariantViolation(
                "F", result.rounds, f"work {result.work_counter} exceeds {budget}"
            )
        if result.best_path and not verify_induced_path(search.pair, result.best_path):
            raise InvariantViolation("A", result.rounds, "best path is not an induced path")


def run_with_invariant_checks(pair: GraphPair, params: Optional[AlgParams] = None) -> RunResult:
    """Same as :func:`run`, re-checking every observation after each round.

    Raises:
        InvariantViolation: Naming the failed observation and the round.
    """
    search = InducedPathSearch(pair, params)
    checker = ObservationChecker(search)
    result = search.execute(checker)
    checker.finish(search, result)
    return result
