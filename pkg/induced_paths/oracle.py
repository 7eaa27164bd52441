"""Exponential-time ground truth for small graphs.

Exact longest induced path by branch and bound over bitmasks, exhaustive and
sampled checks of the two edge-count conditions of the path theorem, and the
witness a capped search run leaves behind.
"""

import logging
import math
from itertools import combinations
from typing import Iterable, List, NamedTuple, Optional, Tuple

from .exceptions import GuardExceededError, InternalConsistencyError
from .generators import gen_gnp, make_rng
from .graph import (
    Graph,
    GraphPair,
    IntArray,
    VertexSet,
    build_graph,
    e_between,
    gamma_closed,
)
from .sampling import ConditionObjective, SetPairSampler, neighbourhood_source, top_by_count
from .types import (
    AlgParams,
    ConditionReport,
    ProofWitness,
    RunResult,
    StopReason,
    Witness,
)

logger = logging.getLogger(__name__)

MAX_EXACT_VERTICES = 24
ENUMERATION_GUARD = 10**8


class ExactPath(NamedTuple):
    length: int
    path: List[int]


def _neighbour_masks(g: Graph) -> List[int]:
    masks = []
    for row in g.adjacency:
        mask = 0
        for w in row:
            mask |= 1 << w
        masks.append(mask)
    return masks


def longest_induced_path_exact(g: Graph, max_n: int = MAX_EXACT_VERTICES) -> ExactPath:
    """Longest induced path by exhaustive extension with forbidden-set pruning.

    A path ``v0 .. vk`` may only be extended by a neighbour of ``vk`` outside
    the closed neighbourhoods of ``v0 .. v(k-1)``. A branch is cut when even
    using every vertex still allowed could not beat the best length found.

    Args:
        g: Graph to search.
        max_n: Size guard.

    Returns:
        Edge count of a longest induced path and one such path, its first
        vertex smaller than its last.

    Raises:
        GuardExceededError: If ``g.n > max_n``.
    """
    if g.n > max_n:
        raise GuardExceededError(
            f"exact longest induced path limited to {max_n} vertices, got {g.n}"
        )
    if g.n == 0:
        return ExactPath(0, [])
    nbr = _neighbour_masks(g)
    closed = [mask | (1 << v) for v, mask in enumerate(nbr)]
    everything = (1 << g.n) - 1
    best_len = 0
    best_path: List[int] = [0]
    path: List[int] = []

    def extend(tip: int, forbidden: int) -> None:
        nonlocal best_len, best_path
        length = len(path) - 1
        if length > best_len and path[0] < path[-1]:
            best_len = length
            best_path = list(path)
        options = nbr[tip] & ~forbidden
        if not options:
            return
        blocked = forbidden | closed[tip]
        if length + 1 + bin(everything & ~blocked).count("1") <= best_len:
            return
        while options:
            low = options & -options
            w = low.bit_length() - 1
            options ^= low
            path.append(w)
            extend(w, blocked)
            path.pop()

    for start in range(g.n):
        path.append(start)
        extend(start, 0)
        path.pop()
    logger.debug("exact longest induced path of n=%d: %d", g.n, best_len)
    return ExactPath(best_len, best_path)


def _clamped_sizes(n: int, ell: int, s1: int, s2: int) -> Tuple[int, int, int, int]:
    return min(s1, n), min(ell + s1 + s2, n), min(ell + s1, n), min(s2, n)


def _validate(pair: GraphPair, ell: int, s1: int, s2: int) -> None:
    if min(ell, s1, s2) < 1:
        raise ValueError(f"ell, s1 and s2 must be positive, got {ell}, {s1}, {s2}")
    if s1 + s2 >= pair.n:
        raise ValueError(f"need s1 + s2 < n, got {s1} + {s2} >= {pair.n}")


def _dense(g: Graph) -> IntArray:
    return g.matrix.toarray()


def check_thm3_conditions_exact(
    pair: GraphPair, ell: int, s1: int, s2: int, guard: int = ENUMERATION_GUARD
) -> ConditionReport:
    """Decide both conditions of the path theorem by enumerating every ``X``.

    For each ``X`` the densest ``Y`` is the top of the per-vertex neighbour
    counts, so the maximum over ``Y`` is computed rather than enumerated.
    Requested sizes above ``n`` are clamped to ``n``.

    Raises:
        ValueError: If a size is not positive or ``s1 + s2 >= n``.
        GuardExceededError: If ``C(n,|X|) * C(n,|Y|)`` exceeds ``guard`` for either condition.
    """
    _validate(pair, ell, s1, s2)
    n = pair.n
    x1, y1, x2, y2 = _clamped_sizes(n, ell, s1, s2)
    cost1 = math.comb(n, x1) * math.comb(n, y1)
    cost2 = math.comb(n, x2) * math.comb(n, y2)
    if max(cost1, cost2) > guard:
        raise GuardExceededError(
            f"exhaustive check needs {max(cost1, cost2)} set pairs (guard {guard}); "
            "use the sampled checker"
        )
    d = pair.d_min
    sub = _dense(pair.g_prime)
    host = _dense(pair.g).astype(bool)

    worst1: Optional[Witness] = None
    for x in combinations(range(n), x1):
        counts = sub[:, list(x)].sum(axis=1)
        y = top_by_count(counts, y1)
        value = int(counts[y].sum())
        if worst1 is None or value > worst1.value:
            worst1 = Witness(x=list(x), y=y.tolist(), value=value)

    worst2: Optional[Witness] = None
    for x in combinations(range(n), x2):
        source = host[list(x)].any(axis=0)
        source[list(x)] = True
        counts = sub[:, source].sum(axis=1)
        y = top_by_count(counts, y2)
        value = int(counts[y].sum())
        if worst2 is None or value > worst2.value:
            worst2 = Witness(x=list(x), y=y.tolist(), value=value)

    assert worst1 is not None and worst2 is not None
    report = ConditionReport(
        ell=ell,
        s1=s1,
        s2=s2,
        d=d,
        bound1=d * s1 / 4,
        bound2=d * s2 / 4,
        cond1_holds=4 * worst1.value < d * s1,
        cond2_holds=4 * worst2.value < d * s2,
        worst_witness1=worst1,
        worst_witness2=worst2,
        pairs_checked=cost1 + cost2,
    )
    logger.info(
        "exact conditions (ell=%d, s1=%d, s2=%d, d=%d): %s / %s",
        ell,
        s1,
        s2,
        d,
        report.cond1_holds,
        report.cond2_holds,
    )
    return report


def check_thm3_conditions_sampled(
    pair: GraphPair, ell: int, s1: int, s2: int, samples: int, seed: int = 0
) -> ConditionReport:
    """Look for a violation of either condition among sampled ``X`` sets.

    A reported violation carries a verified witness; no violation means
    nothing was found and the report is marked inconclusive.
    """
    _validate(pair, ell, s1, s2)
    x1, y1, x2, y2 = _clamped_sizes(pair.n, ell, s1, s2)
    d = pair.d_min
    rng = make_rng(seed)
    worst1, tried1 = SetPairSampler(pair.g_prime, x1, rng).worst(
        ConditionObjective(pair.g_prime, y1), samples
    )
    worst2, tried2 = SetPairSampler(pair.g, x2, rng).worst(
        ConditionObjective(pair.g_prime, y2, neighbourhood_source(pair.g)), samples
    )
    cond1 = worst1 is None or 4 * worst1.value < d * s1
    cond2 = worst2 is None or 4 * worst2.value < d * s2
    return ConditionReport(
        ell=ell,
        s1=s1,
        s2=s2,
        d=d,
        bound1=d * s1 / 4,
        bound2=d * s2 / 4,
        cond1_holds=cond1,
        cond2_holds=cond2,
        worst_witness1=Witness(x=worst1.x, y=worst1.y, value=worst1.value) if worst1 else None,
        worst_witness2=Witness(x=worst2.x, y=worst2.y, value=worst2.value) if worst2 else None,
        pairs_checked=tried1 + tried2,
        exhaustive=False,
        conclusive=not (cond1 and cond2),
    )


def _padded(n: int, members: Iterable[int], size: int) -> List[int]:
    chosen = sorted(set(members))
    if len(chosen) > size:
        raise InternalConsistencyError(f"set of {len(chosen)} vertices exceeds size {size}")
    taken = set(chosen)
    for v in range(n):
        if len(chosen) == size:
            break
        if v not in taken:
            chosen.append(v)
    return sorted(chosen)


def contradiction_witness(
    pair: GraphPair, params: AlgParams, result: RunResult
) -> Optional[ProofWitness]:
    """The set pair a capped run certifies as violating one of the conditions.

    A run with target ``ell`` and caps ``(s1, s2)`` that stops on a cap
    leaves either ``|S1| = s1`` (every ``S1`` vertex sent half its ``G'``
    degree into ``P + S1 + S2``) or ``|S2| = s2`` (every ``S2`` vertex sent
    half its degree into the ``G``-neighbourhood of ``P + S1``).

    Returns:
        None unless the run stopped with ``CapHit``.

    Raises:
        ValueError: If ``params`` lacks the target or either cap.
    """
    if params.target_len is None or params.s1_cap is None or params.s2_cap is None:
        raise ValueError("contradiction witness needs target_len, s1_cap and s2_cap")
    if result.stop_reason is not StopReason.CAP_HIT:
        return None
    n = pair.n
    d = pair.d_min
    ell, s1, s2 = params.target_len, params.s1_cap, params.s2_cap
    if result.s1_size >= s1:
        x = sorted(result.s1_members)
        y = _padded(
            n, result.path_members + result.s1_members + result.s2_members, min(ell + s1 + s2, n)
        )
        value = e_between(pair.g_prime, VertexSet(n, x), VertexSet(n, y))
        condition, size = 1, s1
    else:
        x = _padded(n, result.path_members + result.s1_members, min(ell + s1, n))
        y = sorted(result.s2_members)
        source = gamma_closed(pair.g, VertexSet(n, x))
        value = e_between(pair.g_prime, source, VertexSet(n, y))
        condition, size = 2, s2
    return ProofWitness(
        condition=condition,
        x=x,
        y=y,
        value=value,
        bound=d * size / 4,
        violated=4 * value >= d * size,
    )


class CertifiedInstance(NamedTuple):
    pair: GraphPair
    ell: int
    s1: int
    s2: int
    report: ConditionReport


def search_certified_instances(
    trials: int,
    seed: int = 0,
    max_n: int = 14,
    guard: int = 10**6,
) -> List[CertifiedInstance]:
    """Randomly probe small pairs and parameter triples for certified instances.

    Each trial draws ``G ~ G(n, p)``, keeps ``G' = G`` or a random spanning
    subgraph, picks small ``(ell, s1, s2)`` with ``s1 + s2 < n`` and runs the
    exact checker. Trials whose enumeration exceeds ``guard`` are skipped.

    Returns:
        Every instance on which both conditions hold.
    """
    rng = make_rng(seed)
    found: List[CertifiedInstance] = []
    for trial in range(trials):
        n = int(rng.integers(6, max_n + 1))
        g = gen_gnp(n, float(rng.uniform(0.2, 0.9)), int(rng.integers(2**63)))
        if rng.random() < 0.5:
            g_prime = g
        else:
            edges = g.edges()
            keep = rng.random(len(edges)) < 0.7
            g_prime = build_graph(n, edges[keep])
        pair = GraphPair(g, g_prime)
        ell = int(rng.integers(1, 4))
        s1 = int(rng.integers(1, 4))
        if s1 + 1 >= n:
            continue
        s2 = int(rng.integers(1, n - s1))
        try:
            report = check_thm3_conditions_exact(pair, ell, s1, s2, guard=guard)
        except GuardExceededError:
            logger.debug("trial %d skipped by guard", trial)
            continue
        if report.both_hold:
            found.append(CertifiedInstance(pair, ell, s1, s2, report))
    logger.info("instance search: %d of %d trial(s) certified", len(found), trials)
    return found
