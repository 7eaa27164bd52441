"""Adjacency spectra of regular graphs and certificate arithmetic for the expander theorems."""

import logging
import math
from typing import Dict, List, Literal, NamedTuple, Optional, Tuple

import numpy as np
import numpy.typing as npt
from scipy import linalg
from scipy.sparse.linalg import ArpackNoConvergence, LinearOperator, eigsh

from .exceptions import ConvergenceError
from .graph import Graph, VertexSet, e_between
from .sampling import ConditionObjective, Evaluation, SetPairSampler, neighbourhood_source
from .types import Certificate, ConditionCheck, SpectralReport

logger = logging.getLogger(__name__)

TOL = 1e-9
DENSE_LIMIT = 4096
RESIDUAL_FACTOR = 1e-8
THM2_MIN_DEGREE = 2**8

FloatArray = npt.NDArray[np.float64]
GammaBound = Literal["proof", "hypothesis"]


def _slack(value: float, tol: float) -> float:
    return tol * max(1.0, abs(value))


def strictly_less(lhs: float, rhs: float, tol: float = TOL) -> bool:
    """``lhs < rhs`` with a margin of ``tol`` relative to ``rhs``."""
    return bool(lhs < rhs - _slack(rhs, tol))


def at_most(lhs: float, rhs: float, tol: float = TOL) -> bool:
    return bool(lhs <= rhs + _slack(rhs, tol))


def _regular_degree(g: Graph) -> int:
    if not g.is_regular():
        raise ValueError(
            f"graph is not regular (degrees {g.min_degree()}..{g.max_degree()})"
        )
    return g.min_degree()


def _residual(g: Graph, value: float, vector: FloatArray) -> float:
    vector = vector / np.linalg.norm(vector)
    return float(np.linalg.norm(g.matrix @ vector - value * vector))


def _dense_extremes(g: Graph) -> Tuple[float, float, float]:
    values, vectors = linalg.eigh(g.matrix.toarray().astype(np.float64))
    residual = max(
        _residual(g, values[-2], vectors[:, -2]), _residual(g, values[0], vectors[:, 0])
    )
    return float(values[-2]), float(values[0]), residual


def _arpack(operator: LinearOperator, which: str, tol: float) -> Tuple[float, FloatArray]:
    try:
        values, vectors = eigsh(operator, k=1, which=which, tol=tol)
    except ArpackNoConvergence as exc:
        residual = math.inf
        if len(exc.eigenvalues):
            vector = exc.eigenvectors[:, 0]
            residual = float(np.linalg.norm(operator @ vector - exc.eigenvalues[0] * vector))
        raise ConvergenceError(f"eigsh ({which}) did not converge", residual) from exc
    return float(values[0]), vectors[:, 0]


def _iterative_extremes(g: Graph, d: int) -> Tuple[float, float, float]:
    n = g.n
    matrix = g.matrix.astype(np.float64)

    def deflated(x: FloatArray) -> FloatArray:
        x = np.ravel(x)
        # all-ones direction moves to -(d + 1), below every other eigenvalue
        return matrix @ x - (2 * d + 1) * x.mean() * np.ones(n)

    operator = LinearOperator((n, n), matvec=deflated, dtype=np.float64)
    second, second_vec = _arpack(operator, "LA", tol=1e-12)
    smallest, smallest_vec = _arpack(
        LinearOperator((n, n), matvec=lambda x: matrix @ np.ravel(x), dtype=np.float64),
        "SA",
        tol=1e-12,
    )
    residual = max(_residual(g, second, second_vec), _residual(g, smallest, smallest_vec))
    return second, smallest, residual


def alon_boppana_check(n: int, d: int, lam: float, tol: float = TOL) -> bool:
    """``lam^2 >= d (n - d) / (n - 1)`` up to ``tol``; a False answer rules out the triple.

    Raises:
        ValueError: If ``d >= n`` or ``n < 2``.
    """
    if n < 2 or d >= n:
        raise ValueError(f"need 0 <= d < n and n >= 2, got n={n}, d={d}")
    bound = d * (n - d) / (n - 1)
    return bool(lam * lam >= bound - _slack(bound, tol))


def compute_lambda(g: Graph, dense_limit: int = DENSE_LIMIT) -> SpectralReport:
    """Second largest and smallest adjacency eigenvalues of a regular graph.

    Args:
        g: A regular graph on at least 2 vertices.
        dense_limit: Largest ``n`` handled by the dense symmetric solver; larger
            graphs use ARPACK on the operator with the all-ones direction removed.

    Returns:
        The spectral summary with ``lambda = max(lambda2, -lambda_min)``.

    Raises:
        ValueError: If ``g`` is not regular or has fewer than 2 vertices.
        ConvergenceError: If the iterative solver fails or misses the residual target.
    """
    if g.n < 2:
        raise ValueError("compute_lambda needs at least 2 vertices")
    d = _regular_degree(g)
    method: Literal["dense", "iterative"] = "dense" if g.n <= dense_limit else "iterative"
    logger.info("computing spectrum of n=%d d=%d (%s)", g.n, d, method)
    if method == "dense":
        second, smallest, residual = _dense_extremes(g)
    else:
        second, smallest, residual = _iterative_extremes(g, d)
        if residual > RESIDUAL_FACTOR * max(d, 1):
            raise ConvergenceError("eigenpair residual above target", residual)
    lam = max(second, -smallest, 0.0)
    return SpectralReport(
        n=g.n,
        d=d,
        lambda2=second,
        lambda_min=smallest,
        lam=lam,
        method=method,
        residual=residual,
        alon_boppana=alon_boppana_check(g.n, d, lam),
    )


class MixingCheck(NamedTuple):
    lhs: float
    rhs: float
    passed: bool


def mixing_check(
    g: Graph, lam: float, a: VertexSet, b: VertexSet, tol: float = TOL
) -> MixingCheck:
    """Evaluate ``|e(A,B) - |A||B| d/n| <= lam * sqrt(|A||B|)`` on a regular graph."""
    d = _regular_degree(g)
    size_a, size_b = len(a), len(b)
    lhs = abs(e_between(g, a, b) - size_a * size_b * d / g.n)
    rhs = lam * math.sqrt(size_a * size_b)
    return MixingCheck(lhs, rhs, at_most(lhs, rhs, tol))


def _check(
    name: str,
    lhs: float,
    rhs: float,
    relation: Literal["<", "<=", ">="],
    tol: float,
    witness: Optional[Evaluation] = None,
) -> ConditionCheck:
    if relation == "<":
        passed = strictly_less(lhs, rhs, tol)
    elif relation == "<=":
        passed = at_most(lhs, rhs, tol)
    else:
        passed = at_most(rhs, lhs, tol)
    check = ConditionCheck(name=name, lhs=lhs, rhs=rhs, relation=relation, passed=passed)
    if witness is not None and not passed:
        check.witness_x = witness.x
        check.witness_y = witness.y
    return check


def _floors(ell: float, s1: float, s2: float) -> Dict[str, float]:
    return {
        "ell": ell,
        "s1": s1,
        "s2": s2,
        "ellFloor": float(math.floor(ell)),
        "s1Floor": float(math.floor(s1)),
        "s2Floor": float(math.floor(s2)),
    }


def certify_thm1(
    n: int, d: int, lam: float, gamma_bound: GammaBound = "proof", tol: float = TOL
) -> Certificate:
    """Instantiate the ``(n, d, lambda)`` induced-path argument with concrete numbers.

    With ``ell = s1 = n/(32d)`` and ``s2 = lambda^2 n / d^2`` the mixing lemma
    bounds both conditions of the path theorem; the certificate evaluates
    those bounds and reports which hold.

    Args:
        n: Vertex count.
        d: Degree, ``d < n``.
        lam: Spectral parameter.
        gamma_bound: ``"proof"`` bounds ``|Gamma(X)|`` by ``d * s1`` as the
            published chain evaluates it; ``"hypothesis"`` uses ``d * (ell + s1)``.
        tol: Relative tolerance of every comparison.

    Raises:
        ValueError: If ``d >= n`` or ``d < 1``.
    """
    if not 1 <= d < n:
        raise ValueError(f"need 1 <= d < n, got n={n}, d={d}")
    if lam < 0:
        raise ValueError("lambda must be non-negative")
    s1 = n / (32 * d)
    ell = s1
    s2 = lam * lam * n / (d * d)
    y1 = ell + s1 + s2
    x2 = d * s1 if gamma_bound == "proof" else d * (ell + s1)

    cond1 = s1 * y1 * d / n + lam * math.sqrt(s1 * y1)
    cond2 = x2 * s2 * d / n + lam * math.sqrt(x2 * s2)
    conditions = [
        _check("s1 + s2 < n", s1 + s2, n, "<", tol),
        _check("condition 1: e(X,Y) < d/4 * s1", cond1, d * s1 / 4, "<", tol),
        _check("condition 2: e(Gamma[X],Y) <= d/4 * s2", cond2, d * s2 / 4, "<=", tol),
    ]
    derived = _floors(ell, s1, s2)
    derived["s2AtLeastS1"] = 1.0 if s2 >= s1 else 0.0
    certificate = Certificate(
        theorem="Thm1",
        inputs={"n": n, "d": d, "lambda": lam},
        derived=derived,
        conditions=conditions,
        overall=all(c.passed for c in conditions),
    )
    logger.info("Thm1 certificate for n=%d d=%d lambda=%g: %s", n, d, lam, certificate.overall)
    return certificate


def certify_thm2(
    n: int,
    d: int,
    c: float,
    g: Graph,
    samples: int,
    seed: int = 0,
    tol: float = TOL,
) -> Certificate:
    """Sample the upper-uniformity hypotheses of the minimum-degree theorem.

    The hypotheses quantify over every ``X`` of size ``n/(2^4 C d)`` and ``Y``
    of size ``n/(2^8 C)``; this samples ``samples`` sets ``X`` per hypothesis
    (greedy dense sets from the highest-degree vertices first, then uniform
    ones) and pairs each with its densest ``Y``. A violation is definitive,
    its absence is only evidence.

    Raises:
        ValueError: If ``d < 2^8``, ``C <= 1``, ``g.n != n`` or a set size exceeds ``n``.
    """
    if d < THM2_MIN_DEGREE:
        raise ValueError(f"minimum degree must be at least {THM2_MIN_DEGREE}, got {d}")
    if c <= 1:
        raise ValueError(f"C must exceed 1, got {c}")
    if g.n != n:
        raise ValueError(f"graph has {g.n} vertices, expected {n}")
    s1 = n / (2**5 * c * d)
    s2 = n / (2**9 * c)
    x_size = max(1, math.floor(n / (2**4 * c * d)))
    y_size = max(1, math.floor(n / (2**8 * c)))
    if x_size > n or y_size > n:
        raise ValueError(f"hypothesis set sizes ({x_size}, {y_size}) exceed n={n}")

    rng = np.random.Generator(np.random.Philox(seed))
    sampler = SetPairSampler(g, x_size, rng)
    worst1, tried1 = sampler.worst(ConditionObjective(g, y_size), samples)
    worst2, tried2 = sampler.worst(
        ConditionObjective(g, y_size, neighbourhood_source(g, closed=False)), samples
    )
    conditions: List[ConditionCheck] = [
        _check("s1 + s2 < n", s1 + s2, n, "<", tol),
        _check(
            "e(X,Y) < 2^5 C |X||Y| d/n",
            worst1.value if worst1 else 0.0,
            2**5 * c * x_size * y_size * d / n,
            "<",
            tol,
            worst1,
        ),
        _check(
            "e(Gamma(X),Y) < C |X||Y| d^2/n",
            worst2.value if worst2 else 0.0,
            c * x_size * y_size * d * d / n,
            "<",
            tol,
            worst2,
        ),
    ]
    derived = _floors(s1, s1, s2)
    derived.update({"xSize": float(x_size), "ySize": float(y_size)})
    certificate = Certificate(
        theorem="Thm2",
        inputs={"n": n, "d": d, "C": c, "dMeasured": g.min_degree(), "samples": samples},
        derived=derived,
        conditions=conditions,
        overall=all(check.passed for check in conditions),
        sampled=True,
        pairs_sampled=tried1 + tried2,
        label="sampled, not exhaustive" if samples > 0 else "untested",
    )
    logger.info(
        "Thm2 certificate for n=%d d=%d C=%g over %d sampled pair(s): %s",
        n,
        d,
        c,
        certificate.pairs_sampled,
        certificate.overall,
    )
    return certificate
