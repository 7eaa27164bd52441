"""Type definitions for induced-paths."""

import math
from enum import Enum, IntEnum
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator
from pydantic.alias_generators import to_camel
from typing_extensions import Self

MAX_SEED = 2**64 - 1


class CamelModel(BaseModel):
    """Report model serialised with camelCase keys."""

    model_config = ConfigDict(alias_generator=to_camel, populate_by_name=True)

    def to_json(self, indent: Optional[int] = None) -> str:
        return self.model_dump_json(by_alias=True, exclude_none=True, indent=indent)


class Label(IntEnum):
    """Partition class of a vertex during the search."""

    T = 0
    P = 1
    S1 = 2
    S2 = 3


class Action(str, Enum):
    """What a single round did."""

    START_NEW_PATH = "StartNewPath"
    POP_TO_S2 = "PopToS2"
    POP_TO_S1 = "PopToS1"
    PUSH = "Push"


class StopReason(str, Enum):
    """Why a search run ended."""

    TARGET_REACHED = "TargetReached"
    EXHAUSTED = "Exhausted"
    CAP_HIT = "CapHit"


class AlgParams(BaseModel):
    """Options for an induced-path search run."""

    order: Optional[List[int]] = Field(
        default=None, description="Vertex ordering sigma; None means the identity"
    )
    target_len: Optional[int] = Field(
        default=None, ge=1, description="Stop once the path has this many edges"
    )
    s1_cap: Optional[int] = Field(default=None, ge=1, description="Abort when |S1| reaches this")
    s2_cap: Optional[int] = Field(default=None, ge=1, description="Abort when |S2| reaches this")
    record_trace: bool = Field(default=False, description="Keep the per-round event list")
    count_path_members_in_n1: bool = Field(
        default=False,
        description="Count the path predecessor in the frozen step-2 counter",
    )
    sigma_seed: Optional[int] = Field(
        default=None, ge=0, le=MAX_SEED, description="Seed the ordering was shuffled with"
    )

    def resolve_order(self, n: int) -> List[int]:
        """Return sigma for ``n`` vertices.

        Raises:
            ValueError: If the stored ordering is not a permutation of ``0..n-1``.
        """
        if self.order is None:
            return list(range(n))
        if len(self.order) != n or sorted(self.order) != list(range(n)):
            raise ValueError(f"order is not a permutation of 0..{n - 1}")
        return list(self.order)


class RoundEvent(BaseModel):
    """One round of the search."""

    round: int = Field(..., description="1-based round index")
    action: Action = Field(..., description="What the round did")
    vertex: int = Field(..., description="Vertex acted on")


class RunResult(CamelModel):
    """Outcome of a search run."""

    best_path: List[int] = Field(default_factory=list, description="Longest path snapshot seen")
    best_len: int = Field(default=0, description="Edge count of best_path")
    rounds: int = Field(default=0, description="Rounds executed")
    stop_reason: StopReason = Field(..., description="Why the run ended")
    trace: Optional[List[RoundEvent]] = Field(default=None, description="Per-round events")
    s1_size: int = Field(default=0, description="|S1| at termination")
    s2_size: int = Field(default=0, description="|S2| at termination")
    work_counter: int = Field(default=0, description="Adjacency entries and cursor steps scanned")
    s1_members: List[int] = Field(default_factory=list, exclude=True)
    s2_members: List[int] = Field(default_factory=list, exclude=True)
    path_members: List[int] = Field(default_factory=list, exclude=True)

    @model_validator(mode="after")
    def _length_matches_path(self) -> Self:
        if self.best_len != max(len(self.best_path) - 1, 0):
            raise ValueError("best_len must equal len(best_path) - 1")
        return self

    @property
    def final_sizes(self) -> Tuple[int, int]:
        return self.s1_size, self.s2_size


class RunReport(CamelModel):
    """JSON report of a ``find`` invocation."""

    n: int
    m_g: int
    m_g_prime: int
    d_min: int
    sigma_seed: Optional[int] = None
    target_len: Optional[int] = None
    best_len: int
    best_path: List[int]
    rounds: int
    stop_reason: StopReason
    s1_size: int
    s2_size: int
    work_counter: int
    trace: Optional[List[RoundEvent]] = None


class SpectralReport(CamelModel):
    """Adjacency spectrum summary of a regular graph."""

    n: int
    d: int
    lambda2: float = Field(..., description="Second largest adjacency eigenvalue")
    lambda_min: float = Field(..., description="Smallest adjacency eigenvalue")
    lam: float = Field(..., alias="lambda", description="max(lambda2, -lambda_min)")
    method: Literal["dense", "iterative"]
    residual: float = Field(..., description="Largest eigenpair residual norm")
    alon_boppana: bool = Field(..., description="lambda^2 >= d(n-d)/(n-1) - tol")


class ConditionCheck(CamelModel):
    """One inequality of a certificate."""

    name: str
    lhs: float
    rhs: float
    relation: Literal["<", "<=", ">="]
    passed: bool = Field(..., alias="pass")
    witness_x: Optional[List[int]] = None
    witness_y: Optional[List[int]] = None


class Certificate(CamelModel):
    """Pass/fail arithmetic for one theorem's hypothesis chain."""

    theorem: Literal["Thm1", "Thm2"]
    inputs: Dict[str, float]
    derived: Dict[str, float]
    conditions: List[ConditionCheck] = Field(default_factory=list)
    overall: bool
    sampled: bool = False
    pairs_sampled: int = 0
    label: str = "exact arithmetic"

    @model_validator(mode="after")
    def _overall_is_conjunction(self) -> Self:
        if self.overall != all(c.passed for c in self.conditions):
            raise ValueError("overall must be the conjunction of the condition results")
        return self


class Witness(CamelModel):
    """A set pair together with the edge count it attains."""

    x: List[int]
    y: List[int]
    value: int


class ProofWitness(CamelModel):
    """Set pair read off a capped run that refutes one path-theorem condition."""

    condition: Literal[1, 2]
    x: List[int]
    y: List[int]
    value: int = Field(..., description="e(X,Y) or e(Gamma[X],Y) in G'")
    bound: float = Field(..., description="d/4 * s for the violated condition")
    violated: bool


class ConditionReport(CamelModel):
    """Result of checking both conditions of the main theorem."""

    ell: int
    s1: int
    s2: int
    d: int
    bound1: float = Field(..., description="d/4 * s1")
    bound2: float = Field(..., description="d/4 * s2")
    cond1_holds: bool
    cond2_holds: bool
    worst_witness1: Optional[Witness] = None
    worst_witness2: Optional[Witness] = None
    pairs_checked: int = 0
    exhaustive: bool = True
    conclusive: bool = True

    @property
    def both_hold(self) -> bool:
        return self.cond1_holds and self.cond2_holds


class GraphModel(str, Enum):
    """Generator families."""

    RANDOM_REGULAR = "RandomRegular"
    GNP = "Gnp"
    CYCLE = "Cycle"
    COMPLETE = "Complete"
    PATH = "Path"
    PETERSEN = "Petersen"
    CLIQUE_SUPERIMPOSED = "CliqueSuperimposed"


class GenSpec(BaseModel):
    """Generator request."""

    model: GraphModel = Field(..., description="Graph family")
    n: int = Field(default=10, ge=1, description="Vertex count")
    d: Optional[int] = Field(default=None, ge=0, description="Degree (RandomRegular)")
    p: Optional[float] = Field(default=None, ge=0.0, le=1.0, description="Edge probability (Gnp)")
    clique_count: Optional[int] = Field(default=None, ge=0)
    clique_size: Optional[int] = Field(default=None, ge=1)
    base: Optional["GenSpec"] = Field(default=None, description="Base model (CliqueSuperimposed)")
    seed: int = Field(default=0, ge=0, le=MAX_SEED)

    @model_validator(mode="after")
    def _parameters_fit_model(self) -> Self:
        if self.model is GraphModel.RANDOM_REGULAR:
            if self.d is None:
                raise ValueError("RandomRegular needs d")
            if (self.n * self.d) % 2:
                raise ValueError("n * d must be even")
            if self.d >= self.n:
                raise ValueError("d must be smaller than n")
        elif self.model is GraphModel.GNP and self.p is None:
            raise ValueError("Gnp needs p")
        elif self.model is GraphModel.CLIQUE_SUPERIMPOSED:
            if self.base is None or self.clique_count is None or self.clique_size is None:
                raise ValueError("CliqueSuperimposed needs base, clique_count and clique_size")
        return self


GenSpec.model_rebuild()


class ColoringStrategy(str, Enum):
    UNIFORM_RANDOM = "uniformRandom"
    ADVERSARIAL_BALANCED = "adversarialBalanced"


class RamseyParams(BaseModel):
    """Parameters of the multicolour pipeline: ``G(n*k, c*log(k)/n)``."""

    n: int = Field(..., ge=1)
    k: int = Field(..., ge=1)
    c: float = Field(..., gt=0.0)
    edge_probability: Optional[float] = Field(
        default=None, gt=0.0, le=1.0, description="Override for p (required when k = 1)"
    )

    @model_validator(mode="after")
    def _probability_in_range(self) -> Self:
        if self.edge_probability is None and not 0.0 < self.c * math.log(self.k) / self.n <= 1.0:
            raise ValueError("c * log(k) / n must lie in (0, 1]")
        return self

    @property
    def vertex_count(self) -> int:
        return self.n * self.k

    @property
    def p(self) -> float:
        if self.edge_probability is not None:
            return self.edge_probability
        return self.c * math.log(self.k) / self.n

    @property
    def peel_threshold(self) -> float:
        return self.c * math.log(self.k) / 4

    @property
    def target_len(self) -> Optional[int]:
        """``n / (c^3 log k)`` floored; None when ``log k = 0``."""
        if self.k < 2:
            return None
        return int(self.n / (self.c**3 * math.log(self.k)))


class RamseyReport(CamelModel):
    """One seed of the pipeline."""

    seed: int
    n: int
    k: int
    c: float
    p: float
    m_host: int
    m_host_per_n: float
    densest_color: int = -1
    m_densest: int = 0
    threshold: float
    survivor_n: int = 0
    survivor_min_deg: int = 0
    avg_degree_densest: float = 0.0
    avg_degree_survivor: float = 0.0
    found_len: int = 0
    target_len: Optional[int] = None
    target_met: bool = False
    checks_passed: bool = False
    witness: List[int] = Field(default_factory=list)
    failure: Optional[str] = None


class BenchOptions(BaseModel):
    """Benchmark harness options."""

    model: GraphModel = Field(default=GraphModel.RANDOM_REGULAR)
    d: int = Field(default=10, ge=1, description="Degree for RandomRegular")
    p_scale: float = Field(default=20.0, gt=0.0, description="Gnp uses p = p_scale / n")
    sizes: List[int] = Field(..., min_length=1)
    repeats: int = Field(default=3, ge=1)
    seed: int = Field(default=0, ge=0, le=MAX_SEED)
    jobs: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _model_is_benchable(self) -> Self:
        if self.model not in (GraphModel.RANDOM_REGULAR, GraphModel.GNP):
            raise ValueError("bench supports RandomRegular and Gnp")
        return self


class BenchRow(CamelModel):
    """One CSV row of the benchmark."""

    n: int
    m: int
    median_nanos: int
    work_counter: int
    work_ratio: float = Field(..., description="work_counter / (m_G + m_G' + n)")
