"""induced-paths - long induced paths via a modified depth-first search."""

__version__ = "0.1.0"
__author__ = "Induced Paths Team"
__description__ = "Modified DFS for induced paths, spectral certificates, oracles and experiments"

from .exceptions import (
    ConvergenceError,
    GenerationError,
    GraphFormatError,
    GuardExceededError,
    InducedPathsError,
    InternalConsistencyError,
    InvalidGraphError,
    InvariantViolation,
    PipelineError,
)
from .graph import (
    Graph,
    GraphPair,
    VertexSet,
    build_graph,
    e_between,
    external_nbhd,
    gamma,
    gamma_closed,
)
from .search import run, run_with_invariant_checks, verify_induced_path
from .types import AlgParams, RunResult, StopReason

__all__ = [
    "AlgParams",
    "ConvergenceError",
    "GenerationError",
    "Graph",
    "GraphFormatError",
    "GraphPair",
    "GuardExceededError",
    "InducedPathsError",
    "InternalConsistencyError",
    "InvalidGraphError",
    "InvariantViolation",
    "PipelineError",
    "RunResult",
    "StopReason",
    "VertexSet",
    "build_graph",
    "e_between",
    "external_nbhd",
    "gamma",
    "gamma_closed",
    "run",
    "run_with_invariant_checks",
    "verify_induced_path",
]
