"""Exception hierarchy for induced-paths."""

from typing import Optional, Tuple


class InducedPathsError(Exception):
    """Base class for all errors raised by the package."""


class GraphFormatError(InducedPathsError, ValueError):
    """Malformed edge-list or pair text."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidGraphError(InducedPathsError, ValueError):
    """Graph construction rejected its input."""

    def __init__(self, message: str, pair: Optional[Tuple[int, int]] = None) -> None:
        self.pair = pair
        if pair is not None:
            message = f"{message}: ({pair[0]}, {pair[1]})"
        super().__init__(message)


class InternalConsistencyError(InducedPathsError, RuntimeError):
    """A state the algorithm guarantees unreachable was reached."""


class InvariantViolation(InternalConsistencyError):
    """A checked-mode observation failed.

    Attributes:
        observation: Observation letter (``A``-``F``) or check name.
        round_index: Round after which the check failed.
    """

    def __init__(self, observation: str, round_index: int, detail: str) -> None:
        self.observation = observation
        self.round_index = round_index
        self.detail = detail
        super().__init__(
            f"observation {observation} violated after round {round_index}: {detail}"
        )


class GuardExceededError(InducedPathsError, ValueError):
    """An exhaustive computation would exceed its configured size guard."""


class ConvergenceError(InducedPathsError, RuntimeError):
    """The iterative eigensolver did not converge."""

    def __init__(self, message: str, residual: float) -> None:
        self.residual = residual
        super().__init__(f"{message} (achieved residual {residual:.3e})")


class GenerationError(InducedPathsError, RuntimeError):
    """A random construction failed within its attempt budget."""


class PipelineError(InducedPathsError, RuntimeError):
    """The Ramsey pipeline could not produce a graph pair.

    Attributes:
        report: The partially filled report, when one exists.
    """

    def __init__(self, message: str, report: Optional[object] = None) -> None:
        self.report = report
        super().__init__(message)
