"""Exception types shared across the simulator."""


class SimulationError(Exception):
    """Base class for simulator-specific failures."""


class SchedulingInPast(SimulationError):
    """An event was scheduled before the current simulation clock."""


class NonPositiveRate(SimulationError):
    """A rate parameter must be strictly positive."""


class ZeroRange(SimulationError):
    """A uniform integer draw needs at least one outcome."""


class DisconnectedAfterRetries(SimulationError):
    """Random placement never produced a connected topology."""

    def __init__(self, attempts: int, message: str | None = None):
        self.attempts = attempts
        super().__init__(message or f"topology still disconnected after {attempts} attempt(s)")


class InsufficientSamples(SimulationError):
    """Too few arrivals for the inter-arrival rate estimator."""


class EmptyWindow(SimulationError):
    """A counting window contained no arrivals."""


class TooFewSamples(SimulationError):
    """Too few gaps for a meaningful goodness-of-fit test."""


class EmptySamples(SimulationError):
    """Quartiles need at least one sample."""


class NoDeliveries(SimulationError):
    """Latency statistics need at least one delivered message."""


class UnknownParameter(SimulationError):
    """Sweep parameter name is not recognised."""


class ConfigInvalid(SimulationError):
    """Scenario configuration failed validation."""

    def __init__(self, problems: list[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))
