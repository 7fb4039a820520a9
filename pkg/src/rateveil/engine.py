"""Deterministic discrete-event engine.

Events are processed in strict ``(fire_at, kind priority, sequence)``
order; the numeric value of :class:`EventKind` doubles as the
same-instant priority, so a service-clock firing always precedes a
message arriving at exactly the same timestamp, which in turn precedes
source emissions, adversary observations and measurement checkpoints.
Sequence numbers are issued at schedule time, making replays exact.
"""

from __future__ import annotations

import heapq
from enum import IntEnum
from typing import Any, Callable

from .errors import SchedulingInPast
from .streams import RngStream

__all__ = ["EventKind", "Event", "EventHandle", "Engine"]


class EventKind(IntEnum):
    """Event classes; the value is the tie-break priority (lower fires first)."""

    SERVICE_CLOCK_FIRE = 0
    MESSAGE_ARRIVAL = 1
    SOURCE_EMIT = 2
    ADVERSARY_OBSERVE = 3
    MEASUREMENT_CHECKPOINT = 4


_PENDING, _FIRED, _CANCELLED = 0, 1, 2


class Event:
    __slots__ = ("fire_at", "kind", "sequence", "payload", "action", "_state")

    def __init__(self, fire_at, kind, sequence, payload, action):
        self.fire_at = fire_at
        self.kind = kind
        self.sequence = sequence
        self.payload = payload
        self.action = action
        self._state = _PENDING

    def __repr__(self):  # pragma: no cover - debugging aid
        return f"Event(t={self.fire_at}, kind={self.kind.name}, seq={self.sequence})"


class EventHandle:
    """Permits cancelling a scheduled event exactly once, before it fires."""

    __slots__ = ("_event",)

    def __init__(self, event: Event):
        self._event = event

    def cancel(self) -> None:
        ev = self._event
        if ev._state == _FIRED:
            raise RuntimeError(f"event seq={ev.sequence} already fired")
        if ev._state == _CANCELLED:
            raise RuntimeError(f"event seq={ev.sequence} already cancelled")
        ev._state = _CANCELLED

    @property
    def pending(self) -> bool:
        return self._event._state == _PENDING


class Engine:
    """Single-threaded event loop with named RNG substreams.

    One engine owns one simulation run.  Independent runs use separate
    engines (and master seeds); nothing is shared.
    """

    def __init__(self, master_seed: int = 0, stream_factory=None):
        self.clock: float = 0.0
        self.master_seed = int(master_seed)
        self._heap: list[tuple[float, int, int, Event]] = []
        self._next_sequence = 0
        self._streams: dict[str, RngStream] = {}
        self._stream_factory = stream_factory

    # -- random substreams ------------------------------------------------

    def stream(self, label: str) -> RngStream:
        """The substream for `label`, created on first use."""
        got = self._streams.get(label)
        if got is None:
            if self._stream_factory is not None:
                got = self._stream_factory.stream(label)
            else:
                got = RngStream.from_seed(self.master_seed, label)
            self._streams[label] = got
        return got

    def provide_stream(self, label: str, stream: RngStream) -> None:
        """Pre-register an externally derived stream (used by run plans)."""
        self._streams[label] = stream

    # -- scheduling --------------------------------------------------------

    def schedule(
        self,
        fire_at: float,
        kind: EventKind,
        action: Callable[[Event], None] | None = None,
        payload: Any = None,
    ) -> EventHandle:
        if fire_at < self.clock:
            raise SchedulingInPast(f"fire_at={fire_at} is before clock={self.clock}")
        seq = self._next_sequence
        self._next_sequence += 1
        event = Event(fire_at, kind, seq, payload, action)
        heapq.heappush(self._heap, (fire_at, int(kind), seq, event))
        return EventHandle(event)

    def run_until(self, t_end: float) -> int:
        """Process every event with fire_at <= t_end; clock ends at t_end.

        Returns the number of events processed (cancelled entries do
        not count).
        """
        if t_end < self.clock:
            raise SchedulingInPast(f"t_end={t_end} is before clock={self.clock}")
        heap = self._heap
        processed = 0
        while heap and heap[0][0] <= t_end:
            fire_at, _, _, event = heapq.heappop(heap)
            if event._state != _PENDING:
                continue
            self.clock = fire_at
            event._state = _FIRED
            if event.action is not None:
                event.action(event)
            processed += 1
        self.clock = t_end
        return processed

    def peek_time(self) -> float | None:
        """fire_at of the earliest pending event, or None."""
        heap = self._heap
        while heap and heap[0][3]._state != _PENDING:
            heapq.heappop(heap)
        return heap[0][0] if heap else None


def sample_exponential(stream: RngStream, rate: float) -> float:
    """Exponential delay via the stream's inverse-CDF sampler."""
    return stream.exponential(rate)


def sample_uniform_index(stream: RngStream, k: int) -> int:
    """Uniform integer on [0, k) via the stream's rejection sampler."""
    return stream.uniform_index(k)
