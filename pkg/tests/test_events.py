import pytest

from ..events import Event, EventKind, EventQueue, SimulationError


def test_pop_batch_orders_by_time():
    queue = EventQueue()
    queue.push(Event(2.0, EventKind.FIRE, 1))
    queue.push(Event(1.0, EventKind.FIRE, 2))
    assert queue.pop_batch() == [Event(1.0, EventKind.FIRE, 2)]
    assert queue.now == 1.0
    assert queue.pop_batch() == [Event(2.0, EventKind.FIRE, 1)]
    assert queue.pop_batch() == []


def test_same_instant_batch_is_ordered_by_kind_then_index():
    queue = EventQueue()
    queue.push(Event(1.0, EventKind.SAMPLE))
    queue.push(Event(1.0, EventKind.FIRE, 3))
    queue.push(Event(1.0 + 1e-13, EventKind.FIRE, 1))
    queue.push(Event(1.0, EventKind.PLAN_EXPIRY, 2))
    batch = queue.pop_batch()
    assert [(e.kind, e.oscillator) for e in batch] == [
        (EventKind.PLAN_EXPIRY, 2),
        (EventKind.FIRE, 1),
        (EventKind.FIRE, 3),
        (EventKind.SAMPLE, None),
    ]
    assert queue.is_empty()


def test_stale_events_are_skipped():
    queue = EventQueue()
    queue.push(Event(1.0, EventKind.FIRE, 1, generation=0))
    queue.push(Event(1.5, EventKind.FIRE, 1, generation=1))
    batch = queue.pop_batch(lambda event: event.generation == 1)
    assert batch == [Event(1.5, EventKind.FIRE, 1, generation=1)]


def test_push_into_past_raises():
    queue = EventQueue()
    queue.push(Event(1.0, EventKind.FIRE, 1))
    queue.pop_batch()
    with pytest.raises(SimulationError):
        queue.push(Event(0.5, EventKind.FIRE, 1))


def test_peek_clear_and_len():
    queue = EventQueue()
    assert queue.peek() is None
    queue.push(Event(0.5, EventKind.SAMPLE))
    queue.push(Event(0.25, EventKind.FIRE, 4))
    assert len(queue) == 2
    assert queue.peek() == Event(0.25, EventKind.FIRE, 4)
    queue.clear()
    assert queue.is_empty()


def test_simulation_error_mentions_time():
    error = SimulationError("boom", 1.5)
    assert "t=1.5" in str(error)
    assert error.time == 1.5
