"""
CursorDeque tests: direct operations plus a state machine that shadows the
deque with a plain list.
"""
import pytest
from hypothesis import settings as hyp_settings, strategies as st
from hypothesis.stateful import RuleBasedStateMachine, invariant, precondition, rule

from tour_split.core.exceptions import ContractViolationException
from tour_split.splits.cursor_deque import CursorDeque


# ── Direct ──────────────────────────────────────────────────────────────

def test_insert_and_remove_at_both_ends():
    dq = CursorDeque(10)
    for v in (1, 3, 4, 7):
        dq.insert_back(v)
    assert list(dq) == [1, 3, 4, 7]
    assert dq.front() == 1 and dq.front2() == 3 and dq.back() == 7
    dq.remove_front2()
    dq.remove_back()
    assert list(dq) == [1, 4]
    assert dq.counters().pushes == 4 and dq.counters().pops == 2


def test_cursor_navigation_and_interior_removal():
    dq = CursorDeque(6)
    for v in range(5):
        dq.insert_back(v)
    dq.best = 2
    assert dq.prev() == 1 and dq.next() == 3
    dq.remove_prev()
    dq.remove_next()
    assert list(dq) == [0, 2, 4]
    dq.move_next()
    dq.move_prev()
    assert dq.best == 2
    counters = dq.counters()
    assert counters.cursor_moves == 1 and counters.cursor_retreats == 1
    assert counters.total == 5 + 2 + 1


def test_feas_and_no_warp_cursors():
    dq = CursorDeque(4)
    for v in range(4):
        dq.insert_back(v)
    dq.feas = dq.no_warp = 0
    dq.move_feas_next()
    dq.move_no_warp_next()
    assert dq.feas == 1 and dq.no_warp == 1
    assert dq.feas_prev() == 0
    dq.no_warp = 2
    dq.feas = 2
    dq.remove_feas_prev()
    assert list(dq) == [0, 2, 3]
    assert dq.feas_has_next() and dq.feas_has_prev()


@pytest.mark.parametrize("operation", ["front", "back", "front2", "remove_front", "remove_back"])
def test_empty_access_is_contract_violation(operation):
    with pytest.raises(ContractViolationException):
        getattr(CursorDeque(3), operation)()


def test_null_cursor_is_contract_violation():
    dq = CursorDeque(3)
    dq.insert_back(0)
    with pytest.raises(ContractViolationException):
        dq.next()
    dq.best = 0
    assert not dq.has_next() and not dq.has_prev()
    with pytest.raises(ContractViolationException):
        dq.move_next()


@pytest.mark.parametrize("v", [2, 5, -1])
def test_insert_must_increase_within_capacity(v):
    dq = CursorDeque(5)
    dq.insert_back(2)
    with pytest.raises(ContractViolationException):
        dq.insert_back(v)


# ── Shadow model ────────────────────────────────────────────────────────

CAPACITY = 60
CURSORS = ("best", "feas", "no_warp")


class DequeMachine(RuleBasedStateMachine):
    """Deque and its three cursors against a plain list."""

    def __init__(self):
        super().__init__()
        self._fresh()

    def _fresh(self):
        self.dq = CursorDeque(CAPACITY)
        self.model = []
        self.next_value = 0

    def _free(self, v):
        return all(getattr(self.dq, name) != v for name in CURSORS)

    def _index(self, name):
        return self.model.index(getattr(self.dq, name))

    @rule()
    def reset(self):
        self._fresh()

    @precondition(lambda self: self.next_value < CAPACITY)
    @rule(gap=st.integers(min_value=0, max_value=3))
    def insert_back(self, gap):
        v = min(self.next_value + gap, CAPACITY - 1)
        self.dq.insert_back(v)
        self.model.append(v)
        self.next_value = v + 1

    @precondition(lambda self: self.model and self._free(self.model[0]))
    @rule()
    def remove_front(self):
        self.dq.remove_front()
        self.model.pop(0)

    @precondition(lambda self: self.model and self._free(self.model[-1]))
    @rule()
    def remove_back(self):
        self.dq.remove_back()
        self.model.pop()

    @precondition(lambda self: len(self.model) >= 2 and self._free(self.model[1]))
    @rule()
    def remove_front2(self):
        self.dq.remove_front2()
        self.model.pop(1)

    @precondition(lambda self: self.model)
    @rule(name=st.sampled_from(CURSORS), data=st.data())
    def place_cursor(self, name, data):
        setattr(self.dq, name, data.draw(st.sampled_from(self.model)))

    # best

    @precondition(lambda self: self.dq.has_next())
    @rule()
    def move_next(self):
        expected = self.model[self._index("best") + 1]
        self.dq.move_next()
        assert self.dq.best == expected

    @precondition(lambda self: self.dq.has_prev())
    @rule()
    def move_prev(self):
        expected = self.model[self._index("best") - 1]
        self.dq.move_prev()
        assert self.dq.best == expected

    @precondition(lambda self: self.dq.has_next() and self._free(self.dq.next()))
    @rule()
    def remove_next(self):
        self.model.pop(self._index("best") + 1)
        self.dq.remove_next()

    @precondition(lambda self: self.dq.has_prev() and self._free(self.dq.prev()))
    @rule()
    def remove_prev(self):
        self.model.pop(self._index("best") - 1)
        self.dq.remove_prev()

    # feas and no_warp

    @precondition(lambda self: self.dq.feas_has_next())
    @rule()
    def move_feas_next(self):
        expected = self.model[self._index("feas") + 1]
        self.dq.move_feas_next()
        assert self.dq.feas == expected

    @precondition(lambda self: self.dq.no_warp_has_next())
    @rule()
    def move_no_warp_next(self):
        expected = self.model[self._index("no_warp") + 1]
        self.dq.move_no_warp_next()
        assert self.dq.no_warp == expected

    @precondition(lambda self: self.dq.feas_has_prev() and self._free(self.dq.feas_prev()))
    @rule()
    def remove_feas_prev(self):
        self.model.pop(self._index("feas") - 1)
        self.dq.remove_feas_prev()

    @precondition(
        lambda self: self.dq.feas_has_prev()
        and self.dq.no_warp == self.dq.feas_prev()
        and self.dq.best != self.dq.no_warp
    )
    @rule()
    def remove_feas_prev_under_no_warp(self):
        # the soft time-window Split hands no_warp over to feas before the removal
        self.model.pop(self._index("feas") - 1)
        self.dq.no_warp = self.dq.feas
        self.dq.remove_feas_prev()
        assert self.dq.no_warp == self.dq.feas

    @invariant()
    def matches_model(self):
        assert list(self.dq) == self.model
        assert len(self.dq) == len(self.model)
        assert self.dq.not_empty() == bool(self.model)
        if self.model:
            assert self.dq.front() == self.model[0]
            assert self.dq.back() == self.model[-1]

    @invariant()
    def cursors_are_live(self):
        for name in CURSORS:
            if getattr(self.dq, name) is not None:
                assert getattr(self.dq, name) in self.model, name
        if self.dq.best is not None:
            i = self._index("best")
            assert self.dq.has_prev() == (i > 0)
            assert self.dq.has_next() == (i < len(self.model) - 1)
        if self.dq.feas is not None:
            i = self._index("feas")
            assert self.dq.feas_has_prev() == (i > 0)
            assert self.dq.feas_has_next() == (i < len(self.model) - 1)
        if self.dq.no_warp is not None:
            i = self._index("no_warp")
            assert self.dq.no_warp_has_next() == (i < len(self.model) - 1)

    @invariant()
    def work_is_counted(self):
        counters = self.dq.counters()
        assert counters.pushes - counters.pops == len(self.model)


DequeMachine.TestCase.settings = hyp_settings(max_examples=80, stateful_step_count=60, deadline=None)
TestDequeMachine = DequeMachine.TestCase
