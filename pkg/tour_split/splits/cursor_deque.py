"""
Index deque with interior cursors.

Elements are depot-copy or customer indices in 0..capacity-1 and are always
inserted in increasing order, so each index is live at most once. That lets
the deque be an intrusive doubly linked list over two fixed arrays (prev and
next links indexed by element value): every operation is O(1) worst case,
interior removals next to a cursor included, and nothing is allocated after
construction.

Cursors (best, feas, no_warp) hold an element value or None. Removing an
element that a cursor points at is a caller bug, checked with assert.
"""
from typing import Iterator, List, Optional

from tour_split.core.exceptions import ContractViolationException
from tour_split.models.result import OpCounters

NIL = -1


class CursorDeque:
    """Double-ended queue of increasing indices with best/feas/no_warp cursors."""

    __slots__ = (
        "_capacity",
        "_prev",
        "_next",
        "_head",
        "_tail",
        "_size",
        "best",
        "feas",
        "no_warp",
        "pushes",
        "pops",
        "cursor_moves",
        "cursor_retreats",
    )

    def __init__(self, capacity: int):
        self._capacity = capacity
        self._prev: List[int] = [NIL] * capacity
        self._next: List[int] = [NIL] * capacity
        self._head = NIL
        self._tail = NIL
        self._size = 0
        self.best: Optional[int] = None
        self.feas: Optional[int] = None
        self.no_warp: Optional[int] = None
        self.pushes = 0
        self.pops = 0
        self.cursor_moves = 0
        self.cursor_retreats = 0

    # ── Plain deque ─────────────────────────────────────────────────

    def front(self) -> int:
        if self._size == 0:
            raise ContractViolationException("front() on an empty deque")
        return self._head

    def front2(self) -> int:
        if self._size < 2:
            raise ContractViolationException("front2() needs at least two elements")
        return self._next[self._head]

    def back(self) -> int:
        if self._size == 0:
            raise ContractViolationException("back() on an empty deque")
        return self._tail

    def not_empty(self) -> bool:
        return self._size > 0

    def size(self) -> int:
        return self._size

    def __len__(self) -> int:
        return self._size

    def __iter__(self) -> Iterator[int]:
        v = self._head
        while v != NIL:
            yield v
            v = self._next[v]

    def insert_back(self, v: int) -> None:
        if not 0 <= v < self._capacity:
            raise ContractViolationException(f"index {v} outside capacity {self._capacity}")
        if self._size and v <= self._tail:
            raise ContractViolationException(
                f"insert_back({v}) after {self._tail}: indices must increase"
            )
        self._prev[v] = self._tail
        self._next[v] = NIL
        if self._size:
            self._next[self._tail] = v
        else:
            self._head = v
        self._tail = v
        self._size += 1
        self.pushes += 1

    def remove_front(self) -> None:
        self._unlink(self.front())

    def remove_front2(self) -> None:
        self._unlink(self.front2())

    def remove_back(self) -> None:
        self._unlink(self.back())

    def _unlink(self, v: int) -> None:
        assert v != self.best and v != self.feas and v != self.no_warp, (
            f"element {v} removed while a cursor still points at it"
        )
        before, after = self._prev[v], self._next[v]
        if before == NIL:
            self._head = after
        else:
            self._next[before] = after
        if after == NIL:
            self._tail = before
        else:
            self._prev[after] = before
        self._prev[v] = self._next[v] = NIL
        self._size -= 1
        self.pops += 1

    def _neighbor(self, links: List[int], cursor: Optional[int], name: str) -> int:
        if cursor is None:
            raise ContractViolationException(f"{name}: cursor is null")
        v = links[cursor]
        if v == NIL:
            raise ContractViolationException(f"{name}: no such neighbor of {cursor}")
        return v

    # ── best cursor ─────────────────────────────────────────────────

    def prev(self) -> int:
        return self._neighbor(self._prev, self.best, "prev")

    def next(self) -> int:
        return self._neighbor(self._next, self.best, "next")

    def has_prev(self) -> bool:
        return self.best is not None and self._prev[self.best] != NIL

    def has_next(self) -> bool:
        return self.best is not None and self._next[self.best] != NIL

    def move_prev(self) -> None:
        self.best = self.prev()
        self.cursor_retreats += 1

    def move_next(self) -> None:
        self.best = self.next()
        self.cursor_moves += 1

    def remove_prev(self) -> None:
        self._unlink(self.prev())

    def remove_next(self) -> None:
        self._unlink(self.next())

    # ── feas cursor ─────────────────────────────────────────────────

    def feas_prev(self) -> int:
        return self._neighbor(self._prev, self.feas, "feas_prev")

    def feas_has_prev(self) -> bool:
        return self.feas is not None and self._prev[self.feas] != NIL

    def feas_has_next(self) -> bool:
        return self.feas is not None and self._next[self.feas] != NIL

    def remove_feas_prev(self) -> None:
        self._unlink(self.feas_prev())

    def move_feas_next(self) -> None:
        self.feas = self._neighbor(self._next, self.feas, "move_feas_next")
        self.cursor_moves += 1

    # ── no_warp cursor ──────────────────────────────────────────────

    def no_warp_has_next(self) -> bool:
        return self.no_warp is not None and self._next[self.no_warp] != NIL

    def move_no_warp_next(self) -> None:
        self.no_warp = self._neighbor(self._next, self.no_warp, "move_no_warp_next")
        self.cursor_moves += 1

    def counters(self) -> OpCounters:
        return OpCounters(
            pushes=self.pushes,
            pops=self.pops,
            cursor_moves=self.cursor_moves,
            cursor_retreats=self.cursor_retreats,
        )
