"""Basic-step accounting.

A basic step is one assignment of a scalar to a storage cell, one field
operation, or one comparison.  Counting is off unless a :class:`StepCounter`
is activated with :func:`counting`; the hooks below are cheap no-ops then.
"""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from typing import Iterator, Optional


@dataclass
class StepCounter:
    assignments: int = 0
    arith_ops: int = 0
    comparisons: int = 0
    # peak bit length of any numerator/denominator produced by arithmetic
    bits: int = 0

    @property
    def total(self) -> int:
        return self.assignments + self.arith_ops + self.comparisons

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.assignments, self.arith_ops, self.comparisons, self.bits)


_ACTIVE: ContextVar[Optional[StepCounter]] = ContextVar("nullcert_step_counter", default=None)


def active() -> Optional[StepCounter]:
    return _ACTIVE.get()


@contextmanager
def counting(counter: Optional[StepCounter] = None) -> Iterator[StepCounter]:
    """Activate ``counter`` (a fresh one by default) for the enclosed block."""
    if counter is None:
        counter = StepCounter()
    token = _ACTIVE.set(counter)
    try:
        yield counter
    finally:
        _ACTIVE.reset(token)


def assign(n: int = 1) -> None:
    c = _ACTIVE.get()
    if c is not None:
        c.assignments += n


def compare(n: int = 1) -> None:
    c = _ACTIVE.get()
    if c is not None:
        c.comparisons += n
