"""Working-precision bookkeeping.

Every pipeline stage computes at digits + guard decimal digits and reports
values trusted to `digits`; the guard defaults to ceil(0.6 * digits).
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass, field

from mpmath import mp


@dataclass(frozen=True)
class PrecisionContext:
    digits: int
    guard: int = field(default=-1)

    def __post_init__(self):
        if self.digits < 5:
            raise ValueError("digits must be >= 5")
        if self.guard < 0:
            object.__setattr__(self, "guard", math.ceil(0.6 * self.digits))

    @property
    def working_digits(self) -> int:
        return self.digits + self.guard

    @contextmanager
    def working(self):
        with mp.workdps(self.working_digits):
            yield

    def raised(self, extra: int) -> "PrecisionContext":
        """Context with `extra` more reported digits (same guard rule)."""
        return PrecisionContext(self.digits + extra)

    def report_tolerance(self):
        return mp.mpf(10) ** (-self.digits)

    def acceptance_tolerance(self, margin: int | None = None):
        """Residual bound 10^-(digits - margin); margin defaults to digits/5."""
        if margin is None:
            margin = max(1, self.digits // 5)
        return mp.mpf(10) ** (-(self.digits - margin))
