"""Normalization conventions for the solution basis.

Three flavors of the period vector are in use:

* canonical:      varpi_j          (raw Frobenius basis)
* normalized:     varpi_{R,j} = varpi_j / (2 pi i)^j
* mirror:         varpi_{M,j} = (2 pi i)^{-j} sum_k C(j,k) h_k
                                  log^{j-k}((n+2)^{-(n+2)} phi)

Conversions between flavors are invertible linear maps built from (2 pi i)
and f = -(n+2) log(n+2) / (2 pi i); mirror = PascalMatrix(f) . normalized.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from mpmath import mp

from .exact import binom
from .precision import PrecisionContext


class PeriodFlavor(Enum):
    CANONICAL = "canonical"
    NORMALIZED = "normalized"
    MIRROR = "mirror"


def f_log_value(m: int):
    """f_log(m) = -m log m / (2 pi i), purely imaginary, at current precision."""
    return -m * mp.log(m) / (2 * mp.pi * mp.mpc(0, 1))


@dataclass(frozen=True)
class PeriodConvention:
    n: int
    flavor: PeriodFlavor

    def conversion_matrix(self, target: "PeriodConvention", ctx: PrecisionContext):
        """Matrix M with  target_vector = M . self_vector, at working precision."""
        if target.n != self.n:
            raise ValueError("conversions require matching dimension n")
        with ctx.working():
            return self._to_canonical_inverse(target) * self._to_canonical(self)

    @staticmethod
    def _to_canonical(conv: "PeriodConvention"):
        # matrix sending conv-flavor vector to the canonical vector
        n = conv.n
        twopii = 2 * mp.pi * mp.mpc(0, 1)
        if conv.flavor is PeriodFlavor.CANONICAL:
            return mp.eye(n + 1)
        if conv.flavor is PeriodFlavor.NORMALIZED:
            return mp.diag([twopii**j for j in range(n + 1)])
        f = f_log_value(n + 2)
        pasc = mp.zeros(n + 1)
        for i in range(n + 1):
            for j in range(i + 1):
                pasc[i, j] = binom(i, j) * f ** (i - j)
        # mirror = Pascal(f) . normalized  =>  canonical = diag . Pascal(f)^-1 . mirror
        return mp.diag([twopii**j for j in range(n + 1)]) * pasc**-1

    @staticmethod
    def _to_canonical_inverse(conv: "PeriodConvention"):
        return PeriodConvention._to_canonical(conv) ** -1
