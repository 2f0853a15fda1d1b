"""Odd-sum partitions and the product formula they index.

An odd-sum partition of j is a multiset of odd integers p with
3 <= p <= n summing to j.  These index the zeta monomials appearing in the
first column of the zeta factor of the period matrix:

    column entry at row j  =  j! * sum over partitions of
                              prod_m tau(p_m)^{l_m} / l_m!

with l_m the multiplicity of the distinct part p_m.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mpc

from .exact import Q, factorial, mpq
from .precision import PrecisionContext


@dataclass(frozen=True)
class OddSumPartition:
    parts: tuple  # non-decreasing odd integers >= 3

    def __post_init__(self):
        if any(p < 3 or p % 2 == 0 for p in self.parts):
            raise ValueError("parts must be odd integers >= 3")
        if tuple(sorted(self.parts)) != self.parts:
            raise ValueError("parts must be sorted")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> dict:
        out = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def multinomial_divisor(self) -> int:
        """prod l_m! over the multiplicities."""
        d = 1
        for l in self.multiplicities().values():
            d *= factorial(l)
        return d


def odd_sum_partitions(j: int, n: int) -> list:
    """All odd-sum partitions of j with parts in [3, n], lexicographic.

    j = 0 yields the single empty partition; j in {1, 2, 4} yield none for
    every n, since no multiset of odd parts >= 3 can sum to them.
    """
    if j < 0:
        raise ValueError("j must be >= 0")
    out = []

    def rec(remaining: int, minimum: int, acc: list):
        if remaining == 0:
            out.append(OddSumPartition(tuple(acc)))
            return
        p = minimum
        while p <= min(remaining, n):
            acc.append(p)
            rec(remaining - p, p, acc)
            acc.pop()
            p += 2
        return

    rec(j, 3, [])
    out.sort(key=lambda q: q.parts)
    return out


@dataclass
class ConjectureEntry:
    """Numeric value and symbolic expansion of the predicted column entry."""

    j: int
    value: mpc
    terms: list  # (OddSumPartition, exact multinomial coefficient j!/prod l!)


def conjecture_entry(j: int, tau, n: int, ctx: PrecisionContext) -> ConjectureEntry:
    """j! * sum over odd-sum partitions of prod tau^l / l!.

    `tau` maps odd k in [3, n] to the numeric tau value; a missing key for a
    needed part raises KeyError (the caller decides how to report it).
    """
    from .exact import to_mpf

    parts_list = odd_sum_partitions(j, n)
    terms = []
    with ctx.working():
        total = mpc(0)
        fj = factorial(j)
        for part in parts_list:
            coeff = Q(fj, part.multinomial_divisor())
            prod = mpc(1)
            for p in part.parts:
                prod *= tau[p]
            total += to_mpf(coeff) * prod
            terms.append((part, coeff))
        return ConjectureEntry(j=j, value=total, terms=terms)
