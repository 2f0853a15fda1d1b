"""Exact rational arithmetic helpers shared by all modules.

Rationals are gmpy2.mpq throughout (registered as numbers.Rational, so they
compare equal to fractions.Fraction of the same value).  Conversions to
mpmath floats always go through numerator/denominator so no precision is
lost before the final rounding.
"""

from __future__ import annotations

from math import comb, factorial

from gmpy2 import mpq, mpz
from mpmath import mp, mpc, mpf

Q = mpq  # canonical rational constructor


def to_mpf(q) -> mpf:
    """Round an exact rational (or int) to an mpf at current precision."""
    if isinstance(q, int):
        return mpf(q)
    return mpf(int(q.numerator)) / mpf(int(q.denominator))


def to_mpc(re, im=0) -> mpc:
    return mpc(to_mpf(re), to_mpf(im))


def binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def falling(a: int, k: int) -> int:
    """Falling factorial a·(a-1)···(a-k+1)."""
    out = 1
    for t in range(k):
        out *= a - t
    return out


def parse_rational(text: str) -> mpq:
    """Parse 'p/q', integer, or decimal strings into an exact rational."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return mpq(mpz(num.strip()), mpz(den.strip()))
    if "." in text or "e" in text or "E" in text:
        from fractions import Fraction

        return mpq(Fraction(text))
    return mpq(mpz(text))


def format_rational(q) -> str:
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%s/%s" % (q.numerator, q.denominator)


__all__ = [
    "Q",
    "mpq",
    "binom",
    "factorial",
    "falling",
    "to_mpf",
    "to_mpc",
    "parse_rational",
    "format_rational",
]
