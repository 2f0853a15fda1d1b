"""Arbitrary-precision evaluation of the transcendental constants in play.

The constants are monomials built from two kinds of purely imaginary atoms:

    f      = -m log m / (2 pi i)          (m = n+2 for dimension n)
    z_k    = zeta(k) / (2 pi i)^k         (odd k >= 3)

A monomial f^p * z_{k_1} ... z_{k_t} has weight p + k_1 + ... + k_t, and is
purely real or purely imaginary according to the parity of p + t.  Values
are cached per (label, working precision).  Primitive evaluations (pi,
log m, zeta(k)) are validated once per process against an independent
second algorithm at 50 digits before first use.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from mpmath import mp, mpc, mpf

from .exact import Q, factorial, mpq
from .precision import PrecisionContext

_registry: dict = {}
_registry_lock = threading.Lock()
_validated: set = set()

_VALIDATION_DPS = 50


def _machin_pi(dps: int) -> mpf:
    """pi = 16 atan(1/5) - 4 atan(1/239), Taylor terms summed directly."""
    with mp.workdps(dps + 10):
        def atan_inv(q):
            s = mpf(0)
            term = mpf(1) / q
            j = 0
            q2 = q * q
            while abs(term) > mpf(10) ** (-(dps + 8)):
                s += term / (2 * j + 1)
                term = -term / q2
                j += 1
            return s

        return +(16 * atan_inv(5) - 4 * atan_inv(239))


def _atanh_log(m: int, dps: int) -> mpf:
    """log m = 2 atanh((m-1)/(m+1)) via the odd Taylor series."""
    with mp.workdps(dps + 10):
        x = mpf(m - 1) / mpf(m + 1)
        x2 = x * x
        s = mpf(0)
        term = x
        j = 0
        while abs(term) > mpf(10) ** (-(dps + 8)):
            s += term / (2 * j + 1)
            term *= x2
            j += 1
        return +(2 * s)


def _borwein_zeta(s: int, dps: int) -> mpf:
    """zeta(s) from the alternating series with Chebyshev acceleration.

    eta(s) ~ (1/d_N) sum_{j<N} (-1)^j (d_N - d_j) / (j+1)^s with the Borwein
    integer weights d_j = N sum_{i<=j} (N+i-1)! 4^i / ((N-i)! (2i)!); the
    error decays like (3+sqrt(8))^-N, about 0.765 digits per term.
    """
    with mp.workdps(dps + 15):
        N = int(dps * 1.32) + 10
        weights = []
        acc = 0
        for i in range(N + 1):
            acc += N * factorial(N + i - 1) * 4**i // (factorial(N - i) * factorial(2 * i))
            weights.append(acc)
        dN = weights[N]
        total = mpf(0)
        for j in range(N):
            term = mpf(dN - weights[j]) / mpf(j + 1) ** s
            total += term if j % 2 == 0 else -term
        eta = total / mpf(dN)
        return +(eta / (1 - mpf(2) ** (1 - s)))


def _validate_primitive(kind: str, arg: int | None):
    key = (kind, arg)
    if key in _validated:
        return
    with mp.workdps(_VALIDATION_DPS + 10):
        tol = mpf(10) ** (-(_VALIDATION_DPS - 5))
        if kind == "pi":
            ref = _machin_pi(_VALIDATION_DPS)
            val = +mp.pi
        elif kind == "log":
            ref = _atanh_log(arg, _VALIDATION_DPS)
            val = mp.log(arg)
        elif kind == "zeta":
            ref = _borwein_zeta(arg, _VALIDATION_DPS)
            val = mp.zeta(arg)
        else:
            raise ValueError("unknown primitive %r" % (kind,))
        if abs(ref - val) > tol:
            raise ArithmeticError(
                "primary and independent evaluations of %s(%s) disagree" % (kind, arg)
            )
    _validated.add(key)


def _primitive(kind: str, arg: int | None, working_digits: int):
    key = (kind, arg, working_digits)
    with _registry_lock:
        if key in _registry:
            return _registry[key]
    _validate_primitive(kind, arg)
    with mp.workdps(working_digits):
        if kind == "pi":
            val = +mp.pi
        elif kind == "log":
            val = mp.log(arg)
        else:
            val = mp.zeta(arg)
    with _registry_lock:
        _registry[key] = val
    return val


def zeta_value(k: int, ctx: PrecisionContext) -> mpf:
    if k < 2:
        raise ValueError("zeta label needs k >= 2")
    return _primitive("zeta", k, ctx.working_digits)


def pi_value(ctx: PrecisionContext) -> mpf:
    return _primitive("pi", None, ctx.working_digits)


def log_value(m: int, ctx: PrecisionContext) -> mpf:
    if m < 2:
        raise ValueError("log label needs integer m >= 2")
    return _primitive("log", m, ctx.working_digits)


def f_log(m: int, ctx: PrecisionContext) -> mpc:
    """f = -m log m/(2 pi i) = i * m log m/(2 pi): purely imaginary."""
    with ctx.working():
        return mpc(0, 1) * m * log_value(m, ctx) / (2 * pi_value(ctx))


def zeta_atom(k: int, ctx: PrecisionContext) -> mpc:
    """z_k = zeta(k)/(2 pi i)^k for odd k: purely imaginary."""
    if k < 3 or k % 2 == 0:
        raise ValueError("zeta atoms use odd k >= 3")
    with ctx.working():
        return zeta_value(k, ctx) / (2 * pi_value(ctx) * mpc(0, 1)) ** k


@dataclass(frozen=True)
class LabeledConstant:
    """Monomial f^p * prod z_k over odd parts, tied to a fixed f-base m."""

    f_base: int           # m in f = -m log m/(2 pi i); m = n+2
    f_power: int
    zeta_parts: tuple     # sorted odd integers >= 3, possibly empty

    @property
    def weight(self) -> int:
        return self.f_power + sum(self.zeta_parts)

    @property
    def is_unit(self) -> bool:
        return self.f_power == 0 and not self.zeta_parts

    @property
    def imaginary_factor_count(self) -> int:
        return self.f_power + len(self.zeta_parts)

    @property
    def is_real(self) -> bool:
        return self.imaginary_factor_count % 2 == 0

    def value(self, ctx: PrecisionContext) -> mpc:
        with ctx.working():
            v = mpc(1, 0)
            if self.f_power:
                v *= f_log(self.f_base, ctx) ** self.f_power
            for k in self.zeta_parts:
                v *= zeta_atom(k, ctx)
            return v

    def label(self) -> str:
        if self.is_unit:
            return "1"
        parts = []
        if self.f_power == 1:
            parts.append("f")
        elif self.f_power > 1:
            parts.append("f^%d" % self.f_power)
        seen = {}
        for k in self.zeta_parts:
            seen[k] = seen.get(k, 0) + 1
        for k in sorted(seen):
            parts.append("z%d" % k if seen[k] == 1 else "z%d^%d" % (k, seen[k]))
        return "*".join(parts)


def unit_constant(f_base: int) -> LabeledConstant:
    return LabeledConstant(f_base=f_base, f_power=0, zeta_parts=())


def eval_constant(label, ctx: PrecisionContext):
    """Evaluate a structured LabeledConstant or a primitive string label.

    Strings: "1", "pi", "zeta(k)", "log(m)", "f_log(m)".
    """
    if isinstance(label, LabeledConstant):
        return label.value(ctx)
    text = str(label).strip()
    if text == "1":
        return mpc(1, 0)
    if text == "pi":
        return pi_value(ctx)
    for kind in ("zeta", "log", "f_log"):
        if text.startswith(kind + "(") and text.endswith(")"):
            arg = int(text[len(kind) + 1 : -1])
            if kind == "zeta":
                return zeta_value(arg, ctx)
            if kind == "log":
                return log_value(arg, ctx)
            return f_log(arg, ctx)
    raise ValueError("unsupported constant label %r" % (label,))


def bernoulli_numbers(count: int) -> list:
    """B_0..B_count, exact, via the defining convolution recurrence."""
    from .exact import binom

    B = [mpq(1)]
    for m in range(1, count + 1):
        s = sum((binom(m + 1, k) * B[k] for k in range(m)), mpq(0))
        B.append(-s / (m + 1))
    return B


def even_zeta_rational(m: int) -> mpq:
    """zeta(2m)/(2 pi i)^(2m) = -B_{2m} / (2 (2m)!), exact."""
    B = bernoulli_numbers(2 * m)
    return -B[2 * m] / (2 * Q(factorial(2 * m)))
