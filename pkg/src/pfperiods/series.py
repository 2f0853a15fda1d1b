"""Frobenius solutions of D_n at phi=0 as exact rational power series.

All indicial roots at phi=0 coincide (epsilon^(n+1) = 0), so the solution
space is spanned by

    varpi_i = sum_{k<=i} C(i,k) h_k(phi) log^(i-k) phi,   i = 0..n,

with h_k in Q[[phi]],  h_0(0)=1,  h_k(0)=0 for k>0.  Writing the formal
solution phi^eps * sum a_k(eps) phi^k, the operator identity
D_n phi^s = A(s) phi^s - B(s) phi^(s+1) gives the recursion

    A(eps+k) a_k(eps) = B(eps+k-1) a_{k-1}(eps),    a_0 = 1,

which is carried here as truncated jets in eps (order eps^n), all exact.
The table coeffs[i][k] stores [phi^k] h_i = i! * [eps^i] a_k(eps).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SeriesEngineError
from .exact import Q, binom, factorial, mpq
from .operator import FuchsianOperator, poly_eval

Jet = list  # length n+1, [eps^i] coefficients, exact rationals


def jet_mul(a: Jet, b: Jet, width: int) -> Jet:
    return [sum((a[i] * b[k - i] for i in range(k + 1)), mpq(0)) for k in range(width)]


def jet_of_poly_at(poly, center, width: int) -> Jet:
    """Jet of P(center + eps) to order eps^(width-1), exact Taylor shift."""
    out = [mpq(0)] * width
    for c in reversed(poly):
        # out <- out * (center + eps) + c
        shifted = [mpq(0)] * width
        for i in range(width):
            shifted[i] += out[i] * center
            if i + 1 < width:
                shifted[i + 1] += out[i]
        shifted[0] += c
        out = shifted
    return out


def jet_reciprocal(a: Jet, width: int) -> Jet:
    if a[0] == 0:
        raise ZeroDivisionError("jet has vanishing constant term")
    inv = [mpq(1) / a[0]]
    for k in range(1, width):
        s = sum((a[i] * inv[k - i] for i in range(1, k + 1)), mpq(0))
        inv.append(-s / a[0])
    return inv


@dataclass
class FrobeniusSolution:
    """Exact coefficient table of the canonical solutions h_0..h_n.

    coeffs[i][k] = [phi^k] h_i(phi), truncated at phi^K inclusive.
    last_jet retains [eps^i] a_K(eps) so the recursion can be resumed.
    """

    n: int
    K: int
    coeffs: list
    last_jet: Jet

    def coefficient(self, i: int, k: int):
        return self.coeffs[i][k]

    def h_series(self, i: int) -> list:
        return self.coeffs[i]


def frobenius_series(op: FuchsianOperator, K: int,
                     resume: FrobeniusSolution | None = None) -> FrobeniusSolution:
    """Solve the recursion up to phi^K; optionally extend a previous solution."""
    if K < 1:
        raise ValueError("truncation order K must be >= 1, got %r" % (K,))
    n = op.n
    width = n + 1
    if resume is not None and resume.n == n and resume.K >= K:
        return resume
    if resume is not None and resume.n == n and resume.K >= 1:
        start = resume.K
        coeffs = [list(row) for row in resume.coeffs]
        jet = list(resume.last_jet)
    else:
        start = 0
        jet = [mpq(1)] + [mpq(0)] * n
        coeffs = [[mpq(1) if i == 0 else mpq(0)] for i in range(width)]
    facts = [factorial(i) for i in range(width)]
    for k in range(start + 1, K + 1):
        bjet = jet_of_poly_at(op.theta_B, mpq(k - 1), width)
        ajet = jet_of_poly_at(op.theta_A, mpq(k), width)
        jet = jet_mul(jet_mul(jet, bjet, width), jet_reciprocal(ajet, width), width)
        for i in range(width):
            coeffs[i].append(facts[i] * jet[i])
    return FrobeniusSolution(n=n, K=K, coeffs=coeffs, last_jet=jet)


def closed_form_ratio(n: int, k: int, derivative_order: int):
    """Independent oracle for coeffs[derivative_order][k].

    Uses the product closed form

        a_k(eps) = prod_{m=1..k} B(eps+m-1) / A(eps+m)

    but evaluated along a different route than the series recursion:
    exact logarithmic differentiation.  With c ranging over the linear-factor
    roots, d^s/deps^s log(eps+c)|_0 = (-1)^(s-1) (s-1)! / c^s, the log-jet is
    summed term by term and re-exponentiated by the series-exp recursion.
    Returns derivative_order! * [eps^derivative_order] a_k(eps).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if not 0 <= derivative_order <= n:
        raise ValueError("derivative order must lie in [0, n]")
    width = derivative_order + 1
    if k == 0:
        return mpq(1) if derivative_order == 0 else mpq(0)
    # constant part: a_k(0), and log-jet coefficients g_1..g_order with g_0 := 0
    value = mpq(1)
    g = [mpq(0)] * width
    n2 = n + 2
    for m in range(1, k + 1):
        num = mpq(1)
        for l in range(1, n + 2):
            c = mpq((m - 1) * n2 + l, n2)
            num *= c
            for s in range(1, width):
                g[s] += mpq((-1) ** (s - 1) * factorial(s - 1)) / c**s
        value *= num / mpq(m) ** (n + 1)
        for s in range(1, width):
            g[s] -= (n + 1) * mpq((-1) ** (s - 1) * factorial(s - 1)) / mpq(m) ** s
    # exp of the jet: e_0 = 1, i*e_i = sum_{s=1..i} s*g_s*e_{i-s}
    e = [mpq(1)] + [mpq(0)] * derivative_order
    for i in range(1, width):
        e[i] = sum((s * g[s] * e[i - s] for s in range(1, i + 1)), mpq(0)) / i
    return factorial(derivative_order) * value * e[derivative_order]


class LogSeries:
    """Finite sum  sum_m g_m(phi) log^m phi  with exact truncated series g_m.

    Supports the theta action
        theta(g log^m) = theta(g) log^m + m g log^(m-1),
    multiplication by polynomials in phi, and linear combinations; enough to
    apply D_n symbolically and to extract log-free parts.
    """

    def __init__(self, parts: list, K: int):
        self.K = K
        self.parts = parts  # parts[m][k] = [phi^k] g_m

    @classmethod
    def zero(cls, K: int, logwidth: int = 1) -> "LogSeries":
        return cls([[mpq(0)] * (K + 1) for _ in range(logwidth)], K)

    @classmethod
    def canonical_period(cls, sol: FrobeniusSolution, i: int) -> "LogSeries":
        """varpi_i = sum_{k<=i} C(i,k) h_k log^(i-k)."""
        K = sol.K
        out = cls.zero(K, i + 1)
        for k in range(i + 1):
            c = binom(i, k)
            row = out.parts[i - k]
            hk = sol.coeffs[k]
            for kk in range(K + 1):
                row[kk] += c * hk[kk]
        return out

    def theta(self) -> "LogSeries":
        out = LogSeries.zero(self.K, len(self.parts))
        for m, g in enumerate(self.parts):
            tgt = out.parts[m]
            for k in range(self.K + 1):
                if g[k]:
                    tgt[k] += k * g[k]
            if m >= 1:
                low = out.parts[m - 1]
                for k in range(self.K + 1):
                    if g[k]:
                        low[k] += m * g[k]
        return out

    def mul_phi_poly(self, poly) -> "LogSeries":
        out = LogSeries.zero(self.K, len(self.parts))
        for m, g in enumerate(self.parts):
            tgt = out.parts[m]
            for s, c in enumerate(poly):
                if c == 0:
                    continue
                for k in range(self.K + 1 - s):
                    if g[k]:
                        tgt[k + s] += c * g[k]
        return out

    def add_scaled(self, other: "LogSeries", c) -> "LogSeries":
        width = max(len(self.parts), len(other.parts))
        out = LogSeries.zero(self.K, width)
        for m in range(width):
            tgt = out.parts[m]
            if m < len(self.parts):
                g = self.parts[m]
                for k in range(self.K + 1):
                    tgt[k] += g[k]
            if m < len(other.parts):
                g = other.parts[m]
                for k in range(self.K + 1):
                    tgt[k] += c * g[k]
        return out

    def log_free_part(self) -> list:
        return list(self.parts[0])

    def is_zero_to_order(self, order: int) -> bool:
        return all(g[k] == 0 for g in self.parts for k in range(min(order, self.K) + 1))


def apply_operator(op: FuchsianOperator, ls: LogSeries) -> LogSeries:
    """D_n acting on a LogSeries via the theta form (exact)."""
    powers = [ls]
    for _ in range(op.order):
        powers.append(powers[-1].theta())
    out = LogSeries.zero(ls.K, len(powers[-1].parts))
    for m, c in enumerate(op.theta_A):
        if c:
            out = out.add_scaled(powers[m], c)
    btot = LogSeries.zero(ls.K, len(powers[-1].parts))
    for m, c in enumerate(op.theta_B):
        if c:
            btot = btot.add_scaled(powers[m], c)
    return out.add_scaled(btot.mul_phi_poly([mpq(0), mpq(-1)]), mpq(1))


def annihilation_defect_order(op: FuchsianOperator, sol: FrobeniusSolution) -> int:
    """Smallest order where D_n(varpi_i) fails to vanish; K+1 when clean."""
    for i in range(op.n + 1):
        res = apply_operator(op, LogSeries.canonical_period(sol, i))
        for k in range(sol.K + 1):
            if any(g[k] != 0 for g in res.parts):
                return k
    return sol.K + 1


def binomial_inverse_sqrt_series(n: int, K: int) -> list:
    """Coefficients of (1 - phi)^(-(n+1)/2) up to phi^K, exact."""
    out = [mpq(1)]
    a = mpq(n + 1, 2)
    for k in range(1, K + 1):
        out.append(out[-1] * (a + k - 1) / k)
    return out


def _series_mul(a, b, K):
    return [sum((a[i] * b[k - i] for i in range(k + 1)), mpq(0)) for k in range(K + 1)]


def _series_reciprocal(a, K):
    if a[0] == 0:
        raise ZeroDivisionError("series has no reciprocal")
    inv = [mpq(1) / a[0]]
    for k in range(1, K + 1):
        s = sum((a[i] * inv[k - i] for i in range(1, k + 1)), mpq(0))
        inv.append(-s / a[0])
    return inv


def series_matrix_det(rows: list, K: int) -> list:
    """Determinant of a matrix of truncated series by elimination.

    Pivots must be unit series (nonzero constant term), which holds for the
    Wronskian matrix since U(0) = Id.
    """
    m = len(rows)
    A = [[list(e) for e in row] for row in rows]
    det = [mpq(1)] + [mpq(0)] * K
    for p in range(m):
        piv = A[p][p]
        if piv[0] == 0:
            for r in range(p + 1, m):
                if A[r][p][0] != 0:
                    A[p], A[r] = A[r], A[p]
                    det = [-c for c in det]
                    piv = A[p][p]
                    break
            else:
                raise SeriesEngineError("non-unit pivot in series determinant")
        det = _series_mul(det, piv, K)
        ipiv = _series_reciprocal(piv, K)
        for r in range(p + 1, m):
            if all(c == 0 for c in A[r][p]):
                continue
            f = _series_mul(A[r][p], ipiv, K)
            for c in range(p + 1, m):
                fc = _series_mul(f, A[p][c], K)
                A[r][c] = [A[r][c][k] - fc[k] for k in range(K + 1)]
    return det


def wronskian_series(op: FuchsianOperator, sol: FrobeniusSolution) -> list:
    """Series of det[(1/i!) theta^i varpi_j], log terms dropped.

    The determinant is single-valued around 0, so only the log-free parts
    contribute.  It must equal (1-phi)^(-(n+1)/2) to order K exactly; any
    mismatch aborts, since it means the series engine itself is wrong.
    """
    n, K = op.n, sol.K
    facts = [factorial(i) for i in range(n + 1)]
    U = [[None] * (n + 1) for _ in range(n + 1)]
    for j in range(n + 1):
        cur = LogSeries.canonical_period(sol, j)
        for i in range(n + 1):
            U[i][j] = [c / facts[i] for c in cur.log_free_part()]
            if i < n:
                cur = cur.theta()
    det = series_matrix_det(U, K)
    expected = binomial_inverse_sqrt_series(n, K)
    for k in range(K + 1):
        if det[k] != expected[k]:
            raise SeriesEngineError(
                "Wronskian determinant deviates from (1-phi)^(-%d/2) at order %d"
                % (n + 1, k)
            )
    return det
