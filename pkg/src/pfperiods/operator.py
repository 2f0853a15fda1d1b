"""The order-(n+1) Fuchsian operator of the degree-(n+2) hypersurface pencil.

The operator is

    D_n = theta^(n+1) - phi * prod_{k=1..n+1} (theta + k/(n+2)),

with theta = phi * d/dphi.  It is kept in two exactly equivalent forms:

* ``theta_form``: the pair of polynomials (A, B) in theta with
  D_n = A(theta) - phi*B(theta); this is the form the series recursion
  reads off directly, since D_n phi^s = A(s) phi^s - B(s) phi^(s+1).
* ``dcoeff_form``: polynomials p_j(phi) with D_n = sum_j p_j (d/dphi)^j;
  this is the form the Taylor-recentering transport needs.

Both carry exact rational coefficients, and construction cross-checks them
against each other on monomial probes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import SeriesEngineError
from .exact import Q, binom, falling, mpq

Poly = list  # list of mpq coefficients, index = power


def poly_trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def poly_add(a: Poly, b: Poly) -> Poly:
    m = max(len(a), len(b))
    return poly_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(m)])


def poly_scale(a: Poly, c) -> Poly:
    return poly_trim([c * x for x in a])


def poly_shift_up(a: Poly) -> Poly:
    """Multiply by the variable."""
    return [mpq(0)] + list(a) if a else []


def poly_diff(a: Poly) -> Poly:
    return [i * a[i] for i in range(1, len(a))]


def poly_eval(a: Poly, x):
    v = mpq(0) if not isinstance(x, complex) else 0
    for c in reversed(a):
        v = v * x + c
    return v


def _theta_compose(pj: list[Poly]) -> list[Poly]:
    """Left-compose an operator sum_j p_j(phi) d^j with theta = phi d/dphi."""
    out = [[] for _ in range(len(pj) + 1)]
    for j, p in enumerate(pj):
        # (phi d/dphi)(p d^j) = phi p' d^j + phi p d^(j+1)
        out[j] = poly_add(out[j], poly_shift_up(poly_diff(p)))
        out[j + 1] = poly_add(out[j + 1], poly_shift_up(p))
    return [poly_trim(p) for p in out]


@dataclass
class FuchsianOperator:
    """Exact representation of D_n in theta form and d/dphi form."""

    n: int
    order: int
    theta_A: Poly  # A(theta) = theta^(n+1)
    theta_B: Poly  # B(theta) = prod (theta + k/(n+2))
    dcoeff: list = field(repr=False)  # p_j(phi), j = 0..n+1

    def indicial_at_zero(self) -> Poly:
        """Indicial polynomial at phi=0 (equals A; root 0 with multiplicity n+1)."""
        return self.theta_A

    def apply_theta_form_to_monomial(self, m: int) -> dict:
        """D_n phi^m via the theta form: {exponent: rational coefficient}."""
        out = {}
        a = poly_eval(self.theta_A, mpq(m))
        b = poly_eval(self.theta_B, mpq(m))
        if a:
            out[m] = a
        if b:
            out[m + 1] = out.get(m + 1, mpq(0)) - b
        return {e: c for e, c in out.items() if c}

    def apply_dcoeff_form_to_monomial(self, m: int) -> dict:
        """D_n phi^m via the expanded form: {exponent: rational coefficient}."""
        out = {}
        for j, p in enumerate(self.dcoeff):
            ff = falling(m, j)
            if ff == 0:
                continue
            for s, c in enumerate(p):
                if c == 0:
                    continue
                e = m - j + s
                out[e] = out.get(e, mpq(0)) + c * ff
        return {e: c for e, c in out.items() if c}

    def leading_coefficient(self) -> Poly:
        return self.dcoeff[self.order]


def build_operator(n: int) -> FuchsianOperator:
    """Construct D_n with both forms, verified against each other.

    Raises ValueError for n < 1 (the pencil degenerates) and
    SeriesEngineError if the two forms disagree on monomial probes.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("dimension n must be a positive integer, got %r" % (n,))
    order = n + 1
    theta_A = [mpq(0)] * order + [mpq(1)]
    theta_B = [mpq(1)]
    for k in range(1, order + 1):
        c = mpq(k, n + 2)
        # multiply B by (theta + c)
        theta_B = poly_add(poly_shift_up(theta_B), poly_scale(theta_B, c))

    # expanded form: compose theta repeatedly, then subtract phi * B(theta)
    ident = [[mpq(1)]]
    a_op = ident
    for _ in range(order):
        a_op = _theta_compose(a_op)
    b_op = ident
    for k in range(1, order + 1):
        c = mpq(k, n + 2)
        composed = _theta_compose(b_op)
        b_op = [
            poly_add(composed[j], poly_scale(b_op[j], c) if j < len(b_op) else [])
            for j in range(len(composed))
        ]
    dcoeff = []
    for j in range(order + 1):
        pa = a_op[j] if j < len(a_op) else []
        pb = poly_shift_up(b_op[j]) if j < len(b_op) else []
        dcoeff.append(poly_add(pa, poly_scale(pb, mpq(-1))))

    op = FuchsianOperator(n=n, order=order, theta_A=theta_A, theta_B=theta_B, dcoeff=dcoeff)

    for m in range(2 * n + 5):
        if op.apply_theta_form_to_monomial(m) != op.apply_dcoeff_form_to_monomial(m):
            raise SeriesEngineError(
                "theta form and d/dphi form disagree on phi^%d for n=%d" % (m, n)
            )
    lead = poly_trim(op.leading_coefficient())
    if lead != [mpq(0)] * order + [mpq(1), mpq(-1)]:
        raise SeriesEngineError("leading coefficient is not phi^%d (1 - phi)" % order)
    return op


def t0_matrix(n: int) -> list:
    """Local monodromy at phi=0 on the normalized basis: entries C(i,k)."""
    return [[Q(binom(i, k)) for k in range(n + 1)] for i in range(n + 1)]
