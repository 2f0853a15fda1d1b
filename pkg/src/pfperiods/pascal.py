"""The commutative algebra of Pascal-shaped lower-triangular matrices.

Matrices of the form M[i][j] = C(i,j) * g[i-j] are closed under
multiplication and commute: they are the image of truncated exponential
generating series g(x) = sum g_m x^m / m! under a ring isomorphism, with
matrix product = EGF product.  Both the period matrix and the logarithm
factor live here, which is what makes the factorization well posed.
"""

from __future__ import annotations

from mpmath import mp

from .exact import binom, mpq


def egf_mul(a: list, b: list) -> list:
    """(a*b)_m = sum_s C(m,s) a_s b_{m-s}; works for exact and mp entries."""
    m = min(len(a), len(b))
    return [sum(binom(k, s) * a[s] * b[k - s] for s in range(k + 1)) for k in range(m)]


def egf_inv(a: list) -> list:
    """Reciprocal of a unipotent EGF sequence (a_0 = 1)."""
    if a[0] != 1:
        raise ValueError("only unipotent sequences are inverted here")
    inv = [a[0] ** 0]  # exact or mp one, matching the input type
    for k in range(1, len(a)):
        s = sum(binom(k, t) * a[t] * inv[k - t] for t in range(1, k + 1))
        inv.append(-s)
    return inv


def pascal_matrix(gen: list):
    """mp.matrix with entries C(i,j) * gen[i-j]; gen[0] scales the diagonal."""
    m = len(gen)
    out = mp.zeros(m)
    for i in range(m):
        for j in range(i + 1):
            out[i, j] = binom(i, j) * gen[i - j]
    return out


def pascal_matrix_exact(gen: list) -> list:
    m = len(gen)
    return [[binom(i, j) * gen[i - j] if j <= i else mpq(0) for j in range(m)]
            for i in range(m)]


def exact_mat_mul(a: list, b: list) -> list:
    m = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(m)), mpq(0)) for j in range(m)]
            for i in range(m)]
