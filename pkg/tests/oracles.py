"""Brute-force references, deliberately independent of the package code paths."""
from math import gcd

import numpy as np


def totatives(m):
    return [x for x in range(1, m) if gcd(x, m) == 1]


def totient(m):
    return sum(1 for x in range(1, m + 1) if gcd(x, m) == 1)


def is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def coprime_ranks(a, lo, hi):
    """Rank -> value, walking outward from rank 0 = a - 1 and rank 1 = a + 1."""
    out = {}
    x, n = a - 1, 0
    while n >= lo:
        if gcd(x, a) == 1:
            if n <= hi:
                out[n] = x
            n -= 1
        x -= 1
    x, n = a + 1, 1
    while n <= hi:
        if gcd(x, a) == 1:
            if n >= lo:
                out[n] = x
            n += 1
        x += 1
    return out


def dense_coefficients(values_at):
    """Solve sum_v c_v exp(2 pi i v l / p) = r(l), l = -p+1..0, by dense linear algebra.

    ``values_at`` maps each l to the residue value there.
    """
    ls = sorted(values_at)
    p = len(ls)
    V = np.array([[np.exp(2j * np.pi * v * l / p) for v in range(p)] for l in ls])
    rhs = np.array([float(values_at[l]) for l in ls])
    return np.linalg.solve(V, rhs)


def series_by_division(num, den, N):
    """Power series num/den to degree N by schoolbook division (den[0] = +-1)."""
    q = [0] * (N + 1)
    rem = list(num) + [0] * max(0, N + 1 - len(num))
    for d in range(N + 1):
        c = rem[d] // den[0]
        q[d] = c
        for k, dk in enumerate(den):
            if d + k <= N:
                rem[d + k] -= c * dk
    return q


def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out
