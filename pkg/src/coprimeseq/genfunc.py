"""Generating function of the coprime sequence as a formal power series.

With ``a_1 < .. < a_phi`` the totatives of ``a``,

    G(t) = sum_{n>=1} P(n) t^n
         = a t / ((t - 1)(t^phi - 1)) - (1 / (t^phi - 1)) sum_v a_v t^v.

Since ``(t - 1)(t^phi - 1) = (1 - t)(1 - t^phi)`` and ``-1/(t^phi - 1) =
1/(1 - t^phi)``, the identity holds as written around ``t = 0``:
``G(t) (1 - t - t^phi + t^(phi+1)) = a t + (1 - t) sum_v a_v t^v``. The
coefficients follow from the recurrence this denominator induces.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from .numtheory import FactoredModulus, euler_set, factor
from .sequence import eval_closed, sequence_params

__all__ = (
    "TERMS_CEILING",
    "PHI_CEILING",
    "SeriesExpansion",
    "SeriesReport",
    "numerator_poly",
    "expand_gf",
    "clear_denominator",
    "gf_vs_sequence",
    "series_csv",
)

TERMS_CEILING = 10**6
PHI_CEILING = 2**16


@dataclass(frozen=True)
class SeriesExpansion:
    """Coefficients of ``t^1 .. t^N`` of ``G(t)``."""

    a: int
    terms: tuple[int, ...] = field(repr=False)

    @property
    def N(self) -> int:
        return len(self.terms)

    def coefficient(self, n: int) -> int:
        if n == 0:
            return 0
        return self.terms[n - 1]


def _check_caps(mod: FactoredModulus, N: int) -> None:
    if N < 1:
        raise ValueError(f"need at least one term, got N={N}")
    if N > TERMS_CEILING:
        raise ValueError(f"N={N} exceeds {TERMS_CEILING} terms")
    if mod.phi > PHI_CEILING:
        raise ValueError(f"phi({mod.a}) = {mod.phi} exceeds {PHI_CEILING}")


def numerator_poly(mod: FactoredModulus | int) -> list[int]:
    """Coefficients of ``a t + (1 - t) sum_v a_v t^v``, degrees ``0 .. phi + 1``."""
    mod = factor(mod)
    num = [0] * (mod.phi + 2)
    num[1] += mod.a
    for v, t in enumerate(euler_set(mod), start=1):
        num[v] += t
        num[v + 1] -= t
    return num


def expand_gf(a: FactoredModulus | int, N: int) -> SeriesExpansion:
    """Truncate ``G(t)`` at ``t^N``.

    >>> expand_gf(10, 5).terms
    (11, 13, 17, 19, 21)
    """
    mod = factor(a)
    _check_caps(mod, N)
    phi = mod.phi
    num = numerator_poly(mod)
    g = [0] * (N + 1)
    for n in range(1, N + 1):
        x = num[n] if n < len(num) else 0
        x += g[n - 1]
        if n >= phi:
            x += g[n - phi]
        if n > phi:
            x -= g[n - phi - 1]
        g[n] = x
    return SeriesExpansion(mod.a, tuple(g[1:]))


def clear_denominator(series: SeriesExpansion) -> tuple[bool, int | None]:
    """Check ``G(t) (t - 1)(t^phi - 1) = a t - (t - 1) sum_v a_v t^v`` through degree ``N``.

    Returns ``(holds, first failing degree)``.
    """
    mod = factor(series.a)
    phi = mod.phi
    g = (0,) + series.terms
    # (t - 1)(t^phi - 1) = 1 - t - t^phi + t^(phi+1)
    den = {0: 1, 1: -1}
    den[phi] = den.get(phi, 0) - 1
    den[phi + 1] = den.get(phi + 1, 0) + 1
    rhs = [0] * (series.N + 1)
    rhs[1] += mod.a
    for v, t in enumerate(euler_set(mod), start=1):
        if v <= series.N:
            rhs[v] += t
        if v + 1 <= series.N:
            rhs[v + 1] -= t
    for d in range(series.N + 1):
        lhs = sum(c * g[d - k] for k, c in den.items() if k <= d)
        if lhs != rhs[d]:
            return False, d
    return True, None


@dataclass(frozen=True)
class SeriesReport:
    a: int
    N: int
    mismatch: int | None
    expected: int | None = None
    got: int | None = None

    @property
    def passed(self) -> bool:
        return self.mismatch is None

    def line(self) -> str:
        if self.passed:
            return f"PASS gf=sequence: {self.N} coefficients"
        return f"FAIL gf=sequence: first mismatch at n={self.mismatch} (P={self.expected}, coefficient={self.got})"


def gf_vs_sequence(a: FactoredModulus | int, N: int) -> SeriesReport:
    mod = factor(a)
    series = expand_gf(mod, N)
    params = sequence_params(mod)
    for n, c in enumerate(series.terms, start=1):
        p = eval_closed(params, n)
        if p != c:
            return SeriesReport(mod.a, N, n, p, c)
    return SeriesReport(mod.a, N, None)


def series_csv(series: SeriesExpansion) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "coefficient"])
    for n, c in enumerate(series.terms, start=1):
        w.writerow([n, c])
    return buf.getvalue()
