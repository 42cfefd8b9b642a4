"""The doubly infinite sequence of integers coprime to a modulus.

``P(n)`` lists, in increasing order, every integer coprime to ``a``. It is
indexed so that ``P(1) = a + 1`` and ``P(0) = a - 1``, which puts the
totatives ``1 < ... < a - 1`` at ``n = -phi + 1 .. 0``.

Two parameterizations describe the same sequence:

* ``"phi"``: ``P(n) = a + P(n - phi)`` with the ``phi + 1`` values at
  ``n = -phi + 1 .. 1``.
* ``"Q"`` (default): the minimal ``P(n) = R + P(n - Q)`` with the ``Q + 1``
  values at ``n = -Q + 1 .. 1``. These are the totatives of ``R`` lifted by
  ``a - R``; for squarefree ``a`` they are the totatives of ``R`` themselves.

The sequence normalized at ``P(1) = R + 1`` is the sequence of the modulus
``R`` itself, so it is available as ``sequence_params(mod.R)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .numtheory import FactoredModulus, ModulusError, euler_set, factor

__all__ = (
    "PERIOD_CHOICES",
    "RECURRENCE_STEP_CEILING",
    "ORACLE_CANDIDATE_CEILING",
    "WINDOW_CEILING",
    "SequenceParams",
    "CheckResult",
    "VerificationReport",
    "sequence_params",
    "eval_closed",
    "eval_recurrence",
    "oracle",
    "oracle_window",
    "shift_between",
    "verify_window",
    "values",
)

PERIOD_CHOICES = ("Q", "phi")
RECURRENCE_STEP_CEILING = 10**7
ORACLE_CANDIDATE_CEILING = 10**8
WINDOW_CEILING = 10**7


@dataclass(frozen=True)
class SequenceParams:
    """Recurrence data: ``P(n) = step + P(n - period)`` plus the base window.

    ``base_conditions[j]`` is ``P(-period + 1 + j)`` for ``j = 0 .. period``.
    """

    mod: FactoredModulus
    period: int
    step: int
    base_conditions: tuple[int, ...] = field(repr=False)

    @property
    def period_choice(self) -> str:
        return "phi" if self.period == self.mod.phi and self.step == self.mod.a else "Q"

    @property
    def first_index(self) -> int:
        return -self.period + 1

    def initial_conditions(self) -> dict[int, int]:
        """Map ``n -> P(n)`` over the base window ``[-period + 1, 1]``."""
        return {self.first_index + j: v for j, v in enumerate(self.base_conditions)}


def sequence_params(a: int | FactoredModulus, period_choice: str = "Q") -> SequenceParams:
    mod = factor(a)
    if period_choice == "Q":
        lift = mod.a - mod.R
        window = [lift + t for t in euler_set(mod.R)]
        period, step = mod.Q, mod.R
    elif period_choice == "phi":
        window = list(euler_set(mod))
        period, step = mod.phi, mod.a
    else:
        raise ValueError(f"period_choice must be one of {PERIOD_CHOICES}, got {period_choice!r}")
    window.append(mod.a + 1)
    return SequenceParams(mod, period, step, tuple(window))


def eval_closed(params: SequenceParams, n: int) -> int:
    """``P(n)`` from ``P(n) = k * step + P(n - k * period)`` with ``k = ceil(n / period)``.

    The remainder ``n - k * period`` lands in ``[-period + 1, 0]``.
    """
    p = params.period
    k = -(-n // p)
    return k * params.step + params.base_conditions[n - k * p + p - 1]


def eval_recurrence(params: SequenceParams, n: int, *, max_steps: int = RECURRENCE_STEP_CEILING) -> int:
    """``P(n)`` by stepping the recurrence out of the base window one period at a time."""
    p, step = params.period, params.step
    lo = -p + 1
    if n > 1:
        steps = (n - 1 + p - 1) // p
    elif n < lo:
        steps = (lo - n + p - 1) // p
    else:
        steps = 0
    if steps > max_steps:
        raise OverflowError(f"n = {n} needs {steps} recurrence steps (ceiling {max_steps})")
    m, acc = n, 0
    while m > 1:
        m -= p
        acc += step
    while m < lo:
        m += p
        acc -= step
    return acc + params.base_conditions[m - lo]


def _coprime_offsets(a: int, count: int, max_candidates: int) -> np.ndarray:
    """The first ``count`` positive ``d`` with ``gcd(d, a) = 1``."""
    found = []
    have = 0
    start = 1
    chunk = max(1024, 2 * count)
    while have < count:
        if start - 1 + chunk > max_candidates:
            chunk = max_candidates - (start - 1)
            if chunk <= 0:
                raise OverflowError(
                    f"enumeration for modulus {a} exceeds {max_candidates} candidates"
                )
        d = np.arange(start, start + chunk, dtype=np.int64)
        hits = d[np.gcd(d, np.int64(a)) == 1]
        found.append(hits)
        have += hits.size
        start += chunk
    return np.concatenate(found)[:count]


def oracle_window(a: int, n_lo: int, n_hi: int, *, max_candidates: int = ORACLE_CANDIDATE_CEILING) -> list[int]:
    """``P(n_lo) .. P(n_hi)`` by direct enumeration of integers coprime to ``a``.

    Rank 1 is ``a + 1`` and rank 0 is ``a - 1``. Since ``gcd(a + d, a) =
    gcd(a - d, a) = gcd(d, a)``, ranks ``1, 2, ..`` are ``a + d_1, a + d_2, ..``
    and ranks ``0, -1, ..`` are ``a - d_1, a - d_2, ..`` where ``d_1 < d_2 < ..``
    are the positive integers coprime to ``a``.
    """
    a = int(a)
    if a < 2:
        raise ModulusError(f"modulus must be >= 2, got {a}")
    if n_lo > n_hi:
        raise ValueError("empty window")
    need = max(n_hi, 1 - n_lo, 0)
    d = _coprime_offsets(a, need, max_candidates).tolist() if need else []
    out = []
    for n in range(n_lo, n_hi + 1):
        out.append(a + d[n - 1] if n >= 1 else a - d[-n])
    return out


def oracle(a: int, n: int, *, max_candidates: int = ORACLE_CANDIDATE_CEILING) -> int:
    """The integer of rank ``n`` among all integers coprime to ``a``."""
    return oracle_window(int(a), n, n, max_candidates=max_candidates)[0]


def shift_between(a: int | FactoredModulus, b: int | FactoredModulus) -> int:
    """Index shift ``s`` with ``P_b(n) = P_a(n + s)`` for moduli sharing a radical.

    >>> shift_between(6, 12)
    2
    """
    fa, fb = factor(a), factor(b)
    if fa.R != fb.R:
        raise ValueError(f"radicals differ: R({fa.a}) = {fa.R}, R({fb.a}) = {fb.R}")
    return fa.Q * (fb.a - fa.a) // fa.R


@dataclass(frozen=True)
class CheckResult:
    name: str
    checked: int
    failures: int = 0
    witness: int | None = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def merge(self, other: "CheckResult") -> "CheckResult":
        if self.name != other.name:
            raise ValueError(f"cannot merge {self.name!r} with {other.name!r}")
        if self.witness is None:
            witness, detail = other.witness, other.detail
        elif other.witness is None or self.witness <= other.witness:
            witness, detail = self.witness, self.detail
        else:
            witness, detail = other.witness, other.detail
        return CheckResult(
            self.name, self.checked + other.checked, self.failures + other.failures, witness, detail
        )


@dataclass(frozen=True)
class VerificationReport:
    a: int
    n_lo: int
    n_hi: int
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """Combine reports of overlapping or adjacent windows of the same modulus."""
        if self.a != other.a:
            raise ValueError("reports are for different moduli")
        first, second = sorted((self, other), key=lambda r: r.n_lo)
        if second.n_lo > first.n_hi + 1:
            raise ValueError("windows leave a gap")
        theirs = {c.name: c for c in other.checks}
        checks = []
        for c in self.checks:
            checks.append(c.merge(theirs.pop(c.name)) if c.name in theirs else c)
        checks.extend(theirs.values())
        return VerificationReport(
            self.a, first.n_lo, max(first.n_hi, second.n_hi), tuple(checks)
        )

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status} {c.name}: {c.checked} checked"
            if not c.passed:
                line += f", {c.failures} failed, first at n={c.witness}"
                if c.detail:
                    line += f" ({c.detail})"
            out.append(line)
        return out


class _Tally:
    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.failures = 0
        self.witness = None
        self.detail = ""

    def record(self, ok: bool, n: int, detail: str = "") -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.witness is None:
                self.witness, self.detail = n, detail

    def result(self) -> CheckResult:
        return CheckResult(self.name, self.checked, self.failures, self.witness, self.detail)


def _telescoping_ks(mod: FactoredModulus) -> list[int]:
    ks = [-2, -1, 1, 2]
    if mod.a // mod.R not in ks:
        ks.append(mod.a // mod.R)
    return ks


def _verify_chunk(params: SequenceParams, n_lo: int, n_hi: int, overlap: bool) -> VerificationReport:
    mod = params.mod
    a, R, Q = mod.a, mod.R, mod.Q
    ns = range(n_lo, n_hi + 1)
    closed = [eval_closed(params, n) for n in ns]
    expected = oracle_window(a, n_lo, n_hi)

    coprime = _Tally("coprime")
    monotone = _Tally("monotone")
    rec = _Tally("closed=recurrence")
    orc = _Tally("closed=oracle")
    tele = {k: _Tally(f"telescoping k={k}") for k in _telescoping_ks(mod)}

    for i, n in enumerate(ns):
        v = closed[i]
        if overlap and i == 0:
            # already checked as the last index of the previous chunk
            continue
        coprime.record(math.gcd(v, a) == 1, n, f"P={v}")
        if i:
            monotone.record(closed[i - 1] < v, n, f"P({n - 1})={closed[i - 1]}, P({n})={v}")
        r = eval_recurrence(params, n)
        rec.record(r == v, n, f"{v} != {r}")
        orc.record(expected[i] == v, n, f"{v} != {expected[i]}")
        for k, t in tele.items():
            rhs = k * R + eval_closed(params, n - k * Q)
            t.record(rhs == v, n, f"{v} != {rhs}")

    surj = _Tally("surjective")
    lo_v, hi_v = closed[0], closed[-1]
    if lo_v < hi_v:
        x = np.arange(lo_v, hi_v + 1, dtype=object if max(abs(lo_v), abs(hi_v)) > 2**62 else np.int64)
        if x.dtype == object:
            coprimes = [int(v) for v in x if math.gcd(int(v), a) == 1]
        else:
            coprimes = x[np.gcd(x, np.int64(a)) == 1].tolist()
        ok = coprimes == closed
        surj.record(ok, n_lo, "" if ok else f"{len(coprimes)} coprimes in range, {len(closed)} values")
    checks = [coprime, monotone, rec, orc, *tele.values(), surj]
    return VerificationReport(a, n_lo, n_hi, tuple(t.result() for t in checks))


def verify_window(
    a: int | FactoredModulus | SequenceParams,
    n_lo: int,
    n_hi: int,
    *,
    period_choice: str = "Q",
    chunk: int = 1 << 16,
) -> VerificationReport:
    """Check the sequence over ``[n_lo, n_hi]`` against its defining properties.

    Failures are collected with the first offending ``n`` rather than raised.
    The window is processed in chunks overlapping by one index, so the
    monotonicity and surjectivity checks see every consecutive pair.
    """
    params = a if isinstance(a, SequenceParams) else sequence_params(a, period_choice)
    if n_lo >= n_hi:
        raise ValueError(f"need n_lo < n_hi, got [{n_lo}, {n_hi}]")
    if n_hi - n_lo + 1 > WINDOW_CEILING:
        raise ValueError(f"window of {n_hi - n_lo + 1} exceeds {WINDOW_CEILING}")
    report = None
    for lo in range(n_lo, n_hi, chunk):
        part = _verify_chunk(params, lo, min(lo + chunk, n_hi), report is not None)
        report = part if report is None else report.merge(part)
    return report


def values(params: SequenceParams, ns: Iterable[int]) -> list[int]:
    return [eval_closed(params, n) for n in ns]
