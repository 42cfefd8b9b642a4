"""Factorization of the modulus and the arithmetic functions built on it.

For ``a = p_1^e_1 ... p_w^e_w`` the module provides the radical
``R = p_1 ... p_w``, ``Q = (p_1 - 1) ... (p_w - 1)`` and Euler's totient
``phi = (a / R) * Q``, together with the ordered set of totatives.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

__all__ = (
    "MODULUS_CEILING",
    "TOTATIVE_CEILING",
    "ModulusError",
    "FactoredModulus",
    "EulerSet",
    "factor",
    "euler_set",
)

MODULUS_CEILING = 2**63 - 1
TOTATIVE_CEILING = 2**24


class ModulusError(ValueError):
    """Raised for a modulus outside the supported range."""


def _trial_divisors() -> Iterator[int]:
    yield 2
    yield 3
    d = 5
    while True:
        yield d
        yield d + 2
        d += 6


def _factor(a: int) -> list[tuple[int, int]]:
    factors = []
    rest = a
    for d in _trial_divisors():
        if d * d > rest:
            break
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            factors.append((d, e))
    if rest > 1:
        # no divisor up to sqrt(rest) survived, so rest is prime
        factors.append((rest, 1))
    return factors


@dataclass(frozen=True)
class FactoredModulus:
    """A modulus ``a >= 2`` with its prime factorization and ``R``, ``Q``, ``phi``."""

    a: int
    factors: tuple[tuple[int, int], ...]
    R: int
    Q: int
    phi: int

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def omega(self) -> int:
        """Number of distinct prime divisors."""
        return len(self.factors)

    @property
    def is_squarefree(self) -> bool:
        return self.a == self.R

    def radical(self) -> "FactoredModulus":
        """The factored radical ``R(a)``; its totient equals ``Q(a)``."""
        return factor(self.R)

    def coprime(self, x: int) -> bool:
        return math.gcd(x, self.a) == 1

    def __int__(self) -> int:
        return self.a


def factor(a: int, *, ceiling: int = MODULUS_CEILING) -> FactoredModulus:
    """Factor ``a`` by trial division and derive ``R``, ``Q`` and ``phi``.

    >>> m = factor(12)
    >>> m.factors, m.R, m.Q, m.phi
    (((2, 2), (3, 1)), 6, 2, 4)
    """
    if isinstance(a, FactoredModulus):
        return a
    if isinstance(a, bool) or not isinstance(a, (int, np.integer)):
        raise TypeError(f"modulus must be an integer, got {type(a).__name__}")
    a = int(a)
    if a == 1:
        raise ModulusError(
            "a = 1 is not supported: every integer is coprime to 1 and the "
            "initial conditions degenerate to P(0) = 0"
        )
    if a < 2:
        raise ModulusError(f"modulus must be >= 2, got {a}")
    if a > ceiling:
        raise ModulusError(f"modulus {a} exceeds the ceiling {ceiling}")
    factors = tuple(_factor(a))
    R = math.prod(p for p, _ in factors)
    Q = math.prod(p - 1 for p, _ in factors)
    return FactoredModulus(a=a, factors=factors, R=R, Q=Q, phi=(a // R) * Q)


@dataclass(frozen=True)
class EulerSet(Sequence[int]):
    """The totatives of ``m`` in increasing order."""

    m: int
    totatives: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.totatives)

    def __getitem__(self, i):
        return self.totatives[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.totatives)

    def __contains__(self, x) -> bool:
        return 0 < x < self.m and math.gcd(x, self.m) == 1


def euler_set(m: int | FactoredModulus, *, ceiling: int = TOTATIVE_CEILING) -> EulerSet:
    """All integers in ``[1, m - 1]`` coprime to ``m``, increasing.

    The set is built by striking out multiples of each prime divisor of ``m``.

    >>> list(euler_set(10))
    [1, 3, 7, 9]
    """
    if not isinstance(m, FactoredModulus):
        if isinstance(m, (int, np.integer)) and not isinstance(m, bool) and m < 2:
            raise ModulusError(f"euler_set needs m >= 2, got {m}")
    fm = factor(m)
    if fm.phi > ceiling:
        raise ModulusError(f"phi({fm.a}) = {fm.phi} exceeds the totative ceiling {ceiling}")
    keep = np.ones(fm.a, dtype=bool)
    keep[0] = False
    for p in fm.primes:
        keep[::p] = False
    return EulerSet(fm.a, tuple(np.flatnonzero(keep).tolist()))
