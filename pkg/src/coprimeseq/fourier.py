"""Finite Fourier expansions of the coprime sequence.

Because ``P(n + period) = step + P(n)`` and ``step / period = R / Q``, the
part ``P(n) - (R/Q) n`` is periodic, so

    P(n) = (R/Q) n + sum_{v=0}^{period-1} c_v exp(2 pi i v n / period)

with ``period`` either ``Q`` or ``phi``. The coefficients solve a Vandermonde
system on the roots of unity, i.e. they are the inverse DFT of one period of
the residue ``P(n) - (R/Q) n``. The residue table itself is kept, in exact
rational form, for evaluation that never touches floating point.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .numtheory import FactoredModulus, factor
from .sequence import SequenceParams, eval_closed, sequence_params

__all__ = (
    "PERIOD_CAP",
    "DEFAULT_TOL",
    "PrecisionError",
    "ResidueTable",
    "FourierExpansion",
    "FourierValue",
    "residue_table",
    "solve_coefficients",
    "eval_fourier",
    "eval_fourier_many",
    "eval_exact",
    "density_limit",
    "density_gap_bound",
    "export_dict",
    "export_json",
    "from_export",
)

PERIOD_CAP = 2**16
DEFAULT_TOL = 1e-6


class PrecisionError(ArithmeticError):
    """Floating evaluation drifted past the tolerance; use :func:`eval_exact`."""

    def __init__(self, value: "FourierValue", tol: float):
        super().__init__(
            f"Fourier residual {value.residual:.3g} at n={value.n} exceeds tol={tol:g}"
        )
        self.value = value
        self.tol = tol


@dataclass(frozen=True)
class ResidueTable:
    """Exact values of ``P(m) - (R/Q) m`` for ``m = -period + 1 .. 0``.

    Entries are stored as integer numerators over the common denominator
    ``Q`` so that tables with millions of entries stay cheap.
    """

    period: int
    R: int
    Q: int
    numerators: tuple[int, ...] = field(repr=False)

    @property
    def slope(self) -> Fraction:
        return Fraction(self.R, self.Q)

    @property
    def entries(self) -> list[Fraction]:
        return [Fraction(x, self.Q) for x in self.numerators]

    def index(self, n: int) -> int:
        """Position in the table of the residue class of ``n``."""
        p = self.period
        return (n - 1) % p

    def numerator(self, n: int) -> int:
        return self.numerators[self.index(n)]

    def at(self, n: int) -> Fraction:
        return Fraction(self.numerator(n), self.Q)

    def by_class(self) -> list[Fraction]:
        """Entries reordered so position ``j`` holds the class ``n = j (mod period)``."""
        p = self.period
        return [self.at(j) for j in range(p)]

    def mean(self) -> Fraction:
        return Fraction(sum(self.numerators), self.Q * self.period)

    def bounds(self) -> tuple[Fraction, Fraction]:
        return Fraction(min(self.numerators), self.Q), Fraction(max(self.numerators), self.Q)


def residue_table(params: SequenceParams) -> ResidueTable:
    mod = params.mod
    p = params.period
    nums = tuple(
        mod.Q * v - mod.R * (params.first_index + j)
        for j, v in enumerate(params.base_conditions[:p])
    )
    return ResidueTable(p, mod.R, mod.Q, nums)


@dataclass(frozen=True)
class FourierExpansion:
    """Slope ``c0`` plus coefficients indexed by frequency ``v = 0 .. period - 1``.

    ``coeffs[v]`` multiplies ``exp(2 pi i v n / period)``.
    """

    mod: FactoredModulus
    period: int
    c0: Fraction
    coeffs: np.ndarray = field(repr=False)
    residue_table: ResidueTable = field(repr=False)

    def initial_indices(self) -> range:
        return range(-self.period + 1, 2)


def _inverse_dft(values: Sequence[float]) -> np.ndarray:
    """Coefficients ``c`` with ``sum_v c_v w^(v j) = values[j]``, ``w = exp(2 pi i / p)``."""
    x = np.asarray(values, dtype=float)
    p = x.size
    c = np.fft.fft(x) / p
    # exact Hermitian symmetry for a real sequence
    k = (p - 1) // 2
    if k:
        c[p - k:] = np.conj(c[1:k + 1][::-1])
    if p % 2 == 0:
        c[p // 2] = c[p // 2].real
    return c


def solve_coefficients(
    params: SequenceParams | int | FactoredModulus,
    period_choice: str | None = None,
    *,
    cap: int = PERIOD_CAP,
) -> FourierExpansion:
    """Fourier expansion of ``P`` with period ``Q`` (default) or ``phi``.

    >>> exp = solve_coefficients(6)
    >>> exp.c0, [complex(round(c.real, 12), round(c.imag, 12)) for c in exp.coeffs]
    (Fraction(3, 1), [(4.5+0j), (0.5+0j)])
    """
    if not isinstance(params, SequenceParams):
        params = sequence_params(params, period_choice or "Q")
    elif period_choice is not None and params.period_choice != period_choice:
        params = sequence_params(params.mod, period_choice)
    if params.period > cap:
        raise ValueError(f"period {params.period} exceeds the cap {cap}")
    table = residue_table(params)
    by_class = [table.numerator(j) / table.Q for j in range(table.period)]
    coeffs = _inverse_dft(by_class)
    coeffs[0] = float(table.mean())
    mod = params.mod
    return FourierExpansion(mod, params.period, Fraction(mod.R, mod.Q), coeffs, table)


@dataclass(frozen=True)
class FourierValue:
    n: int
    value: complex
    rounded: int
    residual: float


def _periodic_sum(exp: FourierExpansion, n: int) -> complex:
    p = exp.period
    nu = np.arange(p, dtype=np.int64)
    phase = (nu * (n % p)) % p
    return complex(np.dot(exp.coeffs, np.exp(2j * np.pi * phase / p)))


def _combine(exp: FourierExpansion, n: int, s: complex) -> FourierValue:
    # integer part of the slope term kept exact; only the bounded part is float
    whole, frac = divmod(exp.mod.R * n, exp.mod.Q)
    rest = frac / exp.mod.Q + s
    nearest = round(rest.real)
    residual = max(abs(rest.imag), abs(rest.real - nearest))
    return FourierValue(n, complex(whole + rest.real, rest.imag), whole + nearest, residual)


def eval_fourier(exp: FourierExpansion, n: int, *, tol: float = DEFAULT_TOL, strict: bool = True) -> FourierValue:
    """Evaluate the expansion in floating point at integer ``n``.

    ``residual`` is the larger of the imaginary part and the distance to the
    nearest integer. With ``strict`` a residual at or above ``tol`` raises
    :class:`PrecisionError`, which carries the value.
    """
    v = _combine(exp, n, _periodic_sum(exp, n))
    if strict and not v.residual < tol:
        raise PrecisionError(v, tol)
    return v


def eval_fourier_many(exp: FourierExpansion, ns: Iterable[int], *, rows: int = 256) -> list[FourierValue]:
    """Non-raising batch form of :func:`eval_fourier`."""
    ns = list(ns)
    p = exp.period
    nu = np.arange(p, dtype=np.int64)
    out = []
    for start in range(0, len(ns), rows):
        block = ns[start:start + rows]
        red = np.array([n % p for n in block], dtype=np.int64)
        phase = (red[:, None] * nu[None, :]) % p
        sums = np.exp(2j * np.pi * phase / p) @ exp.coeffs
        out.extend(_combine(exp, n, complex(s)) for n, s in zip(block, sums))
    return out


def eval_exact(exp: FourierExpansion | ResidueTable, n: int) -> int:
    """``P(n) = (R/Q) n + r(n)`` with ``r`` looked up in the residue table."""
    table = exp.residue_table if isinstance(exp, FourierExpansion) else exp
    num = table.R * n + table.numerator(n)
    value, rem = divmod(num, table.Q)
    if rem:
        raise ArithmeticError(f"non-integer value {num}/{table.Q} at n={n}")
    return value


def density_limit(exp: FourierExpansion | FactoredModulus | int) -> Fraction:
    """Limit of ``P(n) / n``, which is the slope ``R / Q``."""
    if isinstance(exp, FourierExpansion):
        return exp.c0
    mod = factor(exp)
    return Fraction(mod.R, mod.Q)


def density_gap_bound(mod: FactoredModulus | int, n: int) -> Fraction:
    """The finite-``n`` bound ``2R / |n|`` on ``|P(n)/n - R/Q|``."""
    mod = factor(mod)
    return Fraction(2 * mod.R, abs(n))


def export_dict(exp: FourierExpansion) -> dict:
    mod = exp.mod
    table = exp.residue_table
    entries = []
    for x in table.numerators:
        g = math.gcd(x, table.Q)
        entries.append([x // g, table.Q // g])
    return {
        "a": mod.a,
        "R": mod.R,
        "Q": mod.Q,
        "phi": mod.phi,
        "period": exp.period,
        "c0": [exp.c0.numerator, exp.c0.denominator],
        "coefficients": [[float(c.real), float(c.imag)] for c in exp.coeffs],
        "residue_table": entries,
    }


def _g17(x: float) -> str:
    s = f"{x:.17g}"
    if s in ("nan", "inf", "-inf"):
        raise ValueError(f"non-finite coefficient {s}")
    return s


def export_json(exp: FourierExpansion, indent: int | None = 2) -> str:
    """JSON text of :func:`export_dict`, coefficients at 17 significant digits."""
    d = export_dict(exp)
    coeffs = d.pop("coefficients")
    table = d.pop("residue_table")
    pad = " " * indent if indent else ""
    nl = "\n" if indent else ""
    sep = "," + nl + pad if indent else ", "
    parts = [f"{json.dumps(k)}: {json.dumps(v)}" for k, v in d.items()]
    coeff_text = ", ".join(f"[{_g17(re)}, {_g17(im)}]" for re, im in coeffs)
    parts.append(f'"coefficients": [{coeff_text}]')
    parts.append(f'"residue_table": {json.dumps(table)}')
    return "{" + nl + pad + sep.join(parts) + nl + "}"


def from_export(d: dict | str) -> FourierExpansion:
    """Rebuild an expansion from :func:`export_dict` or :func:`export_json` output."""
    if isinstance(d, str):
        d = json.loads(d)
    mod = factor(d["a"])
    if (mod.R, mod.Q, mod.phi) != (d["R"], d["Q"], d["phi"]):
        raise ValueError("exported R, Q, phi disagree with the factorization of a")
    period = d["period"]
    nums = []
    for num, den in d["residue_table"]:
        if mod.Q % den:
            raise ValueError(f"residue denominator {den} does not divide Q")
        nums.append(num * (mod.Q // den))
    table = ResidueTable(period, mod.R, mod.Q, tuple(nums))
    coeffs = np.array([complex(re, im) for re, im in d["coefficients"]])
    return FourierExpansion(mod, period, Fraction(*d["c0"]), coeffs, table)
