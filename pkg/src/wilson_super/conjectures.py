"""Exact checks of the open counting and evaluation identities.

Two families of checks, both reported rather than assumed anywhere else in
the package:

  * term counts: psi_n appears to use every monomial available to it, so
    its term count should equal pfs(n);
  * evaluations at all-ones arguments: psi_n(1,...,1) and psi_n(-1,...,-1)
    appear to match complete Bell polynomials in scaled alternating harmonic
    numbers, equivalently the coefficients of 1 - (1+x)^{-s/(1-x)} for
    s = +1 and s = -1.

The power series side is done with truncated series over exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .bellstirling import bell_coefficient
from .partitions import partitions_of, pfs
from .psi_engine import PsiChain, psi_all

__all__ = [
    "RatSeries",
    "ser_x",
    "ser_one",
    "ser_add",
    "ser_sub",
    "ser_scale",
    "ser_mul",
    "ser_exp",
    "ser_log1p",
    "ser_inv_one_minus_x",
    "ser_compose_scale",
    "alt_harmonic",
    "bell_complete_rational",
    "pm_one_gf_series",
    "pm_one_sequences",
    "check_term_count",
    "check_pm_one_conjecture",
    "TermCountReport",
    "PmOneReport",
]


# -- truncated power series over exact rationals ------------------------------


@dataclass(frozen=True, slots=True)
class RatSeries:
    """A power series truncated at a fixed order: coeffs[k] is the exact
    rational coefficient of x^k, for 0 <= k <= order."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    @classmethod
    def from_coeffs(cls, values: Sequence[Fraction | int]) -> "RatSeries":
        return cls(tuple(Fraction(v) for v in values))


def _same_order(f: RatSeries, g: RatSeries) -> int:
    if f.order != g.order:
        raise ValueError(f"truncation orders differ: {f.order} vs {g.order}")
    return f.order


def ser_x(order: int) -> RatSeries:
    """The series x, truncated at the given order (order >= 1)."""
    if order < 1:
        raise ValueError(f"order must be at least 1: {order}")
    return RatSeries.from_coeffs([0, 1] + [0] * (order - 1))


def ser_one(order: int) -> RatSeries:
    """The constant series 1."""
    if order < 0:
        raise ValueError(f"order must be nonnegative: {order}")
    return RatSeries.from_coeffs([1] + [0] * order)


def ser_add(f: RatSeries, g: RatSeries) -> RatSeries:
    _same_order(f, g)
    return RatSeries(tuple(a + b for a, b in zip(f.coeffs, g.coeffs)))


def ser_sub(f: RatSeries, g: RatSeries) -> RatSeries:
    _same_order(f, g)
    return RatSeries(tuple(a - b for a, b in zip(f.coeffs, g.coeffs)))


def ser_scale(f: RatSeries, c: Fraction | int) -> RatSeries:
    scale = Fraction(c)
    return RatSeries(tuple(a * scale for a in f.coeffs))


def ser_mul(f: RatSeries, g: RatSeries) -> RatSeries:
    """Cauchy product truncated at the common order."""
    order = _same_order(f, g)
    out = [Fraction(0)] * (order + 1)
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        for j in range(order + 1 - i):
            b = g.coeffs[j]
            if b:
                out[i + j] += a * b
    return RatSeries(tuple(out))


def ser_exp(f: RatSeries) -> RatSeries:
    """exp(f) for a series with zero constant term, via the derivative
    recurrence n*e_n = sum of k*f_k*e_{n-k}."""
    if f.coeffs[0]:
        raise ValueError(f"exp needs zero constant term, got {f.coeffs[0]}")
    order = f.order
    out = [Fraction(1)] + [Fraction(0)] * order
    for n in range(1, order + 1):
        total = Fraction(0)
        for k in range(1, n + 1):
            if f.coeffs[k]:
                total += k * f.coeffs[k] * out[n - k]
        out[n] = total / n
    return RatSeries(tuple(out))


def ser_log1p(f: RatSeries) -> RatSeries:
    """log(1 + f) for a series with zero constant term, via the derivative
    recurrence n*l_n = n*f_n - sum of k*l_k*f_{n-k}."""
    if f.coeffs[0]:
        raise ValueError(f"log1p needs zero constant term, got {f.coeffs[0]}")
    order = f.order
    out = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        total = n * f.coeffs[n]
        for k in range(1, n):
            if out[k] and f.coeffs[n - k]:
                total -= k * out[k] * f.coeffs[n - k]
        out[n] = total / n
    return RatSeries(tuple(out))


def ser_inv_one_minus_x(order: int) -> RatSeries:
    """The geometric series 1/(1-x) = 1 + x + x^2 + ..."""
    if order < 0:
        raise ValueError(f"order must be nonnegative: {order}")
    return RatSeries.from_coeffs([1] * (order + 1))


def ser_compose_scale(f: RatSeries, c: Fraction | int) -> RatSeries:
    """f(c*x): rescale the k-th coefficient by c^k."""
    scale = Fraction(c)
    return RatSeries(tuple(a * scale**k for k, a in enumerate(f.coeffs)))


# -- the identities under test ------------------------------------------------


def alt_harmonic(n: int) -> Fraction:
    """Alternating harmonic number 1 - 1/2 + 1/3 - ... +- 1/n."""
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    return sum((Fraction(-1) ** (nu + 1)) / nu for nu in range(1, n + 1))


def bell_complete_rational(args: Sequence[Fraction]) -> Fraction:
    """Complete Bell polynomial B_n at rational arguments (n = len(args)),
    summed directly over partitions of n."""
    n = len(args)
    if n < 1:
        raise ValueError("need at least one argument")
    total = Fraction(0)
    for gamma in partitions_of(n):
        product = Fraction(bell_coefficient(gamma.parts))
        for part in gamma.parts:
            product *= args[part - 1]
        total += product
    return total


def pm_one_gf_series(n_max: int, sign: int) -> RatSeries:
    """The series 1 - (1+x)^{-sign/(1-x)} truncated at order n_max, realized
    as 1 - exp(-sign * log(1+x)/(1-x)) over exact rationals. Its n-th
    coefficient times n! is conjecturally psi_n(sign, ..., sign)."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1: {sign}")
    if n_max < 1:
        raise ValueError(f"n_max must be positive: {n_max}")
    log_part = ser_log1p(ser_x(n_max))
    exponent = ser_mul(log_part, ser_inv_one_minus_x(n_max))
    return ser_sub(ser_one(n_max), ser_exp(ser_scale(exponent, -sign)))


def pm_one_sequences(n_max: int, chain: PsiChain | None = None) -> tuple[list[int], list[int], list[int]]:
    """Three exact integer sequences for n = 1..n_max: the corrections at
    all-ones arguments, psi_n at all ones, and -psi_n at all minus-ones."""
    if chain is None:
        chain = psi_all(n_max)
    elif chain.n_max < n_max:
        raise ValueError(f"chain holds only {chain.n_max} levels, need {n_max}")
    ones = [1] * n_max
    minus = [-1] * n_max
    big_at_one = [chain.big_psi(n).eval_int(ones[:n]) for n in range(1, n_max + 1)]
    psi_at_one = [chain.psi(n).eval_int(ones[:n]) for n in range(1, n_max + 1)]
    neg_psi_at_minus = [-chain.psi(n).eval_int(minus[:n]) for n in range(1, n_max + 1)]
    return big_at_one, psi_at_one, neg_psi_at_minus


# -- reports ------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class TermCountRow:
    n: int
    count: int
    bound: int

    @property
    def equal(self) -> bool:
        return self.count == self.bound

    def to_json_dict(self) -> dict[str, object]:
        return {
            "n": self.n,
            "method": "termcount",
            "lhs": str(self.count),
            "rhs": str(self.bound),
            "pass": self.equal,
        }

    def to_text(self) -> str:
        status = "EQUAL" if self.equal else "BELOW"
        return f"n={self.n} method=termcount terms={self.count} pfs={self.bound} {status}"


@dataclass(frozen=True, slots=True)
class TermCountReport:
    rows: tuple[TermCountRow, ...]

    @property
    def all_equal(self) -> bool:
        return all(row.equal for row in self.rows)


def check_term_count(n_max: int, chain: PsiChain | None = None) -> TermCountReport:
    """Observed term count of psi_n against the proven bound pfs(n). The
    bound is a theorem; equality is the open question this reports on."""
    if chain is None:
        chain = psi_all(n_max)
    elif chain.n_max < n_max:
        raise ValueError(f"chain holds only {chain.n_max} levels, need {n_max}")
    rows = tuple(
        TermCountRow(n=n, count=chain.psi(n).term_count, bound=pfs(n))
        for n in range(1, n_max + 1)
    )
    return TermCountReport(rows=rows)


@dataclass(frozen=True, slots=True)
class PmOneRow:
    n: int
    sign: int
    evaluated: int            # psi_n(sign, ..., sign), exact
    bell_value: Fraction      # -B_n(-sign*1!*AH_1, ..., -sign*n!*AH_n)
    gf_value: Fraction        # n! times the n-th series coefficient

    @property
    def bell_match(self) -> bool:
        return self.bell_value == self.evaluated

    @property
    def gf_match(self) -> bool:
        return self.gf_value == self.evaluated

    def to_json_dicts(self) -> list[dict[str, object]]:
        return [
            {
                "n": self.n,
                "sign": self.sign,
                "method": "pm1-bell",
                "lhs": str(self.evaluated),
                "rhs": str(self.bell_value),
                "pass": self.bell_match,
            },
            {
                "n": self.n,
                "sign": self.sign,
                "method": "pm1-gf",
                "lhs": str(self.evaluated),
                "rhs": str(self.gf_value),
                "pass": self.gf_match,
            },
        ]

    def to_text_lines(self) -> list[str]:
        bell = "PASS" if self.bell_match else "FAIL"
        gf = "PASS" if self.gf_match else "FAIL"
        return [
            f"n={self.n} sign={self.sign:+d} method=pm1-bell lhs={self.evaluated} rhs={self.bell_value} {bell}",
            f"n={self.n} sign={self.sign:+d} method=pm1-gf lhs={self.evaluated} rhs={self.gf_value} {gf}",
        ]


@dataclass(frozen=True, slots=True)
class PmOneReport:
    sign: int
    rows: tuple[PmOneRow, ...]

    @property
    def all_match(self) -> bool:
        return all(row.bell_match and row.gf_match for row in self.rows)


def check_pm_one_conjecture(n_max: int, sign: int, chain: PsiChain | None = None) -> PmOneReport:
    """Three-way comparison for n = 1..n_max at arguments (sign, ..., sign):
    the exact evaluation of psi_n, the complete Bell polynomial in scaled
    alternating harmonic numbers, and the generating-function coefficient.
    Mismatches (including a non-integral Bell value) are reported, never
    raised."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1: {sign}")
    if chain is None:
        chain = psi_all(n_max)
    elif chain.n_max < n_max:
        raise ValueError(f"chain holds only {chain.n_max} levels, need {n_max}")
    series = pm_one_gf_series(n_max, sign)
    point = [sign] * n_max
    rows = []
    for n in range(1, n_max + 1):
        evaluated = chain.psi(n).eval_int(point[:n])
        bell_args = [Fraction(-sign * factorial(nu)) * alt_harmonic(nu) for nu in range(1, n + 1)]
        bell_value = -bell_complete_rational(bell_args)
        gf_value = factorial(n) * series[n]
        rows.append(
            PmOneRow(n=n, sign=sign, evaluated=evaluated, bell_value=bell_value, gf_value=gf_value)
        )
    return PmOneReport(sign=sign, rows=tuple(rows))
