"""Construction of the quotient-expansion polynomials psi_n.

psi_n is the integer polynomial in x1..xn defined by psi_0 = 0 and

    psi_n = n * psi_{n-1} + sigma_star(n) + correction(n),

where the degree-n correction is an integer combination of partial Bell
polynomials composed with the earlier psi_j:

    correction(n) = sum over 2 <= nu <= n, 0 <= k <= min(nu, n - nu) of
        (-1)^{nu+1} * stirling1(nu+1, k+1) * (n)_k * B_{n-k,nu}(psi_1, ...)

with (n)_k the falling factorial. Evaluated at the power sums of Fermat
quotients, psi_nu yields the Wilson quotient modulo prime powers (see
congruences). Chains are built bottom-up on one thread; a finished chain is
immutable and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, perm
from typing import Sequence

from .bellstirling import BellTable, sigma_star, stirling1, stirling2
from .partitions import pfs
from .polyring import IntPoly
from .polyring import _add_scaled, _mul_acc, _strip_zeros  # friend access

__all__ = [
    "PsiChain",
    "psi_all",
    "psi",
    "big_psi",
    "big_psi_bell_basis",
    "psi_unfolded",
    "structural_report",
    "StructuralReport",
    "StructuralRow",
    "latex_table",
]


def _correction_terms(n: int) -> list[tuple[int, int, int]]:
    """(m, nu, coefficient) triples: correction(n) = sum c * B_{m,nu}(psi...)."""
    out = []
    for nu in range(2, n + 1):
        for k in range(0, min(nu, n - nu) + 1):
            c = stirling1(nu + 1, k + 1) * perm(n, k)
            if nu % 2 == 0:
                c = -c
            out.append((n - k, nu, c))
    return out


def big_psi_bell_basis(n: int) -> dict[tuple[int, int], int]:
    """Coefficient of each B_{m,nu}(psi_1, ...) in the correction polynomial.

    Keys are (m, nu); values are the integer coefficients, zeros omitted.
    """
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    return {(m, nu): c for m, nu, c in _correction_terms(n) if c}


class _BellRows:
    """B_{m,nu}(psi_1, ...) for every 2 <= nu <= m up to a growing frontier,
    filled one weight at a time against the owner's psi list.

    Row m comes from the single-block recurrence

        B_{m,nu} = sum over i of binomial(m-1, i-1) * psi_i * B_{m-i,nu-1},

    so each entry is one convolution against whole cached rows instead of a
    fresh product fold per partition. Fill on one thread; a filled cache can
    be read concurrently. The definitional partition sum lives in BellTable
    and serves as the independent route for testing these entries.
    """

    def __init__(self, psi_list: list[IntPoly]):
        self._psi = psi_list
        self._values: dict[tuple[int, int], IntPoly] = {}

    def value(self, m: int, nu: int) -> IntPoly:
        return self._values[(m, nu)]

    def entries(self) -> list[tuple[int, int]]:
        return sorted(self._values)

    def extend(self, m: int) -> None:
        """Fill row m; needs psi_1..psi_{m-1} in the owner's list."""
        psi_terms = [poly._terms for poly in self._psi]
        values = self._values
        for nu in range(2, m + 1):
            acc: dict[int, int] = {}
            for i in range(1, m - nu + 2):
                lower = (
                    psi_terms[m - i - 1] if nu == 2 else values[(m - i, nu - 1)]._terms
                )
                _mul_acc(acc, psi_terms[i - 1], lower, comb(m - 1, i - 1))
            values[(m, nu)] = IntPoly._raw(_strip_zeros(acc))


class PsiChain:
    """psi_1..psi_n together with everything produced along the way: the
    sigma_star summands, the corrections, and the Bell compositions
    B_{m,nu}(psi_1, ...) the corrections were assembled from."""

    def __init__(
        self,
        psi: list[IntPoly],
        big: list[IntPoly],
        sig: list[IntPoly],
        rows: _BellRows,
    ):
        self._psi = psi
        self._big = big
        self._sig = sig
        self._rows = rows

    @property
    def n_max(self) -> int:
        return len(self._psi)

    def _check(self, nu: int) -> None:
        if not 1 <= nu <= self.n_max:
            raise ValueError(f"nu must be in 1..{self.n_max}: {nu}")

    def psi(self, nu: int) -> IntPoly:
        self._check(nu)
        return self._psi[nu - 1]

    def big_psi(self, nu: int) -> IntPoly:
        """The correction polynomial added at step nu (zero for nu = 1)."""
        self._check(nu)
        return self._big[nu - 1]

    def sigma_star(self, nu: int) -> IntPoly:
        self._check(nu)
        return self._sig[nu - 1]

    def psi_list(self) -> list[IntPoly]:
        """[psi_1, ..., psi_n_max]."""
        return list(self._psi)

    def bell(self, m: int, nu: int) -> IntPoly:
        """B_{m,nu}(psi_1, ...), served from the chain's cached compositions."""
        self._check(m)
        if nu == 1:
            return self._psi[m - 1]
        if not 2 <= nu <= m:
            raise ValueError(f"nu must be in 1..{m}: {nu}")
        return self._rows.value(m, nu)

    def bell_entries(self) -> list[tuple[int, int]]:
        """(m, nu) pairs the chain holds compositions for, sorted."""
        return sorted(self._rows.entries())


def psi_all(n_max: int) -> PsiChain:
    """Build psi_1..psi_n_max bottom-up, sharing Bell compositions throughout."""
    if n_max < 1:
        raise ValueError(f"n_max must be positive: {n_max}")
    psi_list: list[IntPoly] = []
    rows = _BellRows(psi_list)
    big_list: list[IntPoly] = []
    sig_list: list[IntPoly] = []
    for n in range(1, n_max + 1):
        sig_n = sigma_star(n)
        if n == 1:
            big_n = IntPoly.zero()
        else:
            rows.extend(n)
            acc: dict[int, int] = {}
            for m, nu, c in _correction_terms(n):
                _add_scaled(acc, rows.value(m, nu)._terms, c)
            big_n = IntPoly._raw(_strip_zeros(acc))
        previous = psi_list[-1] if psi_list else IntPoly.zero()
        psi_n = previous * n + sig_n + big_n
        psi_list.append(psi_n)
        big_list.append(big_n)
        sig_list.append(sig_n)
    return PsiChain(psi_list, big_list, sig_list, rows)


def psi(n: int) -> IntPoly:
    """psi_n built from a fresh chain."""
    return psi_all(n).psi(n)


def big_psi(n: int, psi_prefix: Sequence[IntPoly]) -> IntPoly:
    """The correction polynomial at step n, from a supplied psi_1..psi_{n-1}.

    Independent of any chain: every Bell composition is recomputed from the
    definitional partition sum against psi_prefix.
    """
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    if n == 1:
        return IntPoly.zero()
    if len(psi_prefix) < n - 1:
        raise ValueError(f"need psi_1..psi_{n - 1}, got {len(psi_prefix)} polynomials")
    table = BellTable(list(psi_prefix))
    total = IntPoly.zero()
    for m, nu, c in _correction_terms(n):
        total = total + table.partial(m, nu) * c
    return total


def psi_unfolded(n: int, chain: PsiChain | None = None) -> IntPoly:
    """psi_n assembled in one pass as sum over j of (n)_{n-j} times
    (sigma_star(j) + correction(j)), instead of stepping the recurrence."""
    if chain is None:
        chain = psi_all(n)
    elif chain.n_max < n:
        raise ValueError(f"chain holds only {chain.n_max} levels, need {n}")
    acc: dict[int, int] = {}
    for j in range(1, n + 1):
        scale = perm(n, n - j)
        _add_scaled(acc, chain.sigma_star(j)._terms, scale)
        _add_scaled(acc, chain.big_psi(j)._terms, scale)
    return IntPoly._raw(_strip_zeros(acc))


# -- structural report --------------------------------------------------------


@dataclass(frozen=True)
class StructuralRow:
    """Proven properties of one chain level (True means the check holds)."""

    nu: int
    constant_term_zero: bool
    x1_coefficient_ok: bool          # coefficient of x1 is nu!
    top_coefficient_ok: bool         # coefficient of x_nu is (-1)^{nu-1} (nu-1)!
    psi_order_ok: bool               # partition order of psi_nu equals nu
    correction_order_bounded: bool   # partition order of the correction <= nu
    term_count_bounded: bool         # psi_nu has at most pfs(nu) terms
    correction_missing_linear: bool  # x1 and x_nu absent from the correction
    # observed but unproven; reported, never required
    correction_order_exact: bool | None  # order == nu (None when correction is 0)
    term_count_exact: bool               # term count == pfs(nu)

    def violations(self) -> list[str]:
        out = []
        if not self.constant_term_zero:
            out.append(f"psi_{self.nu}: nonzero constant term")
        if not self.x1_coefficient_ok:
            out.append(f"psi_{self.nu}: x1 coefficient is not {self.nu}!")
        if not self.top_coefficient_ok:
            out.append(f"psi_{self.nu}: x{self.nu} coefficient is not (-1)^{self.nu - 1}*({self.nu - 1})!")
        if not self.psi_order_ok:
            out.append(f"psi_{self.nu}: partition order differs from {self.nu}")
        if not self.correction_order_bounded:
            out.append(f"correction {self.nu}: partition order above {self.nu}")
        if not self.term_count_bounded:
            out.append(f"psi_{self.nu}: more than pfs({self.nu}) terms")
        if not self.correction_missing_linear:
            out.append(f"correction {self.nu}: contains the monomial x1 or x{self.nu}")
        return out


@dataclass(frozen=True)
class BellObservation:
    """Conjectural facts about one cached B_{m,nu}(psi...) composition."""

    m: int
    nu: int
    order_exact: bool        # partition order equals m
    top_coefficient_ok: bool  # coefficient of x1^m is (-1)^{m-nu} * stirling2(m, nu)


@dataclass(frozen=True)
class StructuralReport:
    n: int
    rows: tuple[StructuralRow, ...]
    bell_observations: tuple[BellObservation, ...]

    @property
    def violations(self) -> list[str]:
        out: list[str] = []
        for row in self.rows:
            out.extend(row.violations())
        return out

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def conjectural_failures(self) -> list[str]:
        """Failed observations; these are findings, not errors."""
        out = []
        for row in self.rows:
            if row.correction_order_exact is False:
                out.append(f"correction {row.nu}: order < {row.nu}")
            if not row.term_count_exact:
                out.append(f"psi_{row.nu}: term count below pfs({row.nu})")
        for obs in self.bell_observations:
            if not obs.order_exact:
                out.append(f"B_({obs.m},{obs.nu})(psi...): order < {obs.m}")
            if not obs.top_coefficient_ok:
                out.append(f"B_({obs.m},{obs.nu})(psi...): unexpected x1^{obs.m} coefficient")
        return out


def structural_report(n: int, chain: PsiChain | None = None) -> StructuralReport:
    """Check every proven shape property of psi_1..psi_n and report the
    conjectural observations alongside (flagged, never enforced)."""
    if chain is None:
        chain = psi_all(n)
    elif chain.n_max < n:
        raise ValueError(f"chain holds only {chain.n_max} levels, need {n}")
    rows = []
    for nu in range(1, n + 1):
        p = chain.psi(nu)
        b = chain.big_psi(nu)
        correction_order = b.partition_order
        rows.append(
            StructuralRow(
                nu=nu,
                constant_term_zero=p.constant_term == 0,
                x1_coefficient_ok=p.coefficient({1: 1}) == factorial(nu),
                top_coefficient_ok=(
                    True
                    if nu == 1
                    else p.coefficient({nu: 1}) == (-1) ** (nu - 1) * factorial(nu - 1)
                ),
                psi_order_ok=p.partition_order == nu,
                correction_order_bounded=correction_order <= nu,
                term_count_bounded=p.term_count <= pfs(nu),
                correction_missing_linear=(
                    b.coefficient({1: 1}) == 0 and b.coefficient({nu: 1}) == 0
                ),
                correction_order_exact=None if b.is_zero else correction_order == nu,
                term_count_exact=p.term_count == pfs(nu),
            )
        )
    observations = []
    for m, nu in chain.bell_entries():
        if m > n:
            continue
        comp = chain.bell(m, nu)
        observations.append(
            BellObservation(
                m=m,
                nu=nu,
                order_exact=comp.partition_order == m,
                top_coefficient_ok=(
                    comp.coefficient({1: m}) == (-1) ** (m - nu) * stirling2(m, nu)
                ),
            )
        )
    return StructuralReport(n=n, rows=tuple(rows), bell_observations=tuple(observations))


def latex_table(rows: Sequence[tuple[str, IntPoly]]) -> str:
    """Render labeled polynomials as a booktabs tabular, one row per value."""
    lines = [
        r"\begin{table}[ht]",
        r"\centering",
        r"\begin{tabular}{r@{\;=\;}l}",
        r"\toprule",
    ]
    for label, poly in rows:
        lines.append(f"${label}$ & ${poly.to_latex()}$ \\\\")
    lines += [r"\bottomrule", r"\end{tabular}", r"\end{table}"]
    return "\n".join(lines)
