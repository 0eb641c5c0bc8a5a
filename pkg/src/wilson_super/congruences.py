"""Exact arithmetic modulo odd prime powers: Fermat and Wilson quotients,
power sums of Fermat quotients, the supercongruences they satisfy, and
brute-force oracles to verify every claimed congruence against.

All values are canonical residues (nonnegative, below the modulus) unless a
function documents an exact integer instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, isqrt
from typing import Sequence

from .bellstirling import sigma_star
from .psi_engine import PsiChain, psi_all

__all__ = [
    "ModCtx",
    "QSums",
    "VerifyReport",
    "is_odd_prime",
    "primes_in_range",
    "fermat_quotient",
    "wilson_quotient",
    "q_power_sums",
    "wilson_via_psi",
    "factorial_via_psi",
    "wilson_iterative",
    "oracle_wilson",
    "oracle_factorial",
    "check_wilson_via_psi",
    "check_factorial_via_psi",
    "check_wilson_iterative",
    "check_lerch",
    "check_lagrange_product",
    "check_eisenstein_log",
    "check_expansion_identity",
]

# deterministic Miller-Rabin witnesses for every modulus below 3.3e24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_odd_prime(p: int) -> bool:
    """True when p is a prime other than 2 (deterministic below 3.3e24)."""
    return p % 2 == 1 and _is_prime(p)


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Odd primes p with lo <= p <= hi, by sieve, ascending."""
    if hi < 3:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for q in range(2, isqrt(hi) + 1):
        if sieve[q]:
            sieve[q * q :: q] = b"\x00" * len(range(q * q, hi + 1, q))
    return [p for p in range(max(lo, 3) | 1, hi + 1, 2) if sieve[p]]


@dataclass(frozen=True, slots=True)
class ModCtx:
    """Arithmetic context for the ring of integers modulo p^m, p an odd prime."""

    p: int
    m: int

    def __post_init__(self) -> None:
        if not is_odd_prime(self.p):
            raise ValueError(f"p must be an odd prime: {self.p}")
        if self.m < 1:
            raise ValueError(f"m must be positive: {self.m}")

    @property
    def modulus(self) -> int:
        return self.p**self.m

    def reduce(self, x: int) -> int:
        return x % self.modulus

    def inv(self, x: int) -> int:
        if x % self.p == 0:
            raise ValueError(f"{x} is not a unit modulo {self.p}^{self.m}")
        return pow(x, -1, self.modulus)


def fermat_quotient(p: int, a: int, ctx: ModCtx | None = None) -> int:
    """Fermat quotient q_p(a) = (a^{p-1} - 1)/p, reduced in ctx (default
    modulo p). Computed from a representative modulo p^{m+1}, so the exact
    division never loses information."""
    if ctx is None:
        ctx = ModCtx(p, 1)
    elif ctx.p != p:
        raise ValueError(f"context prime {ctx.p} does not match p={p}")
    if a % p == 0:
        raise ValueError(f"a must be coprime to p: a={a}, p={p}")
    lifted = pow(a, p - 1, p ** (ctx.m + 1))
    quotient, remainder = divmod(lifted - 1, p)
    assert remainder == 0, "Fermat little theorem violated"
    return quotient % ctx.modulus


def wilson_quotient(p: int) -> int:
    """Exact Wilson quotient W_p = ((p-1)! + 1)/p as an integer."""
    if not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime: {p}")
    quotient, remainder = divmod(factorial(p - 1) + 1, p)
    assert remainder == 0, "Wilson theorem violated"
    return quotient


@dataclass(frozen=True, slots=True)
class QSums:
    """Power sums Q_p(nu) = sum of q_p(a)^nu over 1 <= a <= p-1, for
    nu = 1..depth, as residues modulo p^depth."""

    p: int
    depth: int
    values: tuple[int, ...]

    def value(self, nu: int) -> int:
        if not 1 <= nu <= self.depth:
            raise ValueError(f"nu must be in 1..{self.depth}: {nu}")
        return self.values[nu - 1]


def q_power_sums(p: int, n: int) -> QSums:
    """Q_p(1..n) modulo p^n. Requires p > n so later divisions by nu! stay
    invertible."""
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    if not is_odd_prime(p) or p <= n:
        raise ValueError(f"p must be an odd prime exceeding n={n}: {p}")
    modulus = p**n
    lift = p ** (n + 1)
    sums = [0] * n
    for a in range(1, p):
        q = (pow(a, p - 1, lift) - 1) // p % modulus
        power = 1
        for nu in range(n):
            power = power * q % modulus
            sums[nu] = (sums[nu] + power) % modulus
    return QSums(p=p, depth=n, values=tuple(sums))


def _chain_for(n: int, chain: PsiChain | None) -> PsiChain:
    if chain is None:
        return psi_all(n)
    if chain.n_max < n:
        raise ValueError(f"chain holds only {chain.n_max} levels, need {n}")
    return chain


def wilson_via_psi(p: int, n: int, chain: PsiChain | None = None) -> int:
    """W_p modulo p^n as the sum over nu <= n of p^{nu-1}/nu! times
    psi_nu(Q_p(1), ..., Q_p(nu)).

    psi_nu is evaluated modulo p^{n-nu+1} only; the p^{nu-1} factor makes
    the full sum exact modulo p^n.
    """
    chain = _chain_for(n, chain)
    qs = q_power_sums(p, n)
    modulus = p**n
    total = 0
    for nu in range(1, n + 1):
        level = p ** (n - nu + 1)
        value = chain.psi(nu).eval_mod(qs.values[:nu], level)
        value = value * pow(factorial(nu), -1, level) % level
        total = (total + p ** (nu - 1) * value) % modulus
    return total


def factorial_via_psi(p: int, n: int, chain: PsiChain | None = None) -> int:
    """(p-1)! modulo p^{n+1} as -1 plus the sum over nu <= n of p^nu/nu!
    times psi_nu(Q_p(1), ..., Q_p(nu))."""
    chain = _chain_for(n, chain)
    qs = q_power_sums(p, n)
    modulus = p ** (n + 1)
    total = -1
    for nu in range(1, n + 1):
        level = p ** (n + 1 - nu)
        value = chain.psi(nu).eval_mod(qs.values[:nu], level)
        value = value * pow(factorial(nu), -1, level) % level
        total = (total + p**nu * value) % modulus
    return total


def wilson_iterative(p: int, n: int) -> int:
    """W_p modulo p^n by depth iteration, never touching a psi polynomial.

    The depth-1 base case is the first-order congruence W_p = Q_p(1) mod p;
    each further depth ell adds correction terms built from sigma_star
    evaluations and binomial-weighted powers of the earlier iterates.
    """
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    if not is_odd_prime(p) or p <= n:
        raise ValueError(f"p must be an odd prime exceeding n={n}: {p}")
    qs = q_power_sums(p, n)
    iterates = [0, qs.value(1) % p]  # iterates[ell] = W_p mod p^ell
    for ell in range(2, n + 1):
        modulus = p**ell
        acc = qs.value(1) + p * iterates[ell - 1]
        for nu in range(1, ell):
            scaled = sigma_star(nu + 1).eval_mod(qs.values[: nu + 1], modulus)
            scaled = scaled * pow(factorial(nu + 1), -1, modulus) % modulus
            swing = comb(p - 1, nu + 1) * pow(iterates[ell - nu], nu + 1, modulus)
            if nu % 2 == 1:
                swing = -swing
            acc += p**nu * (scaled + swing)
        iterates.append(acc % modulus)
    return iterates[n]


def oracle_wilson(p: int, n: int) -> int:
    """W_p modulo p^n straight from the exact big-integer factorial."""
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    return wilson_quotient(p) % p**n


def oracle_factorial(p: int, n: int) -> int:
    """(p-1)! modulo p^{n+1} by direct modular product."""
    if not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime: {p}")
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    modulus = p ** (n + 1)
    value = 1
    for a in range(2, p):
        value = value * a % modulus
    return value


# -- reports ------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class VerifyReport:
    """Outcome of one congruence check: both sides as canonical residues
    (or exact integers when modulus is 0) and whether they agree."""

    p: int
    n: int
    method: str
    lhs: int
    rhs: int
    modulus: int
    passed: bool

    @classmethod
    def compare(cls, p: int, n: int, method: str, lhs: int, rhs: int, modulus: int) -> "VerifyReport":
        return cls(p=p, n=n, method=method, lhs=lhs, rhs=rhs, modulus=modulus, passed=lhs == rhs)

    def to_json_dict(self) -> dict[str, object]:
        return {
            "p": self.p,
            "n": self.n,
            "method": self.method,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "modulus": str(self.modulus),
            "pass": self.passed,
        }

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"p={self.p} n={self.n} method={self.method} "
            f"lhs={self.lhs} rhs={self.rhs} modulus={self.modulus} {status}"
        )


def check_wilson_via_psi(p: int, n: int, chain: PsiChain | None = None) -> VerifyReport:
    """Compare wilson_via_psi against the exact-factorial oracle."""
    return VerifyReport.compare(
        p, n, "psi", wilson_via_psi(p, n, chain), oracle_wilson(p, n), p**n
    )


def check_factorial_via_psi(p: int, n: int, chain: PsiChain | None = None) -> VerifyReport:
    """Compare factorial_via_psi against the modular-product oracle."""
    return VerifyReport.compare(
        p, n, "factorial", factorial_via_psi(p, n, chain), oracle_factorial(p, n), p ** (n + 1)
    )


def check_wilson_iterative(p: int, n: int) -> VerifyReport:
    """Compare the iterative scheme against the exact-factorial oracle."""
    return VerifyReport.compare(
        p, n, "iterative", wilson_iterative(p, n), oracle_wilson(p, n), p**n
    )


def check_lerch(p: int) -> VerifyReport:
    """First-order congruence: W_p = Q_p(1) modulo p."""
    lhs = oracle_wilson(p, 1)
    rhs = q_power_sums(p, 1).value(1)
    return VerifyReport.compare(p, 1, "lerch", lhs, rhs, p)


def check_lagrange_product(p: int) -> VerifyReport:
    """(x-1)(x-2)...(x-(p-1)) = x^{p-1} - 1 modulo p, coefficient by
    coefficient. The two coefficient vectors are packed base p into lhs and
    rhs so the report stays scalar."""
    if not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime: {p}")
    coeffs = [1]
    for a in range(1, p):
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = (nxt[i + 1] + c) % p
            nxt[i] = (nxt[i] - a * c) % p
        coeffs = nxt
    expected = [0] * p
    expected[0] = (p - 1) % p
    expected[p - 1] = 1
    lhs = sum(c * p**i for i, c in enumerate(coeffs))
    rhs = sum(c * p**i for i, c in enumerate(expected))
    return VerifyReport.compare(p, 1, "lagrange", lhs, rhs, p)


def check_eisenstein_log(p: int, a: int, b: int) -> VerifyReport:
    """Logarithm rule of Fermat quotients: q_p(ab) = q_p(a) + q_p(b) mod p."""
    lhs = fermat_quotient(p, a * b)
    rhs = (fermat_quotient(p, a) + fermat_quotient(p, b)) % p
    return VerifyReport.compare(p, 1, "eisenstein", lhs, rhs, p)


def check_expansion_identity(p: int) -> VerifyReport:
    """Exact integer identity (no modulus, reported as modulus 0):

        product over 1 <= a <= p-1 of (1 + p*q_p(a)) = (1 - p*W_p)^{p-1}.

    Both sides equal ((p-1)!)^{p-1}; each is computed independently.
    """
    if not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime: {p}")
    lhs = 1
    for a in range(1, p):
        quotient, remainder = divmod(a ** (p - 1) - 1, p)
        assert remainder == 0
        lhs *= 1 + p * quotient
    rhs = (1 - p * wilson_quotient(p)) ** (p - 1)
    return VerifyReport.compare(p, 0, "expansion", lhs, rhs, 0)
