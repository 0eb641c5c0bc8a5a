"""Partial and complete Bell polynomials, Stirling numbers, and the
integer-scaled elementary symmetric polynomials in power-sum variables.

The partial Bell polynomial B_{n,k}(a_1, ..., a_{n-k+1}) is computed from
its definitional sum over partitions of n into k parts: the partition with
multiplicities j_1, j_2, ... contributes

    n! / (j_1! j_2! ... (1!)^{j_1} (2!)^{j_2} ...) * a_1^{j_1} a_2^{j_2} ...

All factorial divisions are exact and asserted.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Sequence

from .partitions import partitions_with_length
from .polyring import ArityError, IntPoly

__all__ = [
    "BellTable",
    "bell_coefficient",
    "bell_partial",
    "bell_complete",
    "stirling1",
    "stirling2",
    "falling_expand",
    "sigma_star",
]


def bell_coefficient(parts: Sequence[int]) -> int:
    """Number of set partitions of a sum(parts)-element set whose block
    sizes form the given partition: n! / prod(j_i! * (i!)^{j_i})."""
    n = sum(parts)
    numerator = factorial(n)
    denominator = 1
    run = 0
    previous = None
    for p in parts:
        denominator *= factorial(p)
        if p == previous:
            run += 1
        else:
            run = 1
            previous = p
        denominator *= run
    quotient, remainder = divmod(numerator, denominator)
    assert remainder == 0, f"multinomial for {parts} is not integral"
    return quotient


class BellTable:
    """Memo of partial Bell polynomials over one fixed argument list.

    Keeps a shared power table args[i]^e across all (n, k) requests, so
    repeated compositions against the same arguments (the psi chain, the
    reference tables) do each polynomial product once. The owner may append
    to args between requests; computed entries never depend on the
    extension. Build and fill on one thread; a filled table can be read
    concurrently.
    """

    def __init__(self, args: Sequence[IntPoly]):
        self.args = args
        self._powers: dict[tuple[int, int], IntPoly] = {}
        self._values: dict[tuple[int, int], IntPoly] = {}

    def _power(self, index: int, exp: int) -> IntPoly:
        """args[index-1] ** exp, built up one multiplication at a time."""
        key = (index, exp)
        value = self._powers.get(key)
        if value is None:
            if exp == 1:
                value = self.args[index - 1]
            else:
                value = self._power(index, exp - 1) * self.args[index - 1]
            self._powers[key] = value
        return value

    def partial(self, n: int, k: int) -> IntPoly:
        """B_{n,k} composed with the table's arguments."""
        if not 1 <= k <= n:
            raise ValueError(f"need 1 <= k <= n: n={n}, k={k}")
        if len(self.args) < n - k + 1:
            raise ArityError(f"B_{{{n},{k}}} needs {n - k + 1} arguments, have {len(self.args)}")
        value = self._values.get((n, k))
        if value is None:
            value = self._compute(n, k)
            self._values[(n, k)] = value
        return value

    def _compute(self, n: int, k: int) -> IntPoly:
        from .polyring import _add_scaled, _mul_acc, _strip_zeros  # friend access

        acc: dict[int, int] = {}
        for gamma in partitions_with_length(n, k):
            coef = bell_coefficient(gamma)
            powers = []
            previous = None
            for part in gamma:
                if part == previous:
                    continue
                previous = part
                powers.append(self._power(part, gamma.count(part)))
            # fold the largest factors first: intermediates stay confined to
            # low monomial weight, and the one big factor crosses the inner
            # loop only once
            powers.sort(key=lambda f: f.partition_order, reverse=True)
            if len(powers) == 1:
                _add_scaled(acc, powers[0]._terms, coef)
                continue
            product = powers[0]
            for factor in powers[1:-1]:
                product = product * factor
            _mul_acc(acc, product._terms, powers[-1]._terms, coef)
        return IntPoly._raw(_strip_zeros(acc))

    def complete(self, n: int) -> IntPoly:
        """B_n = sum over k of B_{n,k} with the table's arguments."""
        total = IntPoly.zero()
        for k in range(1, n + 1):
            total = total + self.partial(n, k)
        return total


def bell_partial(n: int, k: int, args: Sequence[IntPoly]) -> IntPoly:
    """Partial Bell polynomial B_{n,k} composed with args (args[0] for a_1)."""
    return BellTable(list(args)).partial(n, k)


def bell_complete(n: int, args: Sequence[IntPoly]) -> IntPoly:
    """Complete Bell polynomial B_n composed with args."""
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    return BellTable(list(args)).complete(n)


@lru_cache(maxsize=None)
def stirling1(n: int, k: int) -> int:
    """Signed Stirling number of the first kind: coefficient of x^k in the
    falling factorial x(x-1)...(x-n+1). Zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    return stirling1(n - 1, k - 1) - (n - 1) * stirling1(n - 1, k)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind: set partitions of an n-set into
    k blocks. Zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def falling_expand(nu: int) -> list[int]:
    """Coefficients [c_0, ..., c_nu] with (p-1)(p-2)...(p-nu) = sum c_k p^k.

    c_k is the signed Stirling number stirling1(nu+1, k+1).
    """
    if nu < 0:
        raise ValueError(f"nu must be nonnegative: {nu}")
    return [stirling1(nu + 1, k + 1) for k in range(nu + 1)]


@lru_cache(maxsize=None)
def sigma_star(k: int) -> IntPoly:
    """k! times the k-th elementary symmetric polynomial rewritten in
    power-sum variables, with integer coefficients:

        sigma_star(k) = (-1)^k * B_k(-0!*x1, -1!*x2, ..., -(k-1)!*xk).

    The leading pattern is x1^k + ... + (-1)^{k-1} (k-1)! xk, one term per
    partition of k.
    """
    if k < 1:
        raise ValueError(f"k must be positive: {k}")
    args = [IntPoly.monomial({nu: 1}, -factorial(nu - 1)) for nu in range(1, k + 1)]
    value = bell_complete(k, args)
    return value if k % 2 == 0 else -value
