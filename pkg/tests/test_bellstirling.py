import random
from fractions import Fraction
from itertools import combinations
from math import comb, factorial, prod

import pytest

from wilson_super.bellstirling import (
    BellTable,
    bell_coefficient,
    bell_complete,
    bell_partial,
    falling_expand,
    sigma_star,
    stirling1,
    stirling2,
)
from wilson_super.partitions import count_partitions, partitions_of
from wilson_super.polyring import ArityError, IntPoly

x1 = IntPoly.variable(1)
x2 = IntPoly.variable(2)
x3 = IntPoly.variable(3)

VARS = [IntPoly.variable(i) for i in range(1, 13)]


# multinomial coefficients -------------------------------------------------------


def test_bell_coefficient_examples():
    assert bell_coefficient((1,)) == 1
    assert bell_coefficient((1, 1, 2)) == 6
    assert bell_coefficient((2, 2)) == 3
    assert bell_coefficient((1, 3)) == 4


def test_bell_coefficients_sum_to_bell_numbers():
    # row sums over all partitions give the set-partition counts 1,2,5,15,52,...
    bell_numbers = [1, 2, 5, 15, 52, 203, 877, 4140]
    for n, expected in enumerate(bell_numbers, start=1):
        assert sum(bell_coefficient(tuple(q)) for q in partitions_of(n)) == expected


# partial Bell polynomials -------------------------------------------------------


def test_partial_examples():
    assert bell_partial(3, 2, VARS) == 3 * x1 * x2
    assert bell_partial(4, 2, VARS) == 4 * x1 * x3 + 3 * x2**2
    assert bell_partial(5, 1, VARS) == IntPoly.variable(5)
    assert bell_partial(4, 4, VARS) == x1**4


def test_complete_examples():
    assert bell_complete(1, VARS) == x1
    assert bell_complete(2, VARS) == x1**2 + x2
    assert bell_complete(3, VARS) == x1**3 + 3 * x1 * x2 + x3


def test_partial_is_homogeneous_of_degree_k():
    for n in range(1, 11):
        for k in range(1, n + 1):
            value = bell_partial(n, k, VARS)
            for exps, _ in value.terms():
                assert sum(exps.values()) == k


def test_partial_order_and_term_count():
    for n in range(1, 13):
        for k in range(1, n + 1):
            value = bell_partial(n, k, VARS)
            assert value.partition_order == n
            assert value.term_count == count_partitions(n, k)


def test_partial_rejects_bad_indices():
    with pytest.raises(ValueError):
        bell_partial(3, 0, VARS)
    with pytest.raises(ValueError):
        bell_partial(3, 4, VARS)
    with pytest.raises(ArityError):
        bell_partial(5, 2, VARS[:3])


def test_complete_rejects_nonpositive():
    with pytest.raises(ValueError):
        bell_complete(0, VARS)


def test_table_caches_and_allows_growing_args():
    args = [x1]
    table = BellTable(args)
    assert table.partial(1, 1) == x1
    args.append(x2)
    args.append(x3)
    assert table.partial(3, 2) == 3 * x1 * x2
    assert table.partial(3, 2) is table.partial(3, 2)


def test_stirling_specializations():
    # all arguments 1 counts set partitions; factorial arguments count
    # permutations by cycle type
    ones = [IntPoly.one()] * 12
    cycles = [IntPoly.constant(factorial(i)) for i in range(12)]
    for n in range(1, 10):
        for k in range(1, n + 1):
            assert bell_partial(n, k, ones).constant_term == stirling2(n, k)
            assert bell_partial(n, k, cycles).constant_term == abs(stirling1(n, k))


def test_idempotent_specialization():
    # arguments a_i = i give the idempotent counts C(n,k) k^(n-k)
    idem = [IntPoly.constant(i) for i in range(1, 13)]
    for n in range(1, 10):
        for k in range(1, n + 1):
            expected = comb(n, k) * k ** (n - k)
            assert bell_partial(n, k, idem).constant_term == expected


def _series_pow_coefficient(args, k, n):
    """Coefficient of t^n in (sum_j args[j-1] t^j / j!)^k / k!, times n!."""
    base = [Fraction(0)] + [Fraction(a, factorial(j)) for j, a in enumerate(args, start=1)]
    power = [Fraction(1)] + [Fraction(0)] * n
    for _ in range(k):
        out = [Fraction(0)] * (n + 1)
        for i, c in enumerate(power):
            if not c:
                continue
            for j, d in enumerate(base[: n - i + 1]):
                out[i + j] += c * d
        power = out
    return power[n] * factorial(n) / factorial(k)


def test_partial_matches_generating_function():
    rng = random.Random(20210)
    for n in range(1, 9):
        for k in range(1, n + 1):
            values = [rng.randint(-5, 5) for _ in range(n - k + 1)]
            expected = _series_pow_coefficient(values, k, n)
            assert expected.denominator == 1
            consts = [IntPoly.constant(v) for v in values]
            assert bell_partial(n, k, consts).constant_term == expected


def test_complete_satisfies_shift_recurrence():
    # B_{n+1}(a) = sum_i C(n,i) a_{i+1} B_{n-i}(a) with B_0 = 1
    rng = random.Random(977)
    values = [rng.randint(-4, 4) for _ in range(9)]
    args = [IntPoly.constant(v) for v in values]
    complete = [1] + [bell_complete(n, args).constant_term for n in range(1, 9)]
    for n in range(8):
        expected = sum(comb(n, i) * values[i] * complete[n - i] for i in range(n + 1))
        assert complete[n + 1] == expected


# Stirling numbers ---------------------------------------------------------------


def test_stirling_examples():
    assert stirling1(3, 1) == 2
    assert stirling1(4, 2) == 11
    assert stirling1(4, 1) == -6
    assert stirling2(4, 2) == 7
    assert stirling2(5, 3) == 25


def test_stirling_out_of_range_is_zero():
    assert stirling1(3, 5) == 0
    assert stirling1(-1, 0) == 0
    assert stirling1(2, -1) == 0
    assert stirling2(3, 4) == 0
    assert stirling2(-2, 1) == 0


def test_stirling1_sign_pattern():
    for n in range(1, 10):
        for k in range(1, n + 1):
            value = stirling1(n, k)
            assert value != 0
            assert value > 0 if (n - k) % 2 == 0 else value < 0


def test_stirling1_row_sums_vanish():
    # substituting x = 1 into x(x-1)...(x-n+1) gives 0 for n >= 2
    for n in range(2, 12):
        assert sum(stirling1(n, k) for k in range(n + 1)) == 0


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        for j, d in enumerate(b):
            out[i + j] += c * d
    return out


def test_stirling1_matches_falling_factorial_expansion():
    coeffs = [1]
    for i in range(10):
        assert coeffs == [stirling1(i, k) for k in range(i + 1)]
        coeffs = _poly_mul(coeffs, [-i, 1])


def test_stirling2_matches_inclusion_exclusion():
    for n in range(1, 11):
        for k in range(1, n + 1):
            total = sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1))
            assert total == factorial(k) * stirling2(n, k)


def test_stirling_orthogonality():
    for n in range(9):
        for m in range(9):
            total = sum(stirling1(n, k) * stirling2(k, m) for k in range(n + 1))
            assert total == (1 if n == m else 0)


# falling factorial coefficient vectors ------------------------------------------


def test_falling_expand_examples():
    assert falling_expand(0) == [1]
    assert falling_expand(1) == [-1, 1]
    assert falling_expand(2) == [2, -3, 1]
    with pytest.raises(ValueError):
        falling_expand(-1)


def test_falling_expand_evaluates_to_product():
    for nu in range(9):
        coeffs = falling_expand(nu)
        for p in (2, 7, 13, 100):
            direct = prod(p - i for i in range(1, nu + 1))
            assert sum(c * p**k for k, c in enumerate(coeffs)) == direct
    assert sum(c * 7**k for k, c in enumerate(falling_expand(3))) == 120


# scaled elementary symmetric polynomials ----------------------------------------


def test_sigma_star_examples():
    assert sigma_star(1) == x1
    assert sigma_star(2) == x1**2 - x2
    assert sigma_star(4) == (
        x1**4
        - 6 * x1**2 * x2
        + 8 * x1 * x3
        + 3 * x2**2
        - 6 * IntPoly.variable(4)
    )
    with pytest.raises(ValueError):
        sigma_star(0)


def test_sigma_star_shape():
    for k in range(1, 21):
        value = sigma_star(k)
        assert value.term_count == count_partitions(k)
        assert value.partition_order == k
        assert value.coefficient({1: k}) == 1
        if k >= 2:
            assert value.coefficient({k: 1}) == (-1) ** (k - 1) * factorial(k - 1)


def test_sigma_star_coefficients_sum_to_zero():
    for k in range(2, 21):
        assert value_at_ones(sigma_star(k)) == 0


def value_at_ones(f):
    return f.eval_int([1] * max(f.max_variable(), 1))


def test_sigma_star_newton_identity():
    # k! e_k(values) equals sigma_star(k) at the power sums of the values
    rng = random.Random(4099)
    for trial in range(12):
        size = rng.randint(1, 8)
        values = [rng.randint(-6, 6) for _ in range(size)]
        power_sums = [sum(v**nu for v in values) for nu in range(1, size + 1)]
        for k in range(1, size + 1):
            elementary = sum(prod(c) for c in combinations(values, k))
            assert sigma_star(k).eval_int(power_sums[:k]) == factorial(k) * elementary
