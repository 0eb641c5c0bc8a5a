"""Exact-arithmetic Wilson-quotient supercongruences.

The package builds the integer polynomials psi_n whose evaluations at power
sums of Fermat quotients give the Wilson quotient modulo arbitrary prime
powers, and verifies every congruence involved against brute-force oracles.
"""

from .partitions import Partition, count_partitions, partitions_of, pfs
from .polyring import ArityError, IntPoly
from .bellstirling import (
    BellTable,
    bell_coefficient,
    bell_complete,
    bell_partial,
    falling_expand,
    sigma_star,
    stirling1,
    stirling2,
)
from .psi_engine import (
    PsiChain,
    StructuralReport,
    big_psi,
    big_psi_bell_basis,
    latex_table,
    psi,
    psi_all,
    psi_unfolded,
    structural_report,
)
from .congruences import (
    ModCtx,
    QSums,
    VerifyReport,
    check_eisenstein_log,
    check_expansion_identity,
    check_factorial_via_psi,
    check_lagrange_product,
    check_lerch,
    check_wilson_iterative,
    check_wilson_via_psi,
    factorial_via_psi,
    fermat_quotient,
    is_odd_prime,
    oracle_factorial,
    oracle_wilson,
    primes_in_range,
    q_power_sums,
    wilson_iterative,
    wilson_quotient,
    wilson_via_psi,
)
from .conjectures import (
    PmOneReport,
    RatSeries,
    TermCountReport,
    alt_harmonic,
    bell_complete_rational,
    check_pm_one_conjecture,
    check_term_count,
    pm_one_gf_series,
    pm_one_sequences,
    ser_compose_scale,
    ser_exp,
    ser_inv_one_minus_x,
    ser_log1p,
    ser_mul,
    ser_x,
)

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "count_partitions",
    "partitions_of",
    "pfs",
    "ArityError",
    "IntPoly",
    "BellTable",
    "bell_coefficient",
    "bell_complete",
    "bell_partial",
    "falling_expand",
    "sigma_star",
    "stirling1",
    "stirling2",
    "PsiChain",
    "StructuralReport",
    "big_psi",
    "big_psi_bell_basis",
    "latex_table",
    "psi",
    "psi_all",
    "psi_unfolded",
    "structural_report",
    "ModCtx",
    "QSums",
    "VerifyReport",
    "check_eisenstein_log",
    "check_expansion_identity",
    "check_factorial_via_psi",
    "check_lagrange_product",
    "check_lerch",
    "check_wilson_iterative",
    "check_wilson_via_psi",
    "factorial_via_psi",
    "fermat_quotient",
    "is_odd_prime",
    "oracle_factorial",
    "oracle_wilson",
    "primes_in_range",
    "q_power_sums",
    "wilson_iterative",
    "wilson_quotient",
    "wilson_via_psi",
    "PmOneReport",
    "RatSeries",
    "TermCountReport",
    "alt_harmonic",
    "bell_complete_rational",
    "check_pm_one_conjecture",
    "check_term_count",
    "pm_one_gf_series",
    "pm_one_sequences",
    "ser_compose_scale",
    "ser_exp",
    "ser_inv_one_minus_x",
    "ser_log1p",
    "ser_mul",
    "ser_x",
    "__version__",
]
