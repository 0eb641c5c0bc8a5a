"""Built-in reference tables and frozen sequences, with regeneration checks.

Six tables cover the low-order polynomial families end to end:

  1 psi-low       psi_1..psi_4
  2 sigma-star    sigma_star(1)..sigma_star(5)
  3 bell-psi      B_{n,k}(psi_1, ...) for n <= 4
  4 big-psi-bell  the corrections for n <= 5 in the Bell-composition basis
  5 big-psi       the same corrections written out in x variables
  6 psi-high      psi_5 and psi_6

Polynomials are stored as partition -> coefficient maps ((1, 1, 3) names
x1^2*x3); table 4 maps (m, nu) pairs to integers. Comparisons are exact map
equality, never string equality.
"""

from __future__ import annotations

from typing import Mapping

from .polyring import IntPoly
from .psi_engine import PsiChain, big_psi_bell_basis, psi_all

__all__ = [
    "TABLE_NAMES",
    "expected_table",
    "computed_table",
    "diff_table",
    "verify_tables",
    "fixture_poly",
    "BIG_PSI_AT_ONE",
    "PSI_AT_ONE",
    "NEG_PSI_AT_MINUS_ONE",
    "PF_FIRST_30",
    "PFS_FIRST_16",
    "PFS_30",
]

TABLE_NAMES: dict[int, str] = {
    1: "psi-low",
    2: "sigma-star",
    3: "bell-psi",
    4: "big-psi-bell",
    5: "big-psi",
    6: "psi-high",
}

# -- frozen integer sequences (exact evaluations, n = 1, 2, ...) --------------

BIG_PSI_AT_ONE = (0, -2, 3, -16, 50, -366, 1932, -16640, 131112, -1272600, 13642200)
PSI_AT_ONE = (1, 0, 3, -4, 30, -186, 630, -11600, 26712, -1005480, 2581920)
NEG_PSI_AT_MINUS_ONE = (1, 2, 9, 44, 290, 2154, 19026, 186752, 2070792, 25119720)

PF_FIRST_30 = (
    1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176,
    231, 297, 385, 490, 627, 792, 1002, 1255, 1575, 1958, 2436, 3010, 3718, 4565, 5604,
)
PFS_FIRST_16 = (1, 3, 6, 11, 18, 29, 44, 66, 96, 138, 194, 271, 372, 507, 683, 914)
PFS_30 = 28628

# -- table contents -----------------------------------------------------------

_PSI_LOW: dict[str, dict[tuple[int, ...], int]] = {
    "psi_1": {(1,): 1},
    "psi_2": {(1,): 2, (1, 1): -1, (2,): -1},
    "psi_3": {(1,): 6, (1, 1): -6, (1, 1, 1): 1, (1, 2): 3, (2,): -3, (3,): 2},
    "psi_4": {
        (1,): 24,
        (1, 1): -36,
        (1, 1, 1): 12,
        (1, 1, 1, 1): -1,
        (1, 1, 2): -6,
        (1, 2): 24,
        (1, 3): -8,
        (2,): -12,
        (2, 2): -3,
        (3,): 8,
        (4,): -6,
    },
}

_SIGMA_STAR: dict[str, dict[tuple[int, ...], int]] = {
    "sigma_star_1": {(1,): 1},
    "sigma_star_2": {(1, 1): 1, (2,): -1},
    "sigma_star_3": {(1, 1, 1): 1, (1, 2): -3, (3,): 2},
    "sigma_star_4": {(1, 1, 1, 1): 1, (1, 1, 2): -6, (1, 3): 8, (2, 2): 3, (4,): -6},
    "sigma_star_5": {
        (1, 1, 1, 1, 1): 1,
        (1, 1, 1, 2): -10,
        (1, 1, 3): 20,
        (1, 2, 2): 15,
        (1, 4): -30,
        (2, 3): -20,
        (5,): 24,
    },
}

_BELL_PSI: dict[str, dict[tuple[int, ...], int]] = {
    "bell_1_1": {(1,): 1},
    "bell_2_1": dict(_PSI_LOW["psi_2"]),
    "bell_2_2": {(1, 1): 1},
    "bell_3_1": dict(_PSI_LOW["psi_3"]),
    "bell_3_2": {(1, 1): 6, (1, 1, 1): -3, (1, 2): -3},
    "bell_3_3": {(1, 1, 1): 1},
    "bell_4_1": dict(_PSI_LOW["psi_4"]),
    "bell_4_2": {
        (1, 1): 36,
        (1, 1, 1): -36,
        (1, 1, 1, 1): 7,
        (1, 1, 2): 18,
        (1, 2): -24,
        (1, 3): 8,
        (2, 2): 3,
    },
    "bell_4_3": {(1, 1, 1): 12, (1, 1, 1, 1): -6, (1, 1, 2): -6},
    "bell_4_4": {(1, 1, 1, 1): 1},
}

_BIG_PSI_BELL: dict[str, dict[tuple[int, ...], int]] = {
    "big_psi_1": {},
    "big_psi_2": {(2, 2): -2},
    "big_psi_3": {(2, 2): 9, (3, 2): -2, (3, 3): -6},
    "big_psi_4": {(2, 2): -12, (3, 2): 12, (3, 3): 44, (4, 2): -2, (4, 3): -6, (4, 4): -24},
    "big_psi_5": {
        (3, 2): -20,
        (3, 3): -120,
        (4, 2): 15,
        (4, 3): 55,
        (4, 4): 250,
        (5, 2): -2,
        (5, 3): -6,
        (5, 4): -24,
        (5, 5): -120,
    },
}

_BIG_PSI: dict[str, dict[tuple[int, ...], int]] = {
    "big_psi_1": {},
    "big_psi_2": {(1, 1): -2},
    "big_psi_3": {(1, 1): -3, (1, 2): 6},
    "big_psi_4": {(1, 1): -12, (1, 1, 1): 8, (1, 1, 1, 1): -2, (1, 2): 12, (1, 3): -16, (2, 2): -6},
    "big_psi_5": {
        (1, 1): -60,
        (1, 1, 1): 60,
        (1, 1, 1, 1): -15,
        (1, 1, 1, 2): 20,
        (1, 1, 2): -60,
        (1, 2): 60,
        (1, 3): -40,
        (1, 4): 60,
        (2, 2): -15,
        (2, 3): 40,
    },
}

_PSI_HIGH: dict[str, dict[tuple[int, ...], int]] = {
    "psi_5": {
        (1,): 120,
        (1, 1): -240,
        (1, 1, 1): 120,
        (1, 1, 1, 1): -20,
        (1, 1, 1, 1, 1): 1,
        (1, 1, 1, 2): 10,
        (1, 1, 2): -90,
        (1, 1, 3): 20,
        (1, 2): 180,
        (1, 2, 2): 15,
        (1, 3): -80,
        (1, 4): 30,
        (2,): -60,
        (2, 2): -30,
        (2, 3): 20,
        (3,): 40,
        (4,): -30,
        (5,): 24,
    },
    "psi_6": {
        (1,): 720,
        (1, 1): -1800,
        (1, 1, 1): 1200,
        (1, 1, 1, 1): -300,
        (1, 1, 1, 1, 1): 30,
        (1, 1, 1, 1, 1, 1): -1,
        (1, 1, 1, 1, 2): -15,
        (1, 1, 1, 2): 240,
        (1, 1, 1, 3): -40,
        (1, 1, 2): -1080,
        (1, 1, 2, 2): -45,
        (1, 1, 3): 360,
        (1, 1, 4): -90,
        (1, 2): 1440,
        (1, 2, 2): 270,
        (1, 2, 3): -120,
        (1, 3): -720,
        (1, 4): 360,
        (1, 5): -144,
        (2,): -360,
        (2, 2): -270,
        (2, 2, 2): -15,
        (2, 3): 240,
        (2, 4): -90,
        (3,): 240,
        (3, 3): -40,
        (4,): -180,
        (5,): 144,
        (6,): -120,
    },
}

_EXPECTED: dict[int, dict[str, dict[tuple[int, ...], int]]] = {
    1: _PSI_LOW,
    2: _SIGMA_STAR,
    3: _BELL_PSI,
    4: _BIG_PSI_BELL,
    5: _BIG_PSI,
    6: _PSI_HIGH,
}


def fixture_poly(coefficients: Mapping[tuple[int, ...], int]) -> IntPoly:
    """Build an IntPoly from a partition -> coefficient map."""
    terms = []
    for partition, coef in coefficients.items():
        exps: dict[int, int] = {}
        for var in partition:
            exps[var] = exps.get(var, 0) + 1
        terms.append((exps, coef))
    return IntPoly.from_terms(terms)


def expected_table(number: int) -> dict[str, dict[tuple[int, ...], int]]:
    """The embedded rows of one table, label -> coefficient map."""
    if number not in _EXPECTED:
        raise ValueError(f"table number must be 1..6: {number}")
    return {label: dict(row) for label, row in _EXPECTED[number].items()}


def computed_table(number: int, chain: PsiChain | None = None) -> dict[str, dict[tuple[int, ...], int]]:
    """Regenerate one table from the engine, in the same shape as
    expected_table. A chain of depth >= 6 may be supplied to share work."""
    if number not in _EXPECTED:
        raise ValueError(f"table number must be 1..6: {number}")
    if chain is None:
        chain = psi_all(6)
    elif chain.n_max < 6:
        raise ValueError(f"chain holds only {chain.n_max} levels, need 6")
    if number == 1:
        return {f"psi_{n}": chain.psi(n).coefficient_map() for n in range(1, 5)}
    if number == 2:
        return {f"sigma_star_{k}": chain.sigma_star(k).coefficient_map() for k in range(1, 6)}
    if number == 3:
        return {
            f"bell_{n}_{k}": chain.bell(n, k).coefficient_map()
            for n in range(1, 5)
            for k in range(1, n + 1)
        }
    if number == 4:
        return {f"big_psi_{n}": dict(big_psi_bell_basis(n)) for n in range(1, 6)}
    if number == 5:
        return {f"big_psi_{n}": chain.big_psi(n).coefficient_map() for n in range(1, 6)}
    return {f"psi_{n}": chain.psi(n).coefficient_map() for n in range(5, 7)}


def diff_table(number: int, chain: PsiChain | None = None) -> list[str]:
    """Human-readable mismatches between the embedded and regenerated table;
    empty when they agree exactly."""
    expected = expected_table(number)
    computed = computed_table(number, chain)
    out: list[str] = []
    for label in sorted(set(expected) | set(computed)):
        want = expected.get(label)
        got = computed.get(label)
        if want is None:
            out.append(f"table {number} ({TABLE_NAMES[number]}): unexpected row {label}")
            continue
        if got is None:
            out.append(f"table {number} ({TABLE_NAMES[number]}): missing row {label}")
            continue
        for key in sorted(set(want) | set(got)):
            a = want.get(key, 0)
            b = got.get(key, 0)
            if a != b:
                out.append(
                    f"table {number} ({TABLE_NAMES[number]}), row {label}, "
                    f"entry {key}: expected {a}, computed {b}"
                )
    return out


def verify_tables(chain: PsiChain | None = None) -> dict[int, list[str]]:
    """diff_table for all six tables; all-empty values mean a full match."""
    if chain is None:
        chain = psi_all(6)
    return {number: diff_table(number, chain) for number in TABLE_NAMES}
