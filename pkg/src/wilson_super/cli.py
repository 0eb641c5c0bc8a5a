"""Command line interface.

Four subcommands: psi (print polynomial families), tables (regenerate the
built-in reference tables and compare), verify (congruence sweeps over odd
primes), conjectures (term-count and plus-minus-one evaluation suites).

Exit codes: 0 success, 1 a verification or comparison failed, 2 usage error.
The verify sweep fans out over primes with --threads workers (or the
WILSON_SUPER_THREADS environment variable); output is assembled by a single
writer in a deterministic order whatever the thread count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence

from . import congruences, conjectures, reference_tables
from .congruences import VerifyReport
from .polyring import IntPoly
from .psi_engine import PsiChain, latex_table, psi_all

VERIFY_METHODS = ("psi", "factorial", "iterative", "lerch", "lagrange", "expansion", "eisenstein")

_FAMILY_LABELS = {
    "psi": ("psi_{}", r"\psi_{{{}}}"),
    "big-psi": ("big_psi_{}", r"\Psi_{{{}}}"),
    "sigma": ("sigma_star_{}", r"\tilde{{\sigma}}^*_{{{}}}"),
}


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer: {text}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wilson-super",
        description="Wilson quotient supercongruences in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json", "latex"), default="text")
        p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    p_psi = sub.add_parser("psi", help="print psi and related polynomial families")
    p_psi.add_argument("--n", type=_positive_int, required=True, help="highest index to print")
    p_psi.add_argument(
        "--show",
        action="append",
        choices=tuple(_FAMILY_LABELS),
        help="family to include (repeatable; default psi)",
    )
    add_common(p_psi)

    p_tables = sub.add_parser("tables", help="regenerate the built-in reference tables")
    add_common(p_tables)

    p_verify = sub.add_parser("verify", help="congruence sweeps over odd primes")
    p_verify.add_argument("--n", type=_positive_int, default=1, help="congruence depth")
    p_verify.add_argument("--pmin", type=_positive_int, default=3, help="smallest prime (default 3)")
    p_verify.add_argument("--pmax", type=_positive_int, default=199, help="largest prime (default 199)")
    p_verify.add_argument(
        "--method",
        choices=VERIFY_METHODS + ("all",),
        default="psi",
        help="which check to run per prime (default psi)",
    )
    p_verify.add_argument("--threads", type=_positive_int, default=None, help="worker threads")
    add_common(p_verify)

    p_conj = sub.add_parser("conjectures", help="term-count and plus-minus-one suites")
    p_conj.add_argument("--n-max", type=_positive_int, required=True, dest="n_max")
    p_conj.add_argument("--pm1", action="store_true", help="also run the plus-minus-one suite")
    p_conj.add_argument("--strict", action="store_true", help="exit 1 when an open identity fails")
    add_common(p_conj)

    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _thread_count(flag: int | None) -> int | None:
    """Resolve the worker count from the flag or the environment; None means
    the environment value was unusable (the caller reports the usage error)."""
    if flag is not None:
        return flag
    env = os.environ.get("WILSON_SUPER_THREADS", "").strip()
    if not env:
        return 1
    try:
        count = int(env)
    except ValueError:
        return None
    return count if count >= 1 else None


def _usage_error(message: str) -> int:
    print(f"wilson-super: error: {message}", file=sys.stderr)
    return 2


# -- psi ----------------------------------------------------------------------


def _cmd_psi(args: argparse.Namespace) -> int:
    families = args.show or ["psi"]
    chain = psi_all(args.n)
    getters: dict[str, Callable[[int], IntPoly]] = {
        "psi": chain.psi,
        "big-psi": chain.big_psi,
        "sigma": chain.sigma_star,
    }
    if args.format == "json":
        payload = {
            "command": "psi",
            "n": args.n,
            "polynomials": [
                {
                    "family": family,
                    "index": index,
                    "terms": getters[family](index).to_json_terms(),
                }
                for family in families
                for index in range(1, args.n + 1)
            ],
        }
        _emit(json.dumps(payload, separators=(",", ":")), args.out)
    elif args.format == "latex":
        rows = [
            (_FAMILY_LABELS[family][1].format(index), getters[family](index))
            for family in families
            for index in range(1, args.n + 1)
        ]
        _emit(latex_table(rows), args.out)
    else:
        lines = [
            f"{_FAMILY_LABELS[family][0].format(index)} = {getters[family](index).to_text()}"
            for family in families
            for index in range(1, args.n + 1)
        ]
        _emit("\n".join(lines), args.out)
    return 0


# -- tables -------------------------------------------------------------------


def _bell_basis_text(row: dict[tuple[int, ...], int]) -> str:
    if not row:
        return "0"
    chunks = []
    for (m, nu), coef in sorted(row.items()):
        body = f"B({m},{nu})" if abs(coef) == 1 else f"{abs(coef)}*B({m},{nu})"
        if not chunks:
            chunks.append(f"-{body}" if coef < 0 else body)
        else:
            chunks.append(f"- {body}" if coef < 0 else f"+ {body}")
    return " ".join(chunks)


def _bell_basis_latex(row: dict[tuple[int, ...], int]) -> str:
    if not row:
        return "0"
    chunks = []
    for (m, nu), coef in sorted(row.items()):
        body = f"B_{{{m},{nu}}}" if abs(coef) == 1 else f"{abs(coef)} B_{{{m},{nu}}}"
        if not chunks:
            chunks.append(f"-{body}" if coef < 0 else body)
        else:
            chunks.append(f"- {body}" if coef < 0 else f"+ {body}")
    return " ".join(chunks)


_ROW_LATEX = {
    "psi": r"\psi_{{{}}}",
    "sigma_star": r"\tilde{{\sigma}}^*_{{{}}}",
    "big_psi": r"\Psi_{{{}}}",
}


def _row_label_latex(label: str) -> str:
    if label.startswith("bell_"):
        _, n, k = label.split("_")
        return rf"B_{{{n},{k}}}"
    stem, index = label.rsplit("_", 1)
    return _ROW_LATEX[stem].format(index)


def _cmd_tables(args: argparse.Namespace) -> int:
    chain = psi_all(6)
    diffs: list[str] = []
    for number in reference_tables.TABLE_NAMES:
        diffs.extend(reference_tables.diff_table(number, chain))
    match = not diffs

    if args.format == "json":
        payload: dict[str, object] = {"command": "tables", "match": match, "tables": {}}
        for number, name in reference_tables.TABLE_NAMES.items():
            computed = reference_tables.computed_table(number, chain)
            if number == 4:
                rows: dict[str, object] = {
                    label: [
                        {"m": m, "nu": nu, "coef": str(coef)}
                        for (m, nu), coef in sorted(row.items())
                    ]
                    for label, row in computed.items()
                }
            else:
                rows = {
                    label: reference_tables.fixture_poly(row).to_json_terms()
                    for label, row in computed.items()
                }
            payload["tables"][str(number)] = {"name": name, "rows": rows}  # type: ignore[index]
        _emit(json.dumps(payload, separators=(",", ":")), args.out)
    elif args.format == "latex":
        blocks = []
        for number, name in reference_tables.TABLE_NAMES.items():
            computed = reference_tables.computed_table(number, chain)
            blocks.append(f"% table {number}: {name}")
            if number == 4:
                lines = [
                    r"\begin{table}[ht]",
                    r"\centering",
                    r"\begin{tabular}{r@{\;=\;}l}",
                    r"\toprule",
                ]
                for label, row in computed.items():
                    lines.append(
                        f"${_row_label_latex(label)}$ & ${_bell_basis_latex(row)}$ \\\\"
                    )
                lines += [r"\bottomrule", r"\end{tabular}", r"\end{table}"]
                blocks.append("\n".join(lines))
            else:
                rows = [
                    (_row_label_latex(label), reference_tables.fixture_poly(row))
                    for label, row in computed.items()
                ]
                blocks.append(latex_table(rows))
        _emit("\n".join(blocks), args.out)
    else:
        lines = []
        for number, name in reference_tables.TABLE_NAMES.items():
            computed = reference_tables.computed_table(number, chain)
            lines.append(f"# table {number}: {name}")
            for label, row in computed.items():
                if number == 4:
                    lines.append(f"{label} = {_bell_basis_text(row)}")
                else:
                    lines.append(f"{label} = {reference_tables.fixture_poly(row).to_text()}")
            lines.append(f"# table {number} match: {'yes' if not reference_tables.diff_table(number, chain) else 'no'}")
        _emit("\n".join(lines), args.out)

    if not match:
        for line in diffs:
            print(line, file=sys.stderr)
        return 1
    return 0


# -- verify -------------------------------------------------------------------


def _eisenstein_pair(p: int) -> tuple[int, int]:
    return (2, 2) if p == 3 else (2, 3)


def _reports_for_prime(p: int, n: int, methods: Sequence[str], chain: PsiChain | None) -> list[VerifyReport]:
    out = []
    for method in methods:
        if method == "psi":
            out.append(congruences.check_wilson_via_psi(p, n, chain))
        elif method == "factorial":
            out.append(congruences.check_factorial_via_psi(p, n, chain))
        elif method == "iterative":
            out.append(congruences.check_wilson_iterative(p, n))
        elif method == "lerch":
            out.append(congruences.check_lerch(p))
        elif method == "lagrange":
            out.append(congruences.check_lagrange_product(p))
        elif method == "expansion":
            out.append(congruences.check_expansion_identity(p))
        else:
            a, b = _eisenstein_pair(p)
            out.append(congruences.check_eisenstein_log(p, a, b))
    return out


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.pmin <= args.n:
        return _usage_error(f"--pmin must exceed --n: pmin={args.pmin}, n={args.n}")
    methods = VERIFY_METHODS if args.method == "all" else (args.method,)
    workers = _thread_count(args.threads)
    if workers is None:
        return _usage_error(
            f"WILSON_SUPER_THREADS must be a positive integer: "
            f"{os.environ.get('WILSON_SUPER_THREADS')!r}"
        )
    primes = congruences.primes_in_range(args.pmin, args.pmax)
    chain = psi_all(args.n) if {"psi", "factorial"} & set(methods) else None

    if workers == 1 or len(primes) < 2:
        per_prime = [_reports_for_prime(p, args.n, methods, chain) for p in primes]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_prime = list(
                pool.map(lambda p: _reports_for_prime(p, args.n, methods, chain), primes)
            )
    reports = [report for group in per_prime for report in group]
    failures = sum(1 for report in reports if not report.passed)

    if args.format == "json":
        lines = [json.dumps(report.to_json_dict(), separators=(",", ":")) for report in reports]
        summary = {
            "summary": {"checks": len(reports), "passed": len(reports) - failures, "failed": failures}
        }
        lines.append(json.dumps(summary, separators=(",", ":")))
        _emit("\n".join(lines), args.out)
    elif args.format == "latex":
        lines = [
            r"\begin{tabular}{rrlrrrl}",
            r"\toprule",
            r"$p$ & $n$ & method & lhs & rhs & modulus & status \\",
            r"\midrule",
        ]
        for report in reports:
            status = "pass" if report.passed else "fail"
            lines.append(
                f"{report.p} & {report.n} & {report.method} & {report.lhs} & "
                f"{report.rhs} & {report.modulus} & {status} \\\\"
            )
        lines += [r"\bottomrule", r"\end{tabular}"]
        lines.append(f"% checks={len(reports)} passed={len(reports) - failures} failed={failures}")
        _emit("\n".join(lines), args.out)
    else:
        lines = [report.to_text() for report in reports]
        lines.append(f"checks={len(reports)} passed={len(reports) - failures} failed={failures}")
        _emit("\n".join(lines), args.out)
    return 1 if failures else 0


# -- conjectures --------------------------------------------------------------


def _cmd_conjectures(args: argparse.Namespace) -> int:
    chain = psi_all(args.n_max)
    termcount = conjectures.check_term_count(args.n_max, chain)
    pm1_reports = []
    if args.pm1:
        pm1_reports = [
            conjectures.check_pm_one_conjecture(args.n_max, sign, chain) for sign in (1, -1)
        ]
    all_ok = termcount.all_equal and all(report.all_match for report in pm1_reports)

    if args.format == "json":
        payload: dict[str, object] = {
            "command": "conjectures",
            "n_max": args.n_max,
            "termcount": [row.to_json_dict() for row in termcount.rows],
            "all_hold": all_ok,
        }
        if pm1_reports:
            payload["pm1"] = [
                entry for report in pm1_reports for row in report.rows for entry in row.to_json_dicts()
            ]
        _emit(json.dumps(payload, separators=(",", ":")), args.out)
    elif args.format == "latex":
        lines = [
            r"\begin{tabular}{rrrl}",
            r"\toprule",
            r"$n$ & method & lhs & rhs \\",
            r"\midrule",
        ]
        for row in termcount.rows:
            lines.append(f"{row.n} & termcount & {row.count} & {row.bound} \\\\")
        for report in pm1_reports:
            for row in report.rows:
                lines.append(f"{row.n} & pm1-bell ({row.sign:+d}) & {row.evaluated} & {row.bell_value} \\\\")
                lines.append(f"{row.n} & pm1-gf ({row.sign:+d}) & {row.evaluated} & {row.gf_value} \\\\")
        lines += [r"\bottomrule", r"\end{tabular}", f"% all_hold={str(all_ok).lower()}"]
        _emit("\n".join(lines), args.out)
    else:
        lines = [row.to_text() for row in termcount.rows]
        for report in pm1_reports:
            for row in report.rows:
                lines.extend(row.to_text_lines())
        lines.append(f"all identities hold: {'yes' if all_ok else 'no'}")
        _emit("\n".join(lines), args.out)

    if args.strict and not all_ok:
        return 1
    return 0


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv and run one subcommand; returns the process exit code."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "psi":
        return _cmd_psi(args)
    if args.command == "tables":
        return _cmd_tables(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_conjectures(args)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
