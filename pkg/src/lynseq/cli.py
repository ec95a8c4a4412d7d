"""Command-line front end.

    lynseq formula eds --sigma 5 --n 20
    lynseq table mts --sigma 2,5,10 --n 1..15
    lynseq table --paper-tables 4
    lynseq count --word aabb --what subsequences --mode total
    lynseq enum --sigma 2 --len 4
    lynseq witness --sigma 2 --n 5 --all
    lynseq verify all

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 budget
exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import backend, formulas, oracle
from .budget import DEFAULT_MAX_SUBSETS, DEFAULT_MAX_WORDS, Budget, BudgetExceededError
from .exactnum import render_decimal
from .lyndon_enum import lyndon_words
from .words import WordParseError, parse_word

ROUNDING_MODE = "half-away-from-zero"

MTF_NOTE = (
    "note: MTF uses the C(n+1,2)-based formula; exhaustive search refutes the "
    "C(n,2) variant (sigma=2, n=4: true maximum 8, variant gives 4)."
)
MDF_NOTE = "note: MDF cells with n < sigma are outside the formula's regime and were skipped."


def _parse_sigma_list(spec: str) -> list[int]:
    try:
        values = [int(part) for part in spec.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad sigma list {spec!r}")
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("sigma values must be >= 1")
    return values


def _parse_n_spec(spec: str) -> list[int]:
    """n values: a range '1..15', a list '1,2,5', or both '1..10,15,20'."""
    out: list[int] = []
    try:
        for part in spec.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..", 1)
                lo, hi = int(lo), int(hi)
                if lo > hi:
                    raise argparse.ArgumentTypeError(f"empty range {part!r}")
                out.extend(range(lo, hi + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad n specification {spec!r}")
    if not out or any(v < 1 for v in out):
        raise argparse.ArgumentTypeError("n values must be >= 1")
    return out


def _json_value(v):
    """Exact JSON form: decimal strings for integers, num/den pairs for rationals."""
    if isinstance(v, bool):
        return v
    if isinstance(v, Fraction):
        return {"num": str(v.numerator), "den": str(v.denominator)}
    if isinstance(v, int):
        return str(v)
    if isinstance(v, tuple):
        return [_json_value(x) for x in v]
    raise TypeError(f"cannot serialize {type(v)}")


def _cell_text(value, decimals: int) -> str:
    if isinstance(value, Fraction):
        return render_decimal(value, decimals)
    return str(value)


def _markdown(header: list[str], rows: list[list[str]]) -> str:
    lines = ["| " + " | ".join(header) + " |"]
    lines.append("|" + "|".join("---:" for _ in header) + "|")
    for row in rows:
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines)


def _csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


# -- commands -----------------------------------------------------------------


def _cmd_formula(args) -> int:
    report = formulas.compute_report(args.quantity, args.sigma, args.n)
    value = report.value
    if args.format == "json":
        payload = {
            "quantity": report.quantity,
            "sigma": args.sigma,
            "n": args.n,
            "provenance": report.provenance,
            "value": _json_value(value),
            "rounding": ROUNDING_MODE,
        }
        if isinstance(value, Fraction):
            payload["rendered"] = render_decimal(value, args.decimals)
        print(json.dumps(payload, indent=2))
        return 0
    if isinstance(value, Fraction):
        print(f"{render_decimal(value, args.decimals)} (= {value.numerator}/{value.denominator})")
    else:
        print(value)
    return 0


def _table_grid(quantity: str, sigmas: list[int], ns: list[int], decimals: int):
    q = quantity.upper()
    header = ["n"] + [f"{q}({s},n)" for s in sigmas]
    rows = []
    cells = []
    for n in ns:
        row = [str(n)]
        for s in sigmas:
            value = formulas.compute(q, s, n)
            cells.append((s, n, value))
            row.append(_cell_text(value, decimals))
        rows.append(row)
    return header, rows, cells


def _paper_table(which: int, decimals: int):
    if which == 3:
        return _table_grid("MTS", [2, 5, 10], list(range(1, 16)), decimals)[:2]
    if which == 5:
        return _table_grid("EDS", [2, 5], list(range(1, 11)) + [15, 20], decimals)[:2]
    # table 4 interleaves totals and expectations
    header = ["n", "TS(2,n)", "ETS(2,n)", "TS(5,n)", "ETS(5,n)"]
    rows = []
    for n in range(1, 11):
        row = [str(n)]
        for s in (2, 5):
            row.append(str(formulas.ts(s, n)))
            row.append(render_decimal(formulas.ets(s, n), decimals))
        rows.append(row)
    return header, rows


def _cmd_table(args) -> int:
    if args.paper_table is not None:
        header, rows = _paper_table(args.paper_table, args.decimals)
        print(_markdown(header, rows))
        return 0
    if not args.quantity:
        raise ValueError("table: quantity required unless --paper-tables is given")
    if not args.sigma or not args.n:
        raise ValueError("table: --sigma and --n are required")
    header, rows, cells = _table_grid(args.quantity, args.sigma, args.n, args.decimals)
    if args.format == "md":
        print(_markdown(header, rows))
    elif args.format == "csv":
        print(_csv(header, rows))
    else:
        q = args.quantity.upper()
        payload = {
            "quantity": q,
            "sigma": args.sigma,
            "n": args.n,
            "decimals": args.decimals,
            "rounding": ROUNDING_MODE,
            "provenance": "formula",
            "rows": [
                {
                    "n": n,
                    "cells": [
                        {
                            "sigma": s,
                            "value": _json_value(v),
                            **(
                                {"rendered": render_decimal(v, args.decimals)}
                                if isinstance(v, Fraction)
                                else {}
                            ),
                        }
                        for (s, nn, v) in cells
                        if nn == n
                    ],
                }
                for n in args.n
            ],
        }
        print(json.dumps(payload, indent=2))
    return 0


def _cmd_count(args) -> int:
    w = parse_word(args.word, args.sigma)
    n = len(w)
    sigma = w.alphabet.size
    if args.what == "factors" and n == 0:
        raise ValueError("count: factor counts need a non-empty word")
    if args.what == "subsequences" and 2**n > args.budget_subsets:
        raise BudgetExceededError("subset enumeration", 2**n, args.budget_subsets)
    if args.mode == "distinct":
        kernel_mod = backend.distinct_kernels(sigma, n)
    else:
        kernel_mod = backend.kernels()
    fn = {
        ("factors", "total"): kernel_mod.word_factor_total,
        ("factors", "distinct"): kernel_mod.word_factor_distinct,
        ("subsequences", "total"): kernel_mod.word_subseq_total,
        ("subsequences", "distinct"): kernel_mod.word_subseq_distinct,
    }[(args.what, args.mode)]
    print(fn(list(w.symbols), sigma))
    return 0


def _cmd_enum(args) -> int:
    count = 0
    for w in lyndon_words(args.sigma, args.length):
        if args.limit is not None and count >= args.limit:
            break
        print(w)
        count += 1
    return 0


def _cmd_witness(args) -> int:
    witness = formulas.mts_witness(args.sigma, args.n)
    predicted = formulas.mts_maximizer_count(args.sigma, args.n)
    if not args.all:
        print(witness)
        return 0
    budget = Budget(args.budget_words, args.budget_subsets)
    census = oracle.max_census(
        "subsequence-total", args.sigma, args.n, budget, witness_cap=predicted + 8
    )
    for w in census.attaining_words:
        print(w)
    print(f"predicted {predicted}, found {census.total_count}")
    return 0


def _fmt_verify_value(v) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def _cmd_verify(args) -> int:
    budget = Budget(args.budget_words, args.budget_subsets)
    cells = oracle.suite_cells(args.quantity, args.sigma, args.n_max)
    if not cells:
        raise ValueError("verify: no cells selected")
    results = oracle.run_cells(cells, budget)
    notes = []
    if any(r.quantity == "MTF" for r in results):
        notes.append(MTF_NOTE)
    if args.quantity.upper() in ("ALL", "MDF"):
        skipped = [(s, n) for q, s, n in cells if q == "MDF" and n < s]
        if not skipped and any(s > 1 for q, s, n in cells if q == "MDF"):
            notes.append(MDF_NOTE)
    matched = all(r.matched for r in results)
    if args.format == "json":
        payload = {
            "results": [
                {
                    "quantity": r.quantity,
                    "sigma": r.sigma,
                    "n": r.n,
                    "formula": _json_value(r.formula_value),
                    "oracle": _json_value(r.oracle_value),
                    "status": r.status,
                    "work_done": str(r.work_done),
                }
                for r in results
            ],
            "all_match": matched,
            "notes": notes,
        }
        print(json.dumps(payload, indent=2))
    else:
        for r in results:
            print(
                f"{r.quantity:<7} sigma={r.sigma} n={r.n:<2} "
                f"formula={_fmt_verify_value(r.formula_value)} "
                f"oracle={_fmt_verify_value(r.oracle_value)} {r.status}"
            )
        for note in notes:
            print(note)
        print(f"summary: {sum(r.matched for r in results)}/{len(results)} match")
    return 0 if matched else 1


# -- parser -------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lynseq",
        description="Exact Lyndon factor/subsequence counting: closed forms, "
        "witnesses, enumeration, and brute-force verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    quantity_names = sorted(formulas.QUANTITIES) + [q.lower() for q in sorted(formulas.QUANTITIES)]

    f = sub.add_parser("formula", help="evaluate one closed-form quantity")
    f.add_argument("quantity", metavar="QUANTITY", choices=quantity_names)
    f.add_argument("--sigma", type=int, required=True)
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--decimals", type=int, default=2)
    f.add_argument("--format", choices=("text", "json"), default="text")
    f.set_defaults(handler=_cmd_formula)

    t = sub.add_parser("table", help="tabulate a quantity over a (sigma, n) grid")
    t.add_argument("quantity", metavar="QUANTITY", nargs="?", choices=quantity_names)
    t.add_argument("--sigma", type=_parse_sigma_list, help="comma-separated list, e.g. 2,5,10")
    t.add_argument("--n", type=_parse_n_spec, help="range/list, e.g. 1..15 or 1..10,15,20")
    t.add_argument("--decimals", type=int, default=2)
    t.add_argument("--format", choices=("md", "csv", "json"), default="md")
    t.add_argument(
        "--paper-tables",
        dest="paper_table",
        type=int,
        choices=(3, 4, 5),
        help="emit the published reference layout for table 3, 4 or 5",
    )
    t.set_defaults(handler=_cmd_table)

    c = sub.add_parser("count", help="exact per-string Lyndon counts")
    c.add_argument("--word", required=True, help="letters ('aabb') or integers ('1,1,2,2')")
    c.add_argument("--sigma", type=int, default=None, help="alphabet size (default: inferred)")
    c.add_argument("--what", choices=("factors", "subsequences"), required=True)
    c.add_argument("--mode", choices=("total", "distinct"), required=True)
    c.add_argument("--budget-subsets", type=int, default=DEFAULT_MAX_SUBSETS)
    c.set_defaults(handler=_cmd_count)

    e = sub.add_parser("enum", help="stream Lyndon words in lexicographic order")
    e.add_argument("--sigma", type=int, required=True)
    e.add_argument("--len", dest="length", type=int, required=True)
    e.add_argument("--limit", type=int, default=None)
    e.set_defaults(handler=_cmd_enum)

    w = sub.add_parser("witness", help="canonical maximum-total-subsequences witness")
    w.add_argument("--sigma", type=int, required=True)
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--all", action="store_true", help="exhaustively census all maximizers")
    w.add_argument("--budget-words", type=int, default=DEFAULT_MAX_WORDS)
    w.add_argument("--budget-subsets", type=int, default=DEFAULT_MAX_SUBSETS)
    w.set_defaults(handler=_cmd_witness)

    v = sub.add_parser("verify", help="compare closed forms against exhaustive oracles")
    v.add_argument(
        "quantity",
        metavar="QUANTITY|all",
        help="one of " + ", ".join(sorted(oracle.VERIFIABLE_QUANTITIES)) + ", or 'all'",
    )
    v.add_argument("--sigma", type=int, default=None)
    v.add_argument("--n-max", dest="n_max", type=int, default=None)
    v.add_argument("--budget-words", type=int, default=DEFAULT_MAX_WORDS)
    v.add_argument("--budget-subsets", type=int, default=DEFAULT_MAX_SUBSETS)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except WordParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
