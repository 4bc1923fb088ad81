"""Command-line surface: word generation, density reports, tables, claims.

Output is deterministic byte-for-byte for identical invocations.  Exit codes:
0 = ran (claim statuses are data, not errors), 1 = usage error, 2 = internal
failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .claims import ALL_CLAIM_IDS, Budgets, run_all_claims
from .derived import density_table, fib_word_ab, q_word, y_word
from .goldenexact import beatty_phi, beatty_phi2, fraction_decimal
from .mechanical import density_report, mechanical_prefix
from .morphism import fibonacci_morphism, fixed_point_prefix

FORMATS = ("text", "csv", "json")
GEN_KINDS = ("morphic", "mechanical", "y", "q", "fibab")
SCHEMA_VERSION = 1


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the CLI contract wants 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _json_text(document: dict) -> str:
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _generate_word(kind: str, index: int) -> str:
    if kind == "morphic":
        return fixed_point_prefix(fibonacci_morphism(), "0", index).text
    if kind == "mechanical":
        return mechanical_prefix(index).text
    if kind == "y":
        return y_word(index).text
    if kind == "q":
        return q_word(index).text
    if kind == "fibab":
        return fib_word_ab(index).text
    raise ValueError(f"unknown word kind {kind!r}")


def _cmd_gen(args: argparse.Namespace) -> str:
    word = _generate_word(args.kind, args.index)
    if args.format == "text":
        return word + "\n"
    if args.format == "csv":
        return _csv_text(["kind", "index", "word"], [[args.kind, str(args.index), word]])
    return _json_text(
        {
            "schema_version": SCHEMA_VERSION,
            "command": "gen",
            "kind": args.kind,
            "index": args.index,
            "word": word,
        }
    )


def _cmd_density(args: argparse.Namespace) -> str:
    report = density_report(args.n)
    places = args.places
    decimals = report.decimals(places)
    sign = report.deviation1.sign()
    if args.format == "text":
        lines = [
            f"n: {report.n}",
            f"count0: {report.count0}",
            f"count1: {report.count1}",
            f"density0: {fraction_decimal(report.density0, places)} (= {report.density0})",
            f"density1: {decimals['density1']} (= {report.density1})",
            f"target1: {decimals['target1']} (= {report.target1})",
            f"deviation1: {decimals['deviation1']} (sign {sign:+d}, = {report.deviation1})",
        ]
        return "\n".join(lines) + "\n"
    row = {
        "n": str(report.n),
        "count0": str(report.count0),
        "count1": str(report.count1),
        "density0": fraction_decimal(report.density0, places),
        "density1": decimals["density1"],
        "target1": decimals["target1"],
        "deviation1": decimals["deviation1"],
        "deviation1_sign": str(sign),
    }
    if args.format == "csv":
        return _csv_text(list(row), [list(row.values())])
    return _json_text(
        {
            "schema_version": SCHEMA_VERSION,
            "command": "density",
            "n": report.n,
            "count0": report.count0,
            "count1": report.count1,
            "density0": row["density0"],
            "density0_exact": str(report.density0),
            "density1": row["density1"],
            "density1_exact": str(report.density1),
            "target1": row["target1"],
            "target1_exact": str(report.target1),
            "deviation1": row["deviation1"],
            "deviation1_exact": str(report.deviation1),
            "deviation1_sign": sign,
        }
    )


def _cmd_table(args: argparse.Namespace) -> str:
    if args.rows < 1:
        raise ValueError("table needs at least one row")
    header = ["m", "dens_a_q", "dens_b_q", "dens_a_y", "dens_b_y"]
    rows = []
    for row in density_table(3 + args.rows - 1):
        rows.append([str(row.m), *row.rendered(6)])
    if args.format == "csv":
        return _csv_text(header, rows)
    if args.format == "text":
        lines = ["  ".join(header)]
        lines += ["  ".join(cells) for cells in rows]
        return "\n".join(lines) + "\n"
    return _json_text(
        {
            "schema_version": SCHEMA_VERSION,
            "command": "table",
            "rows": [dict(zip(header, cells)) for cells in rows],
        }
    )


def _cmd_beatty(args: argparse.Namespace) -> str:
    if args.n < 1:
        raise ValueError("beatty needs n >= 1")
    header = ["n", "f1", "f2"]
    rows = [[str(n), str(beatty_phi(n)), str(beatty_phi2(n))] for n in range(1, args.n + 1)]
    if args.format == "csv":
        return _csv_text(header, rows)
    if args.format == "text":
        return "\n".join(" ".join(cells) for cells in rows) + "\n"
    return _json_text(
        {
            "schema_version": SCHEMA_VERSION,
            "command": "beatty",
            "rows": [{"n": int(a), "f1": int(b), "f2": int(c)} for a, b, c in rows],
        }
    )


def _cmd_claims(args: argparse.Namespace) -> str:
    budgets = Budgets(
        sweep_n=args.sweep_n,
        scan_n=args.scan_n,
        ball_cases=args.ball_cases,
    )
    wanted = args.ids
    if wanted:
        unknown = [i for i in wanted if i not in ALL_CLAIM_IDS]
        if unknown:
            raise ValueError(f"unknown claim id(s): {', '.join(unknown)}")
    results = run_all_claims(budgets)
    if wanted:
        results = [r for r in results if r.id in set(wanted)]
    records = [r.record() for r in results]
    if args.format == "text":
        blocks = []
        for r in records:
            blocks.append(
                f"{r['id']}: {r['status']}\n"
                f"  location: {r['location']}\n"
                f"  witness: {r['witness']}"
            )
        return "\n\n".join(blocks) + "\n"
    if args.format == "csv":
        header = ["id", "location", "status", "witness", "payload"]
        rows = [
            [
                r["id"],
                r["location"],
                r["status"],
                r["witness"],
                json.dumps(r["payload"], sort_keys=True, separators=(",", ":")),
            ]
            for r in records
        ]
        return _csv_text(header, rows)
    return _json_text(
        {
            "schema_version": SCHEMA_VERSION,
            "command": "claims",
            "claims": records,
        }
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="fibword", description=__doc__)
    parser.add_argument("--version", action="version", version=f"fibword {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--out", default=None, help="write output to this path instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_gen = sub.add_parser("gen", parents=[common], help="generate a word")
    p_gen.add_argument("kind", choices=GEN_KINDS)
    p_gen.add_argument("index", type=int, help="prefix length or family index")

    p_density = sub.add_parser("density", parents=[common], help="density report for a prefix")
    p_density.add_argument("n", type=int)
    p_density.add_argument("--places", type=int, default=6)

    p_table = sub.add_parser("table", parents=[common], help="density table of the word families")
    p_table.add_argument("--rows", type=int, required=True, help="row count, starting at m = 3")

    p_beatty = sub.add_parser("beatty", parents=[common], help="Beatty floor series for phi, phi^2")
    p_beatty.add_argument("n", type=int)

    p_claims = sub.add_parser("claims", parents=[common], help="run the claims verifier")
    group = p_claims.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", help="run every claim (default)")
    group.add_argument(
        "--id",
        dest="ids",
        action="append",
        default=None,
        metavar="CLAIM_ID",
        help="run only this claim (repeatable)",
    )
    p_claims.add_argument("--sweep-n", type=int, default=100_000)
    p_claims.add_argument("--scan-n", type=int, default=10_000)
    p_claims.add_argument("--ball-cases", type=int, default=10_000)
    return parser


_DISPATCH = {
    "gen": _cmd_gen,
    "density": _cmd_density,
    "table": _cmd_table,
    "beatty": _cmd_beatty,
    "claims": _cmd_claims,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        output = _DISPATCH[args.command](args)
    except ValueError as exc:
        print(f"fibword: error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # internal failure contract
        print(f"fibword: internal error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(output)
    else:
        sys.stdout.write(output)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
