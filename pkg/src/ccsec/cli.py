"""Command-line interface: ``ccsec {table,secant,hilbert,algorithm,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import golden
from .algebra import Poly
from .conjecture import InvariantTable, dyck_table, q_poly, run_algorithm
from .hilbert import genus_from_series, hilbert_polynomial, secant_hilbert_series
from .secant import euler_char_secant, secant_basics, secant_invariants
from .verify import run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
INT64_MAX = 2**63 - 1


class UsageError(Exception):
    pass


def thread_count(env: Optional[dict] = None) -> int:
    """Parallelism cap from CCSEC_THREADS; 0 or unset means one per CPU."""
    raw = (env if env is not None else os.environ).get("CCSEC_THREADS", "0").strip() or "0"
    try:
        value = int(raw)
    except ValueError as exc:
        raise UsageError(f"CCSEC_THREADS must be a nonnegative integer, got {raw!r}") from exc
    if value < 0:
        raise UsageError("CCSEC_THREADS must be a nonnegative integer")
    return value or (os.cpu_count() or 1)


def stable(obj: Any) -> Any:
    """Make a value JSON-stable: big ints and rationals become strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj if -INT64_MAX - 1 <= obj <= INT64_MAX else str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): stable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [stable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dump_json(obj: Any) -> str:
    return json.dumps(stable(obj), sort_keys=True, indent=2) + "\n"


def render_grid(header: Sequence[str], rows: Sequence[Sequence[str]], fmt: str, note: str = "") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    widths = [max(len(h), *(len(r[i]) if i < len(r) else 0 for r in rows)) for i, h in enumerate(header)]

    def line(cells: Sequence[str]) -> str:
        padded = [(cells[i] if i < len(cells) else "").rjust(w) for i, w in enumerate(widths)]
        return "| " + " | ".join(padded) + " |"

    out = [line(header), "|" + "|".join("-" * (w + 2) for w in widths) + "|"]
    out += [line(r) for r in rows]
    if note:
        out += ["", note]
    return "\n".join(out) + "\n"


def render_pairs(pairs: dict, fmt: str) -> str:
    if fmt == "json":
        return dump_json(pairs)
    rows = [[k, json.dumps(stable(v)) if isinstance(v, (list, tuple, dict)) else str(stable(v))] for k, v in sorted(pairs.items())]
    return render_grid(["field", "value"], rows, fmt)


# ---------------------------------------------------------------------------
# Subcommands


CONJECTURAL_NOTE = "* conjectural: produced by column interpolation, not computed directly"


def cmd_table(kind: str, bound: int, fmt: str) -> str:
    if bound < 0:
        raise UsageError("bound must be nonnegative")
    if kind in ("csm", "degrees"):
        table = run_algorithm(bound)
        rows = table.c if kind == "csm" else table.d
        if fmt == "json":
            return dump_json(
                {
                    "kind": kind,
                    "rows": [
                        {"r": r, "values": [str(v) for v in row], "conjectural": InvariantTable.is_conjectural(r)}
                        for r, row in enumerate(rows)
                    ],
                }
            )
        prefix = "c" if kind == "csm" else "d"
        header = ["r"] + [f"{prefix}_{i}" for i in range(2 * bound + 1)]
        body = []
        any_conj = False
        for r, row in enumerate(rows):
            mark = "*" if InvariantTable.is_conjectural(r) else ""
            any_conj = any_conj or bool(mark)
            body.append([str(r)] + [f"{v}{mark}" for v in row])
        return render_grid(header, body, fmt, CONJECTURAL_NOTE if any_conj and fmt == "md" else "")
    if kind == "qpoly":
        entries = []
        for i in range(bound + 1):
            entries.append({"i": i, "q": q_poly(i), "x_power": (i + 1) // 2, "one_minus_x_power": i + 1})
        if fmt == "json":
            return dump_json(
                {
                    "kind": kind,
                    "rows": [dict(e, q=e["q"].to_json()) for e in entries],
                }
            )
        header = ["i", "q_i(x)", "x power", "(1-x) power"]
        body = [[str(e["i"]), e["q"].format("x"), str(e["x_power"]), str(e["one_minus_x_power"])] for e in entries]
        return render_grid(header, body, fmt)
    if kind == "dyck":
        dt = dyck_table(bound)
        if fmt == "json":
            return dump_json({"kind": kind, **dt.to_json()})
        header = ["n"] + [f"T(n,{k})" for k in range(bound // 2 + 1)]
        body = [[str(n)] + [str(v) for v in row] for n, row in enumerate(dt.rows)]
        return render_grid(header, body, fmt)
    raise UsageError(f"unknown table kind {kind!r}")


def _degree_row(r: int) -> tuple[tuple[int, ...], bool]:
    direct = golden.projective_degrees()
    if r <= golden.DIRECT_RMAX and r in direct:
        return direct[r], False
    return tuple(run_algorithm(r).d[r]), InvariantTable.is_conjectural(r)


def cmd_secant(fmt: str, r: Optional[int] = None, n: Optional[int] = None, k: Optional[int] = None) -> str:
    if r is not None:
        if n is not None or k is not None:
            raise UsageError("use either --r or --n/--k")
        if r < 1:
            raise UsageError("--r must be at least 1")
        d_row, conj = _degree_row(r)
        return render_pairs(secant_invariants(2 * r, r, d_row, conj).to_json(), fmt)
    if n is None or k is None:
        raise UsageError("secant needs --r, or both --n and --k")
    dim, degree = secant_basics(n, k)
    cert = euler_char_secant(n, k)
    return render_pairs(
        {"n": n, "k": k, "dim": dim, "degree": degree, "euler_char": cert.chi, "fixed_points": list(cert.fixed_points)},
        fmt,
    )


def cmd_hilbert(n: int, k: int, fmt: str) -> str:
    hs = secant_hilbert_series(n, k)
    out = {
        "n": n,
        "k": k,
        "numerator": [int(c) for c in hs.numerator.coeffs],
        "denominator_power": hs.denominator_power,
        "degree": hs.degree,
        "hilbert_polynomial": hilbert_polynomial(hs).to_json(),
        "section_curve_genus": genus_from_series(hs),
    }
    return render_pairs(out, fmt)


def _poly_rows(polys: list[Poly]) -> list[list[str]]:
    return [[str(i), p.format("t")] for i, p in enumerate(polys)]


def cmd_algorithm(rmax: int, emit_polys: bool, fmt: str) -> str:
    if rmax < 0:
        raise UsageError("--rmax must be nonnegative")
    table = run_algorithm(rmax)
    if fmt == "json":
        return dump_json(table.to_json(emit_polys))
    parts = [cmd_table("csm", rmax, fmt), cmd_table("degrees", rmax, fmt)]
    if emit_polys:
        parts.append(render_grid(["i", "polc_i(t)"], _poly_rows(table.polc), fmt))
        parts.append(render_grid(["i", "pold_i(t)"], _poly_rows(table.pold), fmt))
    return "\n".join(parts)


def cmd_verify(rmax: int, nmax: int, fmt: str, threads: int) -> tuple[str, int]:
    if rmax < 0 or nmax < 0:
        raise UsageError("--rmax and --nmax must be nonnegative")
    results = run_suites(rmax, nmax, threads)
    ok = all(res.passed for res in results)
    if fmt == "json":
        text = dump_json(
            {
                "passed": ok,
                "suites": [{"name": res.name, "passed": res.passed, "failures": res.failures} for res in results],
            }
        )
    else:
        rows = [[res.name, "PASS" if res.passed else "FAIL", str(len(res.failures))] for res in results]
        text = render_grid(["suite", "status", "failures"], rows, fmt)
        for res in results:
            for msg in res.failures:
                text += f"{res.name}: {msg}\n"
    return text, EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccsec",
        description="Exact invariants of secant varieties of rational normal curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser, default: str) -> None:
        p.add_argument("--format", choices=("md", "csv", "json"), default=default)

    p = sub.add_parser("table", help="print a reference table")
    p.add_argument("kind", choices=("csm", "degrees", "qpoly", "dyck"))
    p.add_argument("--rmax", type=int, help="last row r for csm and degrees (default 7)")
    p.add_argument("--nmax", type=int, help="last row for qpoly and dyck (default 6)")
    add_format(p, "md")

    p = sub.add_parser("secant", help="invariants of Sec_r C in P^2r, or of Sec_k C in P^n")
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    add_format(p, "json")

    p = sub.add_parser("hilbert", help="Hilbert series of Sec_k C in P^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    add_format(p, "json")

    p = sub.add_parser("algorithm", help="run the column-interpolation algorithm")
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--emit-polys", action="store_true")
    add_format(p, "json")

    p = sub.add_parser("verify", help="run every invariant suite")
    p.add_argument("--rmax", type=int, default=12)
    p.add_argument("--nmax", type=int, default=20)
    add_format(p, "md")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    code = EXIT_OK
    try:
        if args.command == "table":
            if args.kind in ("csm", "degrees"):
                if args.nmax is not None:
                    raise UsageError(f"table {args.kind} takes --rmax")
                bound = 7 if args.rmax is None else args.rmax
            else:
                if args.rmax is not None:
                    raise UsageError(f"table {args.kind} takes --nmax")
                bound = 6 if args.nmax is None else args.nmax
            text = cmd_table(args.kind, bound, args.format)
        elif args.command == "secant":
            text = cmd_secant(args.format, r=args.r, n=args.n, k=args.k)
        elif args.command == "hilbert":
            text = cmd_hilbert(args.n, args.k, args.format)
        elif args.command == "algorithm":
            text = cmd_algorithm(args.rmax, args.emit_polys, args.format)
        else:
            text, code = cmd_verify(args.rmax, args.nmax, args.format, thread_count())
    except (UsageError, ValueError) as exc:
        print(f"ccsec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
