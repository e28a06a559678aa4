"""Command-line surface: verification suites and table emission.

Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
errors.  Output is deterministic byte for byte for a fixed invocation; rows
follow the printed table order and JSON keys are sorted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .aq import SaturationError, enumerate_parabolics, hodge_polynomial
from .cycles import automorphic_candidates, dimension_table, no_component_column
from .exact import rational_str
from .involutions import almost_double_parity, catalog, holomorphy_class, vogan_data
from .liealg import build_context
from .orientation import orientation_preserving, orientation_report
from .verify import SUITES, run_suite

FORMATS = ("json", "csv", "text")


def _serialize_matrix(mat) -> list[list[list[str]]]:
    return [
        [
            [rational_str(mat.get(i, j).re), rational_str(mat.get(i, j).im)]
            for j in range(1, mat.n + 1)
        ]
        for i in range(1, mat.n + 1)
    ]


def _involution_rows(m: int) -> list[dict]:
    rows = []
    for inv in catalog(m):
        rows.append(
            {
                "name": inv.name,
                "kind": inv.kind,
                "param": inv.param,
                "variant": inv.variant,
                "holomorphy": holomorphy_class(inv),
                "conjugator": _serialize_matrix(inv.conjugator),
            }
        )
    return rows


def _vogan_rows(m: int) -> list[dict]:
    rows = []
    for inv in catalog(m):
        vd = vogan_data(inv)
        marked, parity = almost_double_parity(vd)
        twin = vogan_data(inv.composed_with_theta())
        rows.append(
            {
                "name": inv.name,
                "variant": inv.variant,
                "holomorphy": holomorphy_class(inv),
                "action": {v: vd.action[v] for v in vd.vertices},
                "circled": sorted(vd.circled()),
                "colors": {v: vd.colors[v] for v in vd.vertices},
                "marks": {v: vd.marks[v] for v in vd.vertices},
                "marked_set": sorted(marked),
                "parity_even": parity == 0,
                "theta_twin_circled": sorted(twin.circled()),
                "center_action": vd.center_action,
            }
        )
    return rows


def _dimension_rows(m: int) -> list[dict]:
    return [
        {
            "involution": rec.name,
            "d_sigma": rec.d_sigma,
            "d_sigma_theta": rec.d_sigma_theta,
            "holomorphy": rec.holomorphy,
        }
        for rec in dimension_table(m)
    ]


def _class_rows(m: int, bound: int | None, with_column: bool) -> list[dict]:
    rows = []
    for entry in no_component_column(m):
        q = entry.parabolic
        row = {
            "block": entry.row.block,
            "label": entry.row.label,
            "defining_vector": list(q.defining_vector),
            "u_p_minus": sorted(list(r.coords) for r in q.u_p_minus),
            "u_p_plus": sorted(list(r.coords) for r in q.u_p_plus),
            "R_plus": q.r_plus,
            "R_minus": q.r_minus,
            "R_total": q.r_total,
            "S_dim": q.s_dim,
            "levi": {"kind": entry.row.levi_kind, "dim": entry.row.levi_dim},
            "polynomial": entry.polynomial.serialize(),
        }
        if with_column:
            row["no_component"] = entry.no_component
        rows.append(row)
    if bound is not None:
        enumerate_parabolics(m, bound)  # saturation re-check at the requested bound
    return rows


def _orientation_rows(m: int) -> list[dict]:
    preserving = {inv.name: orientation_preserving(inv) for inv in catalog(m)}
    return [
        {
            "involution": row.involution,
            "component": row.component,
            "determinant": row.determinant,
            "orientation_preserving": preserving[row.involution],
        }
        for row in orientation_report(m)
    ]


def _automorphic_rows(m: int) -> list[dict]:
    rows = []
    for inv, q in automorphic_candidates(m):
        rows.append(
            {
                "involution": inv.name,
                "witness_u_p_minus": sorted(list(r.coords) for r in q.u_p_minus),
                "witness_u_p_plus": sorted(list(r.coords) for r in q.u_p_plus),
                "witness_polynomial": hodge_polynomial(q).serialize(),
            }
        )
    return rows


def _emit(payload: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, sort_keys=True, indent=2))
        out.write("\n")
    elif fmt == "csv":
        rows = payload["rows"]
        buf = io.StringIO()
        if rows:
            fields = sorted({k for row in rows for k in row})
            writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow({k: _csv_cell(row.get(k)) for k in fields})
        out.write(buf.getvalue())
    else:
        _emit_text(payload, out)


def _csv_cell(value):
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return value


def _emit_text(payload: dict, out) -> None:
    rows = payload["rows"]
    if not rows:
        out.write("(no rows)\n")
        return
    fields = [k for k in rows[0] if k != "conjugator"]
    table = [[_text_cell(row.get(k)) for k in fields] for row in rows]
    widths = [
        max(len(fields[i]), max(len(r[i]) for r in table)) for i in range(len(fields))
    ]
    header = "  ".join(f.ljust(w) for f, w in zip(fields, widths))
    out.write(header + "\n")
    out.write("-" * len(header) + "\n")
    for r in table:
        out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)) + "\n")


def _text_cell(value) -> str:
    if isinstance(value, dict):
        return ",".join(f"{k}:{_text_cell(v)}" for k, v in sorted(value.items()))
    if isinstance(value, list):
        if value and isinstance(value[0], list) and value[0] and isinstance(value[0][0], int):
            if len(value[0]) == 3:  # polynomial triples
                return _poly_text(value)
            return ";".join("(" + ",".join(map(str, v)) + ")" for v in value)
        return ";".join(_text_cell(v) for v in value)
    return str(value)


def _poly_text(triples: list[list[int]]) -> str:
    parts = []
    for a, b, c in triples:
        term = ("" if c == 1 else f"{c}") + (f"x^{a}" if a else "") + (f"t^{b}" if b else "")
        parts.append(term if term else str(c))
    return "+".join(parts) if parts else "0"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="so2m",
        description="Exact tables for special cycles and cohomology of SO0(2,m)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--m", type=int, required=True, help="rank parameter m >= 2")
        p.add_argument(
            "--format",
            choices=FORMATS,
            default=os.environ.get("SO2M_FORMAT", "json"),
            help="output format (default from SO2M_FORMAT, else json)",
        )
        p.add_argument("--output", help="write to this path instead of stdout")

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--m", type=int, required=True)
    p_verify.add_argument(
        "--suite",
        default="all",
        choices=sorted(SUITES) + ["all"],
        help="which suite to run",
    )
    p_verify.add_argument("--all", action="store_true", help="alias for --suite all")

    p_tables = sub.add_parser("tables", help="emit a table by number")
    common(p_tables)
    p_tables.add_argument("--table", type=int, required=True, help="1-5")
    p_tables.add_argument("--bound", type=int, help="enumeration bound override")

    for name, helptext in (
        ("involutions", "serialized involution catalog"),
        ("orientation", "component determinants and verdicts"),
        ("aq", "theta-stable parabolic classes with Hodge polynomials"),
        ("cycles", "no-component table"),
        ("automorphic", "automorphic witnesses"),
    ):
        p = sub.add_parser(name, help=helptext)
        common(p)
        if name == "aq":
            p.add_argument("--bound", type=int, help="enumeration bound override")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.m < 2:
        parser.exit(2, "so2m: m must be at least 2\n")
    ctx = build_context(args.m)

    if args.command == "verify":
        suite = "all" if getattr(args, "all", False) else args.suite
        results = run_suite(suite, args.m)
        failures = 0
        for res in results:
            status = "PASS" if res.ok else "FAIL"
            detail = f"  ({res.detail})" if res.detail and not res.ok else ""
            print(f"[{status}] {res.name}{detail}")
        failures = sum(1 for r in results if not r.ok)
        print(f"{len(results) - failures}/{len(results)} checks passed (m={args.m}, suite={suite})")
        return 0 if failures == 0 else 1

    if args.command == "tables":
        table = args.table
        if table in (1, 2):
            expected_family = "B" if table == 1 else "D"
            if ctx.family != expected_family:
                parser.exit(
                    2,
                    f"so2m: table {table} is the family-{expected_family} table; "
                    f"m={args.m} has family {ctx.family}\n",
                )
            rows = _vogan_rows(args.m)
        elif table == 3:
            rows = _dimension_rows(args.m)
        elif table in (4, 5):
            expected_family = "B" if table == 4 else "D"
            if ctx.family != expected_family:
                parser.exit(
                    2,
                    f"so2m: table {table} is the family-{expected_family} table; "
                    f"m={args.m} has family {ctx.family}\n",
                )
            try:
                rows = _class_rows(args.m, args.bound, with_column=True)
            except SaturationError as exc:
                print(f"so2m: {exc}", file=sys.stderr)
                return 1
            except ValueError as exc:
                parser.exit(2, f"so2m: {exc}\n")
        else:
            parser.exit(2, f"so2m: unknown table {table} (valid: 1-5)\n")
    elif args.command == "involutions":
        rows = _involution_rows(args.m)
    elif args.command == "orientation":
        rows = _orientation_rows(args.m)
    elif args.command == "aq":
        try:
            rows = _class_rows(args.m, args.bound, with_column=False)
        except SaturationError as exc:
            print(f"so2m: {exc}", file=sys.stderr)
            return 1
        except ValueError as exc:
            parser.exit(2, f"so2m: {exc}\n")
    elif args.command == "cycles":
        rows = _class_rows(args.m, None, with_column=True)
    elif args.command == "automorphic":
        rows = _automorphic_rows(args.m)
    else:  # pragma: no cover
        parser.exit(2, f"so2m: unknown command {args.command}\n")

    payload = {"m": args.m, "family": ctx.family, "rows": rows}
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            _emit(payload, args.format, handle)
    else:
        _emit(payload, args.format, sys.stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
