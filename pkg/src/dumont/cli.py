"""Command-line interface.

Subcommands: enumerate, avoid, map, series, verify, conjecture, diagram.
Output formats: lines (default), json, csv.  Exit code 0 when every hard
assertion passes, 1 on a verification mismatch, 3 when a budgeted run stops
early (state is kept in the checkpoint file).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional, Sequence

from . import bijections, harness
from .gfseries import (SequenceId, closed_form, d4_1423_series, solve_prst_system,
                       validity_range)
from .kinds import DumontKind, generate
from .patterns import (AvoidanceQuery, ClassicalPattern, count_avoiders,
                       count_exact_occurrences, count_occurrences,
                       generate_avoiders)
from .permcore import Permutation


def _kind(text: str) -> DumontKind:
    try:
        return DumontKind(int(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"kind must be 1, 2, 3 or 4, got {text!r}")


def _emit_rows(fmt: str, header: list[str], rows: list[list], out) -> None:
    if fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(header)
        writer.writerows(rows)
    else:
        for row in rows:
            out.write(" ".join(str(c) for c in row) + "\n")


def _cmd_enumerate(args, out) -> int:
    if args.format == "json":
        perms = [p.to_text() for p in generate(args.kind, args.size)]
        json.dump({"kind": args.kind.value, "size": args.size,
                   "count": len(perms), "elements": perms}, out)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out)
        writer.writerow(["permutation"])
        for p in generate(args.kind, args.size):
            writer.writerow([p.to_text()])
    else:
        for p in generate(args.kind, args.size):
            out.write(p.to_text() + "\n")
    return 0


def _cmd_avoid(args, out) -> int:
    pats = [s for s in args.pattern.split(",") if s]
    if not pats:
        raise SystemExit("at least one pattern is required")
    if args.exactly is not None:
        if len(pats) != 1:
            raise SystemExit("--exactly takes a single pattern")
        count = count_exact_occurrences(args.kind, args.size,
                                        ClassicalPattern.parse(pats[0]), args.exactly)
        elements = None
        if args.list:
            q = ClassicalPattern.parse(pats[0])
            elements = [p.to_text() for p in generate(args.kind, args.size)
                        if count_occurrences(p, q) == args.exactly]
    else:
        query = AvoidanceQuery(args.kind, args.size,
                               frozenset(ClassicalPattern.parse(s) for s in pats))
        if args.list:
            elements = [p.to_text() for p in generate_avoiders(query)]
            count = len(elements)
        else:
            elements = None
            count = count_avoiders(query)
    payload = {"kind": args.kind.value, "size": args.size, "patterns": pats,
               "exactly": args.exactly, "count": count}
    if elements is not None:
        payload["elements"] = elements
    if args.format == "json":
        json.dump(payload, out)
        out.write("\n")
    elif args.list:
        _emit_rows(args.format, ["permutation"], [[e] for e in elements or []], out)
    else:
        _emit_rows(args.format, ["count"], [[count]], out)
    return 0


_PERM_MAPS = {
    "foata": bijections.foata,
    "foata-inv": bijections.foata_inverse,
    "comp": bijections.d4_1342_to_composition,
    "dyck": bijections.d4_321_to_dyck,
    "reflect": bijections.reflect_1324_to_1243,
    "reflect-inv": bijections.reflect_1243_to_1324,
}


def _cmd_map(args, out) -> int:
    name = args.name
    raw = args.input
    if name == "split321":
        pair = bijections.split_single_321(Permutation.from_text(raw))
        if args.format == "json":
            json.dump({"rho1": pair.rho1.to_text(), "rho2": pair.rho2.to_text(),
                       "case": pair.parity_case}, out)
            out.write("\n")
            return 0
        result = f"{pair.rho1.to_text()} {pair.rho2.to_text()} {pair.parity_case}"
    elif name == "dyck-inv":
        result = bijections.dyck_to_d4_321(bijections.DyckPath.parse(raw)).to_text()
    elif name == "comp-inv":
        comp = bijections.Composition.parse(raw)
        result = bijections.composition_to_d4_1342(comp, comp.total).to_text()
    else:
        result = _PERM_MAPS[name](Permutation.from_text(raw)).to_text()
    if args.format == "json":
        json.dump({"name": name, "input": raw, "output": result}, out)
        out.write("\n")
    else:
        out.write(result + "\n")
    return 0


def _cmd_series(args, out) -> int:
    seq = SequenceId(args.id)
    if args.cross_check:
        order = args.order if args.order is not None else 24
        if seq is not SequenceId.A343795_D4_312:
            raise SystemExit("--cross-check applies to a343795_d4_312")
        direct = d4_1423_series(order)
        swept = solve_prst_system(order).series()
        ok = direct == swept
        if args.format == "json":
            json.dump({"id": seq.value, "order": order, "consistent": ok,
                       "values": list(direct.coeffs)}, out)
            out.write("\n")
        else:
            out.write(f"continued fraction vs block system to order {order}: "
                      f"{'consistent' if ok else 'MISMATCH'}\n")
        return 0 if ok else 1
    upto = args.upto if args.upto is not None else 10
    if seq is SequenceId.A343795_D4_312:
        series = d4_1423_series(upto)
        lo = 0
        values = [(n, series.coefficient(n)) for n in range(upto + 1)]
    else:
        lo, hi = validity_range(seq)
        top = upto if hi is None else min(upto, hi)
        values = [(n, closed_form(seq, n)) for n in range(lo, top + 1)]
    if args.format == "json":
        json.dump({"id": seq.value, "start": values[0][0] if values else lo,
                   "values": [v for _, v in values]}, out)
        out.write("\n")
    else:
        _emit_rows(args.format, ["n", "value"], [[n, v] for n, v in values], out)
    return 0


def _cmd_verify(args, out) -> int:
    if args.sanity_s3 is not None:
        report = harness.sanity_s3(args.sanity_s3)
    else:
        report = harness.run_suite(args.suite, args.max_n)
    if args.format == "json":
        json.dump(report.to_json(), out, indent=2, sort_keys=True)
        out.write("\n")
    elif args.format == "csv":
        _emit_rows("csv", ["theorem", "n", "enumerated", "formula", "match"],
                   [[r.theorem, r.n, r.enumerated, r.formula, r.match]
                    for r in report.rows], out)
    else:
        out.write(report.to_text(include_timing=args.timings))
    return 0 if report.overall else 1


def _cmd_conjecture(args, out) -> int:
    try:
        if args.which == 1:
            rows = harness.conjecture1_counts(args.n, budget=args.budget,
                                              checkpoint_path=args.checkpoint)
            payload = {
                "conjecture": 1,
                "rows": [{"n": r.n, "count_2143": r.count_2143,
                          "count_3421": r.count_3421, "reference": r.reference,
                          "match": r.match} for r in rows],
                "equinumerous": all(r.count_2143 == r.count_3421 for r in rows),
            }
            if args.format == "json":
                json.dump(payload, out, indent=2, sort_keys=True)
                out.write("\n")
            else:
                _emit_rows(args.format, ["n", "avoid_2143", "avoid_3421", "reference"],
                           [[r.n, r.count_2143, r.count_3421,
                             r.reference if r.reference is not None else "-"]
                            for r in rows], out)
                out.write("verdict: " +
                          ("equinumerous over the computed range\n"
                           if payload["equinumerous"] else "SEQUENCES DIFFER\n"))
            return 0
        table = harness.conjecture2_distribution(args.n, budget=args.budget,
                                                 checkpoint_path=args.checkpoint)
        verdict = table.verdict()
        if args.format == "json":
            json.dump({"conjecture": 2, "n": table.n, "a_row": list(table.a_row),
                       "b_row": list(table.b_row),
                       "pointwise": list(table.pointwise_relation()),
                       "cumulative": list(table.cumulative_relation()),
                       "verdict": verdict}, out, indent=2, sort_keys=True)
            out.write("\n")
        else:
            _emit_rows(args.format, ["k", "a", "b", "rel"],
                       [[k, a, b, rel] for k, (a, b, rel) in
                        enumerate(zip(table.a_row, table.b_row,
                                      table.pointwise_relation()))], out)
            out.write(f"verdict: {json.dumps(verdict, sort_keys=True)}\n")
        return 0
    except harness.BudgetExceeded:
        out.write("budget exhausted; rerun with the same --checkpoint to resume\n")
        return 3


def _cmd_diagram(args, out) -> int:
    p = Permutation.from_text(args.perm)
    grid = harness.render_diagram(p)
    if grid:
        out.write(grid + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dumont",
        description="Construct, count, and verify pattern-restricted Dumont permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(sp):
        sp.add_argument("--format", choices=("lines", "json", "csv"), default="lines")

    sp = sub.add_parser("enumerate", help="list all Dumont permutations of a kind")
    sp.add_argument("--kind", type=_kind, required=True)
    sp.add_argument("--size", type=int, required=True)
    add_format(sp)
    sp.set_defaults(fn=_cmd_enumerate)

    sp = sub.add_parser("avoid", help="count or list pattern-restricted members")
    sp.add_argument("--kind", type=_kind, required=True)
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--pattern", required=True,
                    help="comma-separated classical patterns, e.g. 1342,1423")
    sp.add_argument("--exactly", type=int, default=None,
                    help="count members with exactly this many occurrences")
    sp.add_argument("--list", action="store_true", help="also list the members")
    add_format(sp)
    sp.set_defaults(fn=_cmd_avoid)

    sp = sub.add_parser("map", help="apply one of the constructive bijections")
    sp.add_argument("--name", required=True,
                    choices=("foata", "foata-inv", "dyck", "dyck-inv", "comp",
                             "comp-inv", "reflect", "reflect-inv", "split321"))
    sp.add_argument("--input", required=True,
                    help="permutation, E/N path, or +-joined composition")
    add_format(sp)
    sp.set_defaults(fn=_cmd_map)

    sp = sub.add_parser("series", help="print sequence values or cross-check the series")
    sp.add_argument("--id", required=True, choices=[s.value for s in SequenceId])
    sp.add_argument("--upto", type=int, default=None)
    sp.add_argument("--order", type=int, default=None)
    sp.add_argument("--cross-check", action="store_true",
                    help="compare the continued fraction against the block system")
    add_format(sp)
    sp.set_defaults(fn=_cmd_series)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", choices=harness.SUITES, default="all")
    sp.add_argument("--max-n", type=int, default=5)
    sp.add_argument("--sanity-s3", type=int, default=None, metavar="N",
                    help="run the Catalan sanity check on S_n instead")
    sp.add_argument("--timings", action="store_true",
                    help="include elapsed times (non-deterministic output)")
    add_format(sp)
    sp.set_defaults(fn=_cmd_verify)

    sp = sub.add_parser("conjecture", help="run a conjecture experiment")
    sp.add_argument("--which", type=int, choices=(1, 2), required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--budget", type=float, default=None, metavar="SECONDS")
    sp.add_argument("--checkpoint", default=None, metavar="PATH")
    add_format(sp)
    sp.set_defaults(fn=_cmd_conjecture)

    sp = sub.add_parser("diagram", help="ASCII diagram of a permutation")
    sp.add_argument("perm", help="permutation in text form")
    sp.set_defaults(fn=_cmd_diagram)

    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    stream = out if out is not None else sys.stdout
    try:
        return args.fn(args, stream)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
