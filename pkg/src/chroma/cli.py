"""Command-line interface.

Exit codes: 0 ok, 2 usage or precondition failure, 3 the matrix computation
disagrees with the closed form or the brute-force check, 4 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional

from .oracle import agreement_row, point_budget
from .render import RenderSpec, parse_palette, render_svg
from .restriction import (
    UNBOUNDED,
    closed_form_N,
    divides,
    min_dimension,
    render_equations,
    restriction_number,
    restriction_table,
)
from .rotrep import CrystallographicRestriction, rep, rep_2d, totient

EXIT_OK, EXIT_USAGE, EXIT_REGRESSION, EXIT_IO = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nmax_text(n) -> str:
    return "unbounded" if n is UNBOUNDED else str(n)


def _nmax_json(n):
    return "unbounded" if n is UNBOUNDED else n


def cmd_rep(args, out) -> int:
    reps = [("rep", rep(args.k))]
    if args.k in (1, 2, 3, 4, 6):
        reps.append(("rep_2d", rep_2d(args.k)))
    if args.json:
        out.write(_dump({name: r.to_json() for name, r in reps}) + "\n")
        return EXIT_OK
    for name, r in reps:
        out.write(f"{name}(k={r.k}) dim={r.dim} kind={r.kind}\n")
        out.write(r.matrix.format() + "\n")
    return EXIT_OK


def cmd_restrict(args, out) -> int:
    if args.dim2:
        try:
            r = rep_2d(args.k)
        except CrystallographicRestriction as exc:
            raise UsageError(str(exc))
    else:
        r = rep(args.k)
    res = restriction_number(r)
    expected = closed_form_N(args.k)
    ok = res.n_max == expected
    if args.json:
        doc = res.to_json()
        doc["psi"] = totient(args.k)
        doc["closed_form"] = _nmax_json(expected)
        doc["agrees_with_closed_form"] = ok
        if args.equations:
            doc["equations"] = render_equations(r, args.reduce).split("\n")
        out.write(_dump(doc) + "\n")
    else:
        moduli = "all" if res.unbounded else " ".join(map(str, res.valid_moduli))
        out.write(f"k={r.k} dim={r.dim} psi={totient(args.k)}\n")
        out.write(f"N={_nmax_text(res.n_max)}\n")
        out.write(f"valid moduli: {moduli}\n")
        if args.equations:
            out.write(render_equations(r, args.reduce) + "\n")
    if not ok:
        sys.stderr.write(f"closed form gives {_nmax_text(expected)}, matrices give "
                         f"{_nmax_text(res.n_max)}\n")
        return EXIT_REGRESSION
    return EXIT_OK


def cmd_table(args, out) -> int:
    rows = restriction_table(args.kmax)
    bad = [k for k, _, n in rows if n != closed_form_N(k)]
    if args.format == "json":
        doc = [{"k": k, "psi": psi, "n_max": _nmax_json(n)}
               for k, psi, n in rows]
        out.write(_dump(doc) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "psi", "n_max"])
        for k, psi, n in rows:
            w.writerow([k, psi, _nmax_text(n)])
        out.write(buf.getvalue())
    else:
        out.write(f"{'k':>5} {'psi':>5} {'N':>9}\n")
        for k, psi, n in rows:
            out.write(f"{k:>5} {psi:>5} {_nmax_text(n):>9}\n")
    if bad:
        sys.stderr.write(f"closed form disagrees for k in {bad}\n")
        return EXIT_REGRESSION
    return EXIT_OK


def cmd_verify(args, out) -> int:
    budget = point_budget()
    row = agreement_row(args.k, args.nscan, args.box, budget)
    if args.json:
        doc = row.to_json()
        doc.update(nscan=args.nscan, box=args.box, budget=budget)
        out.write(_dump(doc) + "\n")
    else:
        sym = row.symbolic if isinstance(row.symbolic, str) else " ".join(map(str, row.symbolic))
        out.write(f"k={row.k} dim={row.dim} box=[-{args.box},{args.box}]^{row.dim} nscan={args.nscan}\n")
        out.write(f"symbolic: {sym}\n")
        if row.skipped:
            out.write(f"bruteforce: skipped ({2 * args.box + 1}^{row.dim} points exceed budget {budget})\n")
        else:
            out.write(f"bruteforce: {' '.join(map(str, row.bruteforce))}\n")
            out.write(("agree" if row.agree else "DISAGREE") + "\n")
            for v in row.counterexamples:
                out.write(f"n={v.n}: m={v.point} t={v.t} colour {v.colours[0]} -> {v.colours[1]}\n")
    return EXIT_OK if row.agree else EXIT_REGRESSION


def cmd_mindim(args, out) -> int:
    if args.n < 2:
        raise UsageError("n must be >= 2")
    k, d = min_dimension(args.n)
    out.write(f"n={args.n} k={k} d={d}\n")
    return EXIT_OK


def cmd_render2d(args, out) -> int:
    try:
        spec = RenderSpec(k=args.k, n=args.n, extent=args.extent, basis=args.basis,
                          palette=tuple(parse_palette(args.palette)),
                          radius=args.radius, size=args.size)
    except ValueError as exc:
        raise UsageError(str(exc))
    bound = restriction_number(rep_2d(args.k)).n_max
    if not divides(args.n, bound) and not args.force:
        raise UsageError(f"{args.n} colours are not C{args.k}-invariant "
                         f"(N={_nmax_text(bound)}); use --force to draw anyway")
    svg = render_svg(spec)
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    except OSError as exc:
        sys.stderr.write(f"cannot write {args.out}: {exc}\n")
        return EXIT_IO
    out.write(f"wrote {args.out}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="chroma",
        description="Rotation restrictions for modular colour lattices.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("rep", help="print the integer rotation matrix for C_k")
    s.add_argument("k", type=_positive)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_rep)

    s = sub.add_parser("restrict", help="maximal colour count N for C_k")
    s.add_argument("k", type=_positive)
    s.add_argument("--dim2", action="store_true", help="use the plane-lattice matrix")
    s.add_argument("--equations", action="store_true")
    s.add_argument("--reduce", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_restrict)

    s = sub.add_parser("table", help="tabulate N for k = 1..kmax")
    s.add_argument("--kmax", type=_positive, required=True)
    s.add_argument("--format", choices=("text", "csv", "json"), default="text")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("verify", help="brute-force check of the valid moduli")
    s.add_argument("k", type=_positive)
    s.add_argument("--nscan", type=_positive, default=12)
    s.add_argument("--box", type=_positive, default=2)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("mindim", help="minimal lattice dimension for n colours")
    s.add_argument("n", type=_positive)
    s.set_defaults(func=cmd_mindim)

    s = sub.add_parser("render2d", help="draw a plane modular colouring as SVG")
    s.add_argument("k", type=int)
    s.add_argument("n", type=int)
    s.add_argument("--extent", type=int, default=4)
    s.add_argument("--basis", choices=("auto", "cartesian", "oblique"), default="auto")
    s.add_argument("--palette", help="comma-separated fill colours")
    s.add_argument("--radius", type=float, default=6.0)
    s.add_argument("--size", type=int, default=480)
    s.add_argument("--force", action="store_true")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_render2d)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except UsageError as exc:
        sys.stderr.write(f"chroma {args.command}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
