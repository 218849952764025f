"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 input-file
error.  Results go to stdout, diagnostics and progress to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import bijection, checks, closedform, oracle, orbifold
from .permmap import MapError, RootedMap

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _genus(g: int) -> int:
    if g < 1:
        raise UsageError("genus must be ≥ 1")
    return g


def _rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def table_rows(min_genus: int, max_genus: int) -> list[dict[str, str | int]]:
    return [
        {
            "genus": g,
            "labelled": str(closedform.eps4_rooted(g)),
            "unlabelled": str(orbifold.eps4_unrooted(g)),
        }
        for g in range(min_genus, max_genus + 1)
    ]


def format_table(rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, separators=(",", ":")) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["genus", "labelled", "unlabelled"])
        for r in rows:
            w.writerow([r["genus"], r["labelled"], r["unlabelled"]])
        return buf.getvalue()
    if fmt == "md":
        lines = ["| g | Labelled | Unlabelled |", "|---|---:|---:|"]
        lines += [f"| {r['genus']} | {r['labelled']} | {r['unlabelled']} |" for r in rows]
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def map_info(m: RootedMap) -> str:
    profile = m.degree_profile()
    verts = " ".join("(" + " ".join(map(str, c)) + ")" for c in m.vertices())
    tris = bijection.trisections(m)
    inter = bijection.intertwined_triples(m)
    lines = [
        f"darts: {m.darts}",
        f"edges: {m.edges}",
        f"vertices: {len(m.vertices())} {verts}",
        "degrees: {" + ", ".join(f"{d}: {c}" for d, c in profile.items()) + "}",
        f"genus: {m.genus()}",
        f"four-regular: {'yes' if m.is_four_regular() else 'no'}",
        f"trisections: {len(tris)} [" + ", ".join(map(str, tris)) + "]",
        f"intertwined triples: {len(inter)} [" + ", ".join(f"({a},{b},{c})" for a, b, c in inter) + "]",
    ]
    return "\n".join(lines) + "\n"


def _cmd_count(args) -> int:
    if args.what == "maps14":
        if args.k is None:
            raise UsageError("count maps14 needs --k")
        if args.genus < 0 or args.k < 0:
            raise UsageError("genus and k must be ≥ 0")
        print(closedform.eps14(args.genus, args.k))
        return EXIT_OK
    g = _genus(args.genus)
    if args.what == "rooted":
        print(closedform.eps4_rooted(g))
    else:
        print(orbifold.eps4_unrooted(g))
    return EXIT_OK


def _cmd_table(args) -> int:
    if not 1 <= args.min_genus <= args.max_genus:
        raise UsageError("need 1 ≤ min-genus ≤ max-genus")
    sys.stdout.write(format_table(table_rows(args.min_genus, args.max_genus), args.format))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    g = _genus(args.genus)
    if args.threads < 1:
        raise UsageError("threads must be ≥ 1")
    spec = oracle.SearchSpec.four_regular(g, workers=args.threads)
    progress = not args.quiet
    if progress:
        print(f"searching {spec.darts} darts ...", file=sys.stderr)
    if args.what == "rooted":
        print(oracle.count_rooted(spec, progress=progress))
    else:
        print(oracle.count_unrooted_burnside(spec, progress=progress))
    return EXIT_OK


def _cmd_signatures(args) -> int:
    g = _genus(args.genus)
    total = Fraction(0)
    for period in (1, 2, 4):
        for sig in orbifold.signatures_for(g, period):
            share = orbifold.contribution(sig)
            total += share
            print(f"{sig}  epi0={orbifold.epi0(sig)}  contribution={_rational(share)}")
    print(f"total {_rational(total)}")
    return EXIT_OK


def _cmd_map(args) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            m = RootedMap.from_json(fh.read())
    except OSError as exc:
        print(f"error: cannot read {args.path}: {exc.strerror}", file=sys.stderr)
        return EXIT_INPUT
    except MapError as exc:
        print(f"error: invalid map ({exc.invariant}): {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(map_info(m))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if not 1 <= args.max_genus <= 3:
        raise UsageError("max-genus must be between 1 and 3")
    ok = True
    for res in checks.run_checks(args.max_genus, workers=args.threads):
        print(res.line(), flush=True)
        ok &= res.passed
    print("all checks passed" if ok else "verification FAILED")
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fourmaps", description="Count 4-regular one-face maps.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="closed-form counts")
    c.add_argument("what", choices=["rooted", "unrooted", "maps14"])
    c.add_argument("--genus", type=int, required=True)
    c.add_argument("--k", type=int, help="number of degree-4 vertices (maps14 only)")
    c.set_defaults(func=_cmd_count)

    t = sub.add_parser("table", help="rooted and unrooted counts by genus")
    t.add_argument("--min-genus", type=int, default=1)
    t.add_argument("--max-genus", type=int, default=15)
    t.add_argument("--format", default="md")
    t.set_defaults(func=_cmd_table)

    o = sub.add_parser("oracle", help="brute-force counts")
    o.add_argument("what", choices=["rooted", "unrooted"])
    o.add_argument("--genus", type=int, required=True)
    o.add_argument("--threads", type=int, default=1)
    o.add_argument("--quiet", action="store_true", help="no progress on stderr")
    o.set_defaults(func=_cmd_oracle)

    s = sub.add_parser("signatures", help="orbifold signatures and their contributions")
    s.add_argument("--genus", type=int, required=True)
    s.set_defaults(func=_cmd_signatures)

    m = sub.add_parser("map", help="inspect a map file")
    m.add_argument("action", choices=["info"])
    m.add_argument("path")
    m.set_defaults(func=_cmd_map)

    v = sub.add_parser("verify", help="run all cross-checks")
    v.add_argument("--max-genus", type=int, default=2)
    v.add_argument("--threads", type=int, default=1)
    v.set_defaults(func=_cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"fourmaps: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
