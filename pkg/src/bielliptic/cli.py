"""Command-line interface.

Exit codes: 0 success, 1 integrity failure (a golden-data or exact-arithmetic
check failed), 2 usage error, 3 missing data file.  Values go to stdout;
rule traces only with --trace.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import atlas, involutions, modsym
from .errors import DataError, IntegrityError, OrderViolation
from .ntheory import ALSubgroup

EXIT_OK = 0
EXIT_INTEGRITY = 1
EXIT_USAGE = 2
EXIT_MISSING_DATA = 3


def _data_dir() -> str:
    return os.environ.get("BIELLIPTIC_DATA_DIR", ".")


def _resolve(path: str | None) -> str | None:
    if path is None:
        return None
    if os.path.isabs(path) or os.path.exists(path):
        return path
    return os.path.join(_data_dir(), path)


def _parse_subgroup(N: int, text: str | None) -> ALSubgroup:
    if not text:
        return ALSubgroup.trivial(N)
    gens = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok.startswith("w") or not tok[1:].isdigit():
            raise UsageError(f"bad subgroup generator {tok!r} (expected e.g. w8)")
        d = int(tok[1:])
        try:
            ALSubgroup(N, (d,))
        except ValueError:
            raise UsageError(f"{tok} is not an Atkin-Lehner involution of level {N}")
        gens.append(d)
    return ALSubgroup(N, gens)


class UsageError(Exception):
    pass


def _load_tables(args):
    ec = atlas.default_ec_table()
    adj = atlas.default_adjudications()
    ec_path = _resolve(getattr(args, "ec", None))
    adj_path = _resolve(getattr(args, "adjudications", None))
    if ec_path is not None:
        if not os.path.exists(ec_path):
            raise FileNotFoundError(ec_path)
        with open(ec_path) as fh:
            ec = atlas.ingest_ec_table(fh)
    if adj_path is not None:
        if not os.path.exists(adj_path):
            raise FileNotFoundError(adj_path)
        with open(adj_path) as fh:
            adj = atlas.ingest_adjudications(fh)
    return ec, adj


def cmd_genus(args) -> int:
    sub = _parse_subgroup(args.level, args.w)
    print(modsym.invariant_genus(args.level, sub))
    return EXIT_OK


def cmd_fix(args) -> int:
    if args.all:
        print(involutions.fix_table_tsv(args.level))
        return EXIT_OK
    if not args.element:
        raise UsageError("fix needs --all or --element")
    elem = involutions.parse_element(args.level, args.element)
    print(involutions.fix_count(elem))
    return EXIT_OK


def cmd_group_genus(args) -> int:
    if not args.gens:
        raise UsageError("group-genus needs --gens")
    gens = [g.strip() for g in args.gens.split(",") if g.strip()]
    group = involutions.group_closure(args.level, gens)
    print(involutions.quotient_genus_hurwitz(args.level, group))
    return EXIT_OK


def cmd_screen(args) -> int:
    sub = _parse_subgroup(args.level, args.w)
    _, adj = _load_tables(args)
    record = atlas.classify_pair(args.level, sub, adj)
    print(f"{record.status}")
    if record.witness is not None:
        print(f"witness: {record.witness.describe()} field: {record.field}")
    if record.adjudication is not None:
        print(f"adjudication: {record.adjudication[1]}")
    if args.trace:
        for res in record.rule_trace:
            print(res.line())
    return EXIT_OK


def cmd_classify(args) -> int:
    ec, adj = _load_tables(args)
    records = atlas.classify_all(ec, adj)
    print(atlas.emit_report(records, args.format), end="")
    if args.trace:
        for rec in records:
            for res in rec.rule_trace:
                print(f"{rec.N},{rec.subgroup.label()}: {res.line()}", file=sys.stderr)
    return EXIT_OK


def cmd_quadpoints(args) -> int:
    ec, adj = _load_tables(args)
    records = atlas.classify_all(ec, adj)
    for rec in records:
        print(f"{rec.N} {rec.subgroup.label()} {rec.quadratic_points}")
    return EXIT_OK


def cmd_selftest(args) -> int:
    ran_any = False
    if args.genus_tables or args.all:
        levels = None
        if args.levels:
            levels = {int(tok) for tok in args.levels.split(",")}
        count = atlas.verify_genus_tables(levels)
        print(f"genus-tables: {count} genus cells verified")
        ran_any = True
    if args.fix_tables or args.all:
        count = atlas.verify_fix_tables()
        print(f"fix-tables: {count} fixed-point counts verified")
        ran_any = True
    if args.classification or args.all:
        ec, adj = _load_tables(args)
        stats = atlas.verify_classification(atlas.classify_all(ec, adj))
        print(
            "classification: {pairs} pairs, {bielliptic} bielliptic, "
            "{excluded} excluded, {adjudicated} adjudicated, "
            "{infinite_quadratic} with infinitely many quadratic points".format(**stats)
        )
        ran_any = True
    if not ran_any:
        raise UsageError(
            "selftest needs at least one of --genus-tables, --fix-tables, "
            "--classification, --all"
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bielliptic",
        description="Exact screening calculus for bielliptic Atkin-Lehner quotients",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("genus", help="genus of X0(N)/W")
    p.add_argument("level", type=int)
    p.add_argument("--w", help="subgroup generators, e.g. w8,w3")
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("fix", help="fixed-point counts at a level")
    p.add_argument("level", type=int)
    p.add_argument("--all", action="store_true", help="dump the full table as TSV")
    p.add_argument("--element", help='single element, e.g. "V2*w40"')
    p.set_defaults(func=cmd_fix)

    p = sub.add_parser("group-genus", help="quotient genus of an involution group")
    p.add_argument("level", type=int)
    p.add_argument("--gens", help='generators, e.g. "w9,V3*w7"')
    p.set_defaults(func=cmd_group_genus)

    p = sub.add_parser("screen", help="screen a single pair")
    p.add_argument("level", type=int)
    p.add_argument("--w", help="subgroup generators")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--ec", help="elliptic-curve table file")
    p.add_argument("--adjudications", help="adjudicated-verdict file")
    p.set_defaults(func=cmd_screen)

    p = sub.add_parser("classify", help="classify every pair in scope")
    p.add_argument("--format", choices=("markdown", "csv", "json"), default="markdown")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--ec")
    p.add_argument("--adjudications")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("quadpoints", help="quadratic-point status of every pair")
    p.add_argument("--ec")
    p.add_argument("--adjudications")
    p.set_defaults(func=cmd_quadpoints)

    p = sub.add_parser("selftest", help="verify the engine against golden data")
    p.add_argument("--genus-tables", action="store_true")
    p.add_argument("--fix-tables", action="store_true")
    p.add_argument("--classification", action="store_true")
    p.add_argument("--all", action="store_true")
    p.add_argument("--levels", help="restrict genus-table check to these levels")
    p.add_argument("--ec")
    p.add_argument("--adjudications")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: missing data file: {exc}", file=sys.stderr)
        return EXIT_MISSING_DATA
    except (IntegrityError, DataError) as exc:
        print(f"integrity failure: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY
    except (ValueError, OrderViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
