"""Command-line entry point: ``commprob <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import catalog
from .errors import GroupError
from .groupfile import format_group
from .verify import (
    analyze,
    property_groups,
    table_groups,
    verify_char_table,
    verify_properties,
    verify_rusin_corrections,
)


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("tsv", "json"), default="tsv")
    common.add_argument("--strict", action="store_true",
                        help="exact associativity check for ingested tables")

    p = argparse.ArgumentParser(prog="commprob", description="Commutativity degree of finite groups.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="report invariants of a group file")
    a.add_argument("file")

    w = sub.add_parser("witness", parents=[common], help="build a witness group")
    w.add_argument("row_id")
    w.add_argument("--out", help="write the group file here instead of stdout")

    v = sub.add_parser("verify", help="run a verification suite")
    vs = v.add_subparsers(dest="suite", required=True)
    vt = vs.add_parser("table", parents=[common], help="classification table")
    vt.add_argument("--ingest", metavar="DIR", help="also check every group file in DIR")
    vt.add_argument("--max-order", type=int, default=100)
    vp = vs.add_parser("properties", parents=[common], help="lemma and identity suites")
    vp.add_argument("--max-order", type=int, default=100)
    vp.add_argument("--allow-vacuous", action="store_true",
                    help="do not fail on checks whose hypotheses never held")
    vs.add_parser("remarks", parents=[common], help="corrections to the earlier classification")

    c = sub.add_parser("catalog", help="catalog queries")
    cs = c.add_subparsers(dest="what", required=True)
    cs.add_parser("list", parents=[common], help="list witness rows and auxiliary groups")
    return p


def _emit(report, fmt: str) -> int:
    sys.stdout.write(report.to_json() if fmt == "json" else report.to_tsv())
    return report.exit_code


def _catalog_list(fmt: str) -> int:
    rows = [(rid, "witness" if not s.is_remark else "remark", s.recipe)
            for rid, s in catalog.WITNESSES.items()]
    rows += [(name, "auxiliary", fn.__doc__.splitlines()[0] if fn.__doc__ else "")
             for name, fn in catalog.AUXILIARY.items()]
    if fmt == "json":
        sys.stdout.write(json.dumps([dict(zip(("id", "kind", "recipe"), r)) for r in rows],
                                    indent=2) + "\n")
    else:
        sys.stdout.write("id\tkind\trecipe\n")
        sys.stdout.writelines("\t".join(r) + "\n" for r in rows)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "analyze":
            g = catalog.ingest(args.file, strict=args.strict)
            report = analyze(g)
            sys.stdout.write(report.to_json() if args.format == "json" else report.to_tsv())
            return 0
        if args.command == "witness":
            g = catalog.witness(args.row_id)
            if args.out:
                catalog.export(g, args.out)
            else:
                sys.stdout.write(format_group(g))
            return 0
        if args.command == "catalog":
            return _catalog_list(args.format)
        if args.suite == "table":
            extra = catalog.ingest_dir(args.ingest, strict=args.strict) if args.ingest else []
            return _emit(verify_char_table(table_groups(args.max_order, extra)), args.format)
        if args.suite == "properties":
            groups = property_groups(args.max_order)
            return _emit(verify_properties(groups, allow_vacuous=args.allow_vacuous), args.format)
        return _emit(verify_rusin_corrections(), args.format)
    except (GroupError, OSError) as exc:
        print(f"commprob: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
