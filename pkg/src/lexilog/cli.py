"""``lexilog`` command-line front end.

Exit codes: 0 success, 2 syntax, 3 binding, 4 data format, 5 resource budget.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import tables
from .dataset import read_dataset
from .errors import BudgetExceededError, DataFormatError, FormulaSyntaxError, UnboundAtomError
from .formula import atoms_of, parse, render as render_formula
from .semantics import equivalent, evaluate, parse_assignment, rank_models
from .synthesis import read_level_table, synthesize, verify_synthesis
from .valuation import render, value_of
from .values import enumerate_values, sign

EXIT_OK = 0
EXIT_SYNTAX = 2
EXIT_BINDING = 3
EXIT_DATA = 4
EXIT_BUDGET = 5

VALUES_DEPTH_CAP = 3


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _read_text(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}", EXIT_DATA) from None


def _formula_from_args(args, attr="formula"):
    text = getattr(args, attr)
    if getattr(args, "file", None):
        if text is not None:
            raise CliError("give a formula or --file, not both", EXIT_SYNTAX)
        text = _read_text(args.file)
    if text is None:
        raise CliError("no formula given", EXIT_SYNTAX)
    return parse(text)


def _value_record(value, **extra):
    r = value_of(value)
    return dict(extra, value=str(value), fraction=render(r), decimal=render(r, "decimal"))


def _aligned(rows):
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    return ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]


def cmd_eval(args, out):
    f = _formula_from_args(args)
    if args.assign is None:
        assignment = {}
    elif os.path.isfile(args.assign):
        assignment = parse_assignment(_read_text(args.assign))
    else:
        assignment = parse_assignment(args.assign)
    value = evaluate(f, assignment)
    rec = _value_record(value, sign=str(sign(value)))
    if args.json:
        out.write(json.dumps(rec) + "\n")
    else:
        out.write(f"{rec['value']}  sign={rec['sign']}  {rec['fraction']}  {rec['decimal']}\n")


def cmd_rank(args, out):
    f = _formula_from_args(args)
    data = read_dataset(_read_text(args.data))
    if not data.records:
        return
    assignments = data.assignments(atoms_of(f))
    ranked = rank_models(f, assignments)
    recs = [_value_record(m.value, rank=m.rank, id=data.ids[m.index]) for m in ranked]
    if args.json:
        for r in recs:
            out.write(json.dumps({k: r[k] for k in ("rank", "id", "value", "fraction", "decimal")}) + "\n")
        return
    rows = [[str(r["rank"]), r["id"], r["value"], r["fraction"], r["decimal"]] for r in recs]
    for line in _aligned(rows):
        out.write(line + "\n")


def cmd_synth(args, out):
    table = read_level_table(_read_text(args.table))
    try:
        f = synthesize(table, chain_length=args.chain_length)
    except ValueError as e:
        raise CliError(str(e), EXIT_DATA) from None
    out.write(render_formula(f) + "\n")
    if args.verify:
        out.write(str(verify_synthesis(table, f)) + "\n")


def cmd_equiv(args, out):
    f1, f2 = parse(args.formula1), parse(args.formula2)
    if args.depth < 0:
        raise CliError("depth must be non-negative", EXIT_SYNTAX)
    verdict = equivalent(f1, f2, args.depth)
    out.write(str(verdict) + "\n")


def cmd_tables(args, out):
    out.write(tables.format_table(tables.build_table(args.which)) + "\n")


def cmd_values(args, out):
    if args.depth < 0:
        raise CliError("depth must be non-negative", EXIT_SYNTAX)
    if args.depth > VALUES_DEPTH_CAP:
        raise CliError(f"depth {args.depth} exceeds the cap of {VALUES_DEPTH_CAP}", EXIT_BUDGET)
    for v in enumerate_values(args.depth):
        rec = _value_record(v)
        if args.json:
            out.write(json.dumps(rec) + "\n")
        else:
            out.write(f"{rec['value']}  {rec['fraction']}  {rec['decimal']}\n")


def build_parser():
    p = argparse.ArgumentParser(prog="lexilog", description="Lexicographic logic engine.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate a formula under one assignment")
    e.add_argument("formula", nargs="?")
    e.add_argument("--file", help="read the formula from a file")
    e.add_argument("--assign", help="inline {a:[T], b:[F]} or a file of 'atom = VALUE' lines")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_eval)

    r = sub.add_parser("rank", help="rank the records of a CSV dataset")
    r.add_argument("formula", nargs="?")
    r.add_argument("--file")
    r.add_argument("--data", required=True, help="CSV with a header row")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_rank)

    s = sub.add_parser("synth", help="synthesize an operator from a level table CSV")
    s.add_argument("table")
    s.add_argument("--chain-length", type=int, default=None)
    s.add_argument("--verify", action="store_true")
    s.set_defaults(func=cmd_synth)

    q = sub.add_parser("equiv", help="bounded equivalence check")
    q.add_argument("formula1")
    q.add_argument("formula2")
    q.add_argument("--depth", type=int, default=2)
    q.set_defaults(func=cmd_equiv)

    t = sub.add_parser("tables", help="regenerate a reference table")
    t.add_argument("which", choices=list(tables.TABLES))
    t.set_defaults(func=cmd_tables)

    v = sub.add_parser("values", help="list enumerated truth values")
    v.add_argument("--depth", type=int, default=1)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_values)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        args.func(args, out)
    except CliError as e:
        err.write(f"lexilog: {e}\n")
        return e.code
    except FormulaSyntaxError as e:
        err.write(f"lexilog: {e}\n")
        return EXIT_SYNTAX
    except UnboundAtomError as e:
        err.write(f"lexilog: {e}\n")
        return EXIT_BINDING
    except DataFormatError as e:
        err.write(f"lexilog: {e}\n")
        return EXIT_DATA
    except BudgetExceededError as e:
        err.write(f"lexilog: {e}\n")
        return EXIT_BUDGET
    return EXIT_OK


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
