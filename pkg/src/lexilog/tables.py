"""Regenerate the reference tables of lexicographic logic from first principles.

Each function returns rows as lists of cells; :func:`format_table` joins
them into the plain-text layout used by the command line.
"""
from __future__ import annotations

from .formula import parse
from .semantics import enumerate_classical_assignments, evaluate
from .synthesis import LevelTable, assign_patterns, synthesize
from .valuation import render, value_of
from .values import enumerate_values, lex_combine

__all__ = ["TABLES", "build_table", "format_table", "more_table"]


def _chain_text(values, left_nested: bool) -> str:
    a, b, c = (str(v) for v in values)
    return f"({a} >> {b}) >> {c}" if left_nested else f"{a} >> ({b} >> {c})"


def table_parenthesizations():
    """Both parenthesizations of a three-way chain over classical inputs."""
    left, right = parse("(x >> y) >> z"), parse("x >> (y >> z)")
    rows = [["x", "y", "z", "(x >> y) >> z", "x >> (y >> z)"]]
    for env in enumerate_classical_assignments("xyz"):
        rows.append([str(env[k]) for k in "xyz"] + [str(evaluate(left, env)), str(evaluate(right, env))])
    return rows


def table_ordered():
    """The sixteen chain expressions of the previous table, ascending by value."""
    entries = []
    for env in enumerate_classical_assignments("xyz"):
        x, y, z = env["x"], env["y"], env["z"]
        entries.append((lex_combine(lex_combine(x, y), z), _chain_text((x, y, z), True)))
        entries.append((lex_combine(x, lex_combine(y, z)), _chain_text((x, y, z), False)))
    entries.sort(key=lambda e: e[0])
    return [["expression", "list"]] + [[text, str(v)] for v, text in entries]


def table_rationals():
    """Every value of at most five digits with its exact rational value."""
    vals = [v for v in enumerate_values(2) if len(v) <= 5]
    return [["value", "val"]] + [[str(v), render(value_of(v))] for v in vals]


def _binary_op_table(text: str):
    f = parse(text)
    rows = [["x", "y", text]]
    for env in enumerate_classical_assignments("xy"):
        rows.append([str(env["x"]), str(env["y"]), str(evaluate(f, env))])
    return rows


def more_table() -> LevelTable:
    """Three inputs; the more of them hold, the better."""
    return LevelTable.from_function(lambda *bits: 3 - sum(bits), 3)


def table_more():
    table = more_table()
    scheme = assign_patterns(table.num_levels, 3)
    f = synthesize(table, scheme)
    rows = [["x1", "x2", "x3", "assignment column", "value"]]
    for bits, level in table.rows.items():
        pattern = " >> ".join("[T]" if b else "[F]" for b in scheme.patterns[level])
        rows.append(
            ["[T]" if b else "[F]" for b in bits]
            + [pattern, str(evaluate(f, table.assignment(bits)))]
        )
    return rows


TABLES = {
    "1": table_parenthesizations,
    "2": table_ordered,
    "3": table_rationals,
    "and-if-possible": lambda: _binary_op_table("x &> y"),
    "or-at-least": lambda: _binary_op_table("x |> y"),
    "more": table_more,
}


def build_table(which: str):
    try:
        return TABLES[which]()
    except KeyError:
        raise ValueError(f"unknown table {which!r}; choose from {', '.join(TABLES)}") from None


def format_table(rows) -> str:
    """Header and rows, cells separated by two spaces."""
    return "\n".join("  ".join(r) for r in rows)
