"""Compile hierarchical preference operators from level-annotated truth tables.

Every row of a :class:`LevelTable` gets a preference level (0 is best). Each
level is mapped to a classical bit pattern of length ``L`` with better
levels receiving lexicographically larger patterns. Position ``i`` of the
chain is the disjunction of minterms of the rows whose pattern has T at
``i``, and the operator is the right-nested chain ``E1 >> E2 >> ... >> EL``.
On classical inputs the chain evaluates to the row's pattern combined with
``>>``, and since ``>>`` preserves lexicographic order the levels come out
in the requested order.
"""
from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .errors import DataFormatError
from .formula import And, Atom, Const, Formula, LexPrio, Not, Or
from .semantics import evaluate
from .values import FALSE, TRUE, TruthValue

__all__ = [
    "LevelTable",
    "PatternScheme",
    "SynthesisOk",
    "SynthesisViolation",
    "assign_patterns",
    "build_level_expr",
    "synthesize",
    "verify_synthesis",
    "read_level_table",
    "parse_bool",
]

_BOOL_WORDS = {"t": True, "1": True, "true": True, "f": False, "0": False, "false": False}


def parse_bool(cell: str) -> bool:
    """Accept T/F, 1/0 and true/false in any case."""
    try:
        return _BOOL_WORDS[cell.strip().lower()]
    except KeyError:
        raise DataFormatError(f"not a boolean: {cell!r}") from None


@dataclass(frozen=True)
class LevelTable:
    """A classical truth table whose rows carry preference levels.

    ``rows`` maps each input tuple of bools (in ``names`` order) to its level.
    """

    names: tuple[str, ...]
    rows: Mapping[tuple[bool, ...], int]

    def __post_init__(self):
        n = len(self.names)
        if n < 1:
            raise DataFormatError("a level table needs at least one input")
        if len(set(self.names)) != n:
            raise DataFormatError("duplicate input names")
        for name in self.names:
            Atom(name)  # validates the identifier
        expected = set(itertools.product((False, True), repeat=n))
        got = set(self.rows)
        if got != expected:
            missing = sorted(expected - got)
            extra = sorted(got - expected)
            if missing:
                raise DataFormatError(f"missing input combination {_bits(missing[0])}")
            raise DataFormatError(f"unexpected row {extra[0]!r}")
        levels = set(self.rows.values())
        if any(not isinstance(l, int) or l < 0 for l in levels):
            raise DataFormatError("levels must be non-negative integers")
        if levels != set(range(len(levels))):
            raise DataFormatError(f"levels {sorted(levels)} are not contiguous from 0")
        object.__setattr__(self, "rows", dict(sorted(self.rows.items())))

    @property
    def arity(self) -> int:
        return len(self.names)

    @property
    def num_levels(self) -> int:
        return max(self.rows.values()) + 1

    @classmethod
    def from_function(cls, level_fn: Callable[..., int], names: Sequence[str] | int):
        """Build a table by calling ``level_fn(*bits)`` on every input row."""
        if isinstance(names, int):
            names = [f"x{k}" for k in range(1, names + 1)]
        names = tuple(names)
        rows = {
            bits: level_fn(*bits) for bits in itertools.product((False, True), repeat=len(names))
        }
        return cls(names, rows)

    def assignment(self, bits: tuple[bool, ...]) -> dict[str, TruthValue]:
        return {name: TRUE if b else FALSE for name, b in zip(self.names, bits)}

    def to_csv(self) -> str:
        lines = [",".join(self.names) + ",level"]
        for bits, level in self.rows.items():
            lines.append(",".join("T" if b else "F" for b in bits) + f",{level}")
        return "\n".join(lines) + "\n"


def _bits(bits) -> str:
    return "(" + ",".join("T" if b else "F" for b in bits) + ")"


def read_level_table(text: str) -> LevelTable:
    """Parse the CSV form: header ``x1,...,xn,level`` then one row per input."""
    reader = csv.reader(io.StringIO(text))
    rows = [r for r in reader if r and any(c.strip() for c in r)]
    if not rows:
        raise DataFormatError("empty level table")
    header = [c.strip() for c in rows[0]]
    if len(header) < 2 or header[-1].lower() != "level":
        raise DataFormatError("header must be input names followed by 'level'")
    names = tuple(header[:-1])
    table = {}
    for lineno, r in enumerate(rows[1:], start=2):
        if len(r) != len(header):
            raise DataFormatError(f"line {lineno}: expected {len(header)} cells, got {len(r)}")
        bits = tuple(parse_bool(c) for c in r[:-1])
        try:
            level = int(r[-1].strip())
        except ValueError:
            raise DataFormatError(f"line {lineno}: bad level {r[-1]!r}") from None
        if bits in table:
            raise DataFormatError(f"line {lineno}: duplicate row {_bits(bits)}")
        table[bits] = level
    try:
        return LevelTable(names, table)
    except ValueError as e:
        if isinstance(e, DataFormatError):
            raise
        raise DataFormatError(str(e)) from None


@dataclass(frozen=True)
class PatternScheme:
    """One classical bit pattern per level, strictly decreasing lexicographically."""

    patterns: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        if not self.patterns:
            raise ValueError("a pattern scheme needs at least one level")
        length = len(self.patterns[0])
        if length < 1 or any(len(p) != length for p in self.patterns):
            raise ValueError("patterns must share one positive length")
        for hi, lo in zip(self.patterns, self.patterns[1:]):
            if not hi > lo:
                raise ValueError("patterns must strictly decrease from level to level")

    @property
    def chain_length(self) -> int:
        return len(self.patterns[0])

    def __str__(self):
        return ", ".join("".join("T" if b else "F" for b in p) for p in self.patterns)


def assign_patterns(m: int, requested_length: int | None = None) -> PatternScheme:
    """Staircase scheme: level ``j`` gets ``T * (L - j) + F * j``.

    >>> str(assign_patterns(4, 3))
    'TTT, TTF, TFF, FFF'
    """
    if m < 1:
        raise ValueError("need at least one level")
    if requested_length is not None and requested_length < m - 1:
        raise ValueError(f"chain length {requested_length} cannot separate {m} levels")
    length = max(requested_length or 0, m - 1, 1)
    return PatternScheme(tuple((True,) * (length - j) + (False,) * j for j in range(m)))


def _minterm(names, bits) -> Formula:
    lits = [Atom(n) if b else Not(Atom(n)) for n, b in zip(names, bits)]
    term = lits[0]
    for lit in lits[1:]:
        term = And(term, lit)
    return term


def build_level_expr(table: LevelTable, scheme: PatternScheme, i: int) -> Formula:
    """Minterm DNF of the rows whose level pattern has T at position ``i`` (1-based)."""
    if not 1 <= i <= scheme.chain_length:
        raise ValueError(f"position {i} outside 1..{scheme.chain_length}")
    if len(scheme.patterns) < table.num_levels:
        raise ValueError("scheme has fewer patterns than the table has levels")
    terms = [
        _minterm(table.names, bits)
        for bits, level in table.rows.items()
        if scheme.patterns[level][i - 1]
    ]
    if not terms:
        return Const(FALSE)
    expr = terms[0]
    for t in terms[1:]:
        expr = Or(expr, t)
    return expr


def synthesize(table: LevelTable, scheme: PatternScheme | None = None, chain_length: int | None = None) -> Formula:
    """Right-nested ``>>`` chain of the per-position level expressions."""
    if scheme is None:
        scheme = assign_patterns(table.num_levels, chain_length)
    exprs = [build_level_expr(table, scheme, i) for i in range(1, scheme.chain_length + 1)]
    f = exprs[-1]
    for e in reversed(exprs[:-1]):
        f = LexPrio(e, f)
    return f


@dataclass(frozen=True)
class SynthesisOk:
    values: Mapping[tuple[bool, ...], TruthValue]

    def __bool__(self):
        return True

    def __str__(self):
        return "ok"


@dataclass(frozen=True)
class SynthesisViolation:
    row1: tuple[bool, ...]
    row2: tuple[bool, ...]
    value1: TruthValue
    value2: TruthValue
    level1: int
    level2: int

    def __bool__(self):
        return False

    def __str__(self):
        return (
            f"violation: row {_bits(self.row1)} level {self.level1} -> {self.value1}, "
            f"row {_bits(self.row2)} level {self.level2} -> {self.value2}"
        )


def verify_synthesis(table: LevelTable, f: Formula) -> SynthesisOk | SynthesisViolation:
    """Brute-force check that ``f`` orders the rows exactly as their levels do."""
    values = {}
    for bits in table.rows:
        values[bits] = evaluate(f, table.assignment(bits))
    items = list(table.rows.items())
    for (r1, l1), (r2, l2) in itertools.combinations(items, 2):
        v1, v2 = values[r1], values[r2]
        if l1 == l2:
            ok = v1 == v2
        else:
            ok = (l1 < l2) == (v1 > v2) and v1 != v2
        if not ok:
            return SynthesisViolation(r1, r2, v1, v2, l1, l2)
    return SynthesisOk(values)
