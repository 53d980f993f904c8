"""Evaluation of formulas under truth assignments, preference and ranking.

An assignment is any mapping from atom names to :class:`TruthValue`. Plain
dicts are used throughout; :func:`parse_assignment` and
:func:`format_assignment` handle the textual forms.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import BudgetExceededError, DataFormatError, InvalidValueError, UnboundAtomError
from .formula import And, Atom, Const, Formula, LexPrio, Not, Or, atoms_of, desugar, parse
from .valuation import value_of
from .values import FALSE, TRUE, TruthValue, compare, enumerate_values, lex_combine, negate, parse_value

__all__ = [
    "Assignment",
    "RankedModel",
    "Equivalent",
    "Counterexample",
    "evaluate",
    "preferable",
    "enumerate_classical_assignments",
    "rank_models",
    "equivalent",
    "counterexamples",
    "parse_assignment",
    "format_assignment",
    "MAX_CLASSICAL_ATOMS",
    "DEFAULT_BUDGET",
]

Assignment = Mapping[str, TruthValue]

MAX_CLASSICAL_ATOMS = 20
DEFAULT_BUDGET = 10**7


def _as_formula(f) -> Formula:
    return parse(f) if isinstance(f, str) else f


def _eval_core(f: Formula, env: Assignment) -> TruthValue:
    if isinstance(f, Atom):
        try:
            return env[f.name]
        except KeyError:
            raise UnboundAtomError(f.name) from None
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Not):
        return negate(_eval_core(f.child, env))
    a = _eval_core(f.left, env)
    b = _eval_core(f.right, env)
    if isinstance(f, LexPrio):
        return lex_combine(a, b)
    if isinstance(f, And):
        return a if a <= b else b
    if isinstance(f, Or):
        return a if a >= b else b
    raise TypeError(f"not a core formula node: {type(f).__name__}")


def evaluate(f: Formula | str, assignment: Assignment) -> TruthValue:
    """Truth value of ``f`` under ``assignment``.

    Derived connectives are desugared first. Raises :class:`UnboundAtomError`
    naming the first atom (in occurrence order) that the assignment misses.
    """
    f = _as_formula(f)
    for name in atoms_of(f):
        if name not in assignment:
            raise UnboundAtomError(name)
    return _eval_core(desugar(f), assignment)


def preferable(f: Formula | str, i1: Assignment, i2: Assignment) -> int:
    """Compare the value of ``f`` under ``i1`` against ``i2``: -1, 0 or 1.

    -1 means ``i2`` is preferable to ``i1``.
    """
    f = _as_formula(f)
    return compare(evaluate(f, i1), evaluate(f, i2))


def enumerate_classical_assignments(
    atoms: Sequence[str], limit: int = MAX_CLASSICAL_ATOMS
) -> list[dict[str, TruthValue]]:
    """All ``2**n`` classical assignments in binary counting order (F before T,
    first atom most significant)."""
    atoms = list(dict.fromkeys(atoms))
    if len(atoms) > limit:
        raise BudgetExceededError(f"{len(atoms)} atoms exceed the limit of {limit}")
    return [dict(zip(atoms, combo)) for combo in itertools.product((FALSE, TRUE), repeat=len(atoms))]


@dataclass(frozen=True)
class RankedModel:
    assignment: Assignment
    value: TruthValue
    score: Fraction
    rank: int
    index: int  # position in the candidate sequence


def rank_models(f: Formula | str, candidates: Iterable[Assignment]) -> list[RankedModel]:
    """Sort candidates by descending value of ``f`` (stable) with competition ranks."""
    f = _as_formula(f)
    evaluated = [(k, cand, evaluate(f, cand)) for k, cand in enumerate(candidates)]
    # reverse=True keeps equal elements in their original order
    evaluated.sort(key=lambda e: e[2], reverse=True)
    out = []
    rank = 0
    prev = None
    for pos, (k, cand, value) in enumerate(evaluated, start=1):
        if value != prev:
            rank = pos
            prev = value
        out.append(RankedModel(cand, value, value_of(value), rank, k))
    return out


@dataclass(frozen=True)
class Equivalent:
    depth: int

    def __bool__(self):
        return True

    def __str__(self):
        return f"equivalent (up to depth {self.depth})"


@dataclass(frozen=True)
class Counterexample:
    assignment: Mapping[str, TruthValue]
    left: TruthValue
    right: TruthValue

    def __bool__(self):
        return False

    def __str__(self):
        return f"counterexample {format_assignment(self.assignment)}: {self.left} vs {self.right}"


def counterexamples(
    f1: Formula | str, f2: Formula | str, depth: int = 0, budget: int = DEFAULT_BUDGET
) -> Iterator[Counterexample]:
    """Yield every assignment over ``enumerate_values(depth)`` separating ``f1``
    from ``f2``, in enumeration order."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    f1, f2 = _as_formula(f1), _as_formula(f2)
    atoms = list(dict.fromkeys(atoms_of(f1) + atoms_of(f2)))
    values = enumerate_values(depth)
    total = len(values) ** len(atoms)
    if total > budget:
        raise BudgetExceededError(
            f"{len(values)}^{len(atoms)} = {total} assignments exceed the budget of {budget}"
        )
    g1, g2 = desugar(f1), desugar(f2)
    for combo in itertools.product(values, repeat=len(atoms)):
        env = dict(zip(atoms, combo))
        a = _eval_core(g1, env)
        b = _eval_core(g2, env)
        if a != b:
            yield Counterexample(env, a, b)


def equivalent(
    f1: Formula | str, f2: Formula | str, depth: int = 0, budget: int = DEFAULT_BUDGET
) -> Equivalent | Counterexample:
    """Bounded equivalence check over all assignments into ``enumerate_values(depth)``.

    Returns the first counterexample found, or an :class:`Equivalent` verdict
    that only claims agreement up to ``depth``. Depth 0 is classical
    assignments only.
    """
    for cex in counterexamples(f1, f2, depth, budget):
        return cex
    return Equivalent(depth)


# -- text forms ----------------------------------------------------------------

_INLINE_RE = re.compile(r"^\s*\{(.*)\}\s*$", re.S)
_BINDING_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*[:=]\s*(\S.*?)\s*$", re.S)


def _split_top_level(body: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for c in body:
        if c == "[":
            depth += 1
        elif c == "]":
            depth -= 1
        if c == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(c)
    parts.append("".join(cur))
    return [p for p in parts if p.strip()]


def parse_assignment(text: str) -> dict[str, TruthValue]:
    """Parse ``{a:[T], b:[0,T,F]}`` or one ``atom = VALUE`` binding per line.

    Blank lines and ``#`` comments are ignored in the line form.
    """
    m = _INLINE_RE.match(text)
    if m:
        items = _split_top_level(m.group(1))
    else:
        items = []
        for line in text.splitlines():
            line = line.split("#", 1)[0]
            if line.strip():
                items.append(line)
    out = {}
    for item in items:
        b = _BINDING_RE.match(item)
        if not b:
            raise DataFormatError(f"malformed binding {item.strip()!r}")
        name, literal = b.groups()
        if name in out:
            raise DataFormatError(f"atom {name!r} bound twice")
        try:
            out[name] = parse_value(literal)
        except InvalidValueError as e:
            raise DataFormatError(f"bad value for {name!r}: {e.reason}") from None
    return out


def format_assignment(assignment: Assignment) -> str:
    return "{" + ", ".join(f"{k}:{v}" for k, v in assignment.items()) + "}"
