"""Lexicographic logic: list-valued truth, preference ranking and operator synthesis."""
from .errors import (
    BudgetExceededError,
    DataFormatError,
    FormulaSyntaxError,
    InvalidValueError,
    LexilogError,
    UnboundAtomError,
)
from .formula import (
    And,
    Atom,
    Const,
    Formula,
    IfPossible,
    LexPrio,
    Not,
    Or,
    OrAtLeast,
    Xor,
    atoms_of,
    desugar,
    parse,
)
from .formula import render as render_formula
from .semantics import (
    Counterexample,
    Equivalent,
    RankedModel,
    counterexamples,
    enumerate_classical_assignments,
    equivalent,
    evaluate,
    format_assignment,
    parse_assignment,
    preferable,
    rank_models,
)
from .synthesis import (
    LevelTable,
    PatternScheme,
    assign_patterns,
    build_level_expr,
    read_level_table,
    synthesize,
    verify_synthesis,
)
from .valuation import render as render_rational
from .valuation import value_of
from .values import (
    FALSE,
    TRUE,
    Digit,
    TruthValue,
    compare,
    decompose,
    enumerate_values,
    lex_combine,
    negate,
    parse_value,
    sign,
    validate,
)

__version__ = "0.1.0"
