"""The list-based truth domain and its operations.

A truth value is an odd-length list over the digits ``F < 0 < T``. The two
classical values are ``[F]`` and ``[T]``; every other value has the form
``[0] + u + v`` for values ``u`` and ``v`` that are not both ``[F]`` nor
both ``[T]``. The zero acts as a Polish-notation marker for the pair, which
is what keeps :func:`lex_combine` non-associative.

Values are stored as flat digit tuples. Because no value is a proper prefix
of another, plain tuple comparison is exactly the lexicographic order.
"""
from __future__ import annotations

import enum
import re
from functools import total_ordering
from typing import Iterable, Sequence

from .errors import InvalidValueError

__all__ = [
    "Digit",
    "TruthValue",
    "FALSE",
    "TRUE",
    "lex_combine",
    "negate",
    "sign",
    "compare",
    "validate",
    "decompose",
    "enumerate_values",
    "parse_value",
    "vmin",
    "vmax",
]


class Digit(enum.IntEnum):
    """A single ternary digit. The integer value is its balanced-ternary weight."""

    F = -1
    ZERO = 0
    T = 1

    @property
    def char(self) -> str:
        return _DIGIT_CHARS[self]

    @classmethod
    def coerce(cls, x) -> "Digit":
        if isinstance(x, str):
            try:
                return _CHAR_DIGITS[x.strip().upper()]
            except KeyError:
                raise InvalidValueError(f"bad digit {x!r}") from None
        try:
            return cls(x)
        except ValueError:
            raise InvalidValueError(f"bad digit {x!r}") from None

    def __str__(self) -> str:
        return self.char


_DIGIT_CHARS = {Digit.F: "F", Digit.ZERO: "0", Digit.T: "T"}
_CHAR_DIGITS = {c: d for d, c in _DIGIT_CHARS.items()}


def _membership_error(digits: Sequence[int]) -> str | None:
    """Return why ``digits`` is not a member of the domain, or None if it is."""
    n = len(digits)
    if n == 0:
        return "empty digit list"
    if n % 2 == 0:
        return "even length"
    # Polish-notation scan: each ZERO is a node with two children,
    # each F/T a leaf. ``open_slots`` counts subterms still expected.
    open_slots = 1
    for i, d in enumerate(digits):
        if open_slots == 0:
            return f"trailing digits from position {i}"
        if d == 0:
            open_slots += 1
        else:
            open_slots -= 1
    if open_slots:
        return "leading zero with unparsable body"
    # A node's children start right after it, so a contiguous 0,F,F or
    # 0,T,T is always a node whose two children are equal classical leaves.
    for i in range(n - 2):
        if digits[i] == 0 and digits[i + 1] != 0 and digits[i + 1] == digits[i + 2]:
            c = "T" if digits[i + 1] > 0 else "F"
            return f"reducible form [0,{c},{c}] at position {i}"
    return None


@total_ordering
class TruthValue:
    """An immutable member of the truth domain.

    The constructor accepts digits as :class:`Digit`, ints in ``{-1, 0, 1}``
    or the characters ``F``, ``0``, ``T``, and rejects non-members with
    :class:`InvalidValueError`.
    """

    __slots__ = ("_digits", "_hash")

    def __init__(self, digits: Iterable):
        ds = tuple(Digit.coerce(d) for d in digits)
        reason = _membership_error(ds)
        if reason is not None:
            raise InvalidValueError(reason, ds)
        self._digits = ds
        self._hash = None

    @classmethod
    def _trusted(cls, digits: tuple) -> "TruthValue":
        obj = object.__new__(cls)
        obj._digits = digits
        obj._hash = None
        return obj

    @property
    def digits(self) -> tuple:
        return self._digits

    @property
    def is_classical(self) -> bool:
        return len(self._digits) == 1

    def __len__(self) -> int:
        return len(self._digits)

    def __iter__(self):
        return iter(self._digits)

    def __eq__(self, other):
        if isinstance(other, TruthValue):
            return self._digits == other._digits
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, TruthValue):
            return self._digits < other._digits
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._digits)
        return self._hash

    def __rshift__(self, other):
        if isinstance(other, TruthValue):
            return lex_combine(self, other)
        return NotImplemented

    def __invert__(self):
        return negate(self)

    def __str__(self) -> str:
        return "[" + ",".join(_DIGIT_CHARS[d] for d in self._digits) + "]"

    def __repr__(self) -> str:
        return f"TruthValue('{self}')"

    def __reduce__(self):
        return (TruthValue, (tuple(int(d) for d in self._digits),))


FALSE = TruthValue._trusted((Digit.F,))
TRUE = TruthValue._trusted((Digit.T,))


def lex_combine(u: TruthValue, v: TruthValue) -> TruthValue:
    """Lexicographic priority of ``u`` over ``v``.

    >>> lex_combine(TRUE, FALSE)
    TruthValue('[0,T,F]')
    """
    if u._digits == v._digits and len(u._digits) == 1:
        return u
    return TruthValue._trusted((Digit.ZERO,) + u._digits + v._digits)


_SWAP = {Digit.F: Digit.T, Digit.ZERO: Digit.ZERO, Digit.T: Digit.F}


def negate(v: TruthValue) -> TruthValue:
    """Swap F and T digit-wise; zeros are fixed."""
    return TruthValue._trusted(tuple(_SWAP[d] for d in v._digits))


def sign(v: TruthValue) -> Digit:
    """The leftmost non-zero digit: whether ``v`` is a degree of false or of true."""
    for d in v._digits:
        if d != Digit.ZERO:
            return d
    raise AssertionError("truth value without a non-zero digit")  # unreachable for members


def compare(u: TruthValue, v: TruthValue) -> int:
    """Three-way comparison: -1, 0 or 1."""
    a, b = u._digits, v._digits
    if a == b:
        return 0
    return -1 if a < b else 1


def vmin(u: TruthValue, v: TruthValue) -> TruthValue:
    return u if u._digits <= v._digits else v


def vmax(u: TruthValue, v: TruthValue) -> TruthValue:
    return u if u._digits >= v._digits else v


def validate(digits: Iterable) -> TruthValue:
    """Checked construction; raises :class:`InvalidValueError` with a reason."""
    return TruthValue(digits)


def decompose(v: TruthValue) -> tuple[TruthValue, TruthValue] | None:
    """Inverse of :func:`lex_combine`; None for the classical values."""
    ds = v._digits
    if len(ds) == 1:
        return None
    open_slots = 1
    i = 1
    while open_slots:
        open_slots += 1 if ds[i] == Digit.ZERO else -1
        i += 1
    return TruthValue._trusted(ds[1:i]), TruthValue._trusted(ds[i:])


def enumerate_values(depth: int) -> list[TruthValue]:
    """All values built with at most ``depth`` nested combinations, ascending.

    Depth 0 is ``[[F], [T]]``. Sizes grow as 2, 4, 16, 256, 65536.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    level = {FALSE, TRUE}
    for _ in range(depth):
        prev = list(level)
        level = {FALSE, TRUE}
        level.update(lex_combine(u, v) for u in prev for v in prev)
    return sorted(level)


_VALUE_RE = re.compile(r"^\s*\[(.*)\]\s*$", re.S)


def parse_value(text: str) -> TruthValue:
    """Parse the textual syntax ``[0,T,F]``. Bare ``T`` and ``F`` are accepted too."""
    s = text.strip()
    if s in ("T", "F"):
        return TRUE if s == "T" else FALSE
    m = _VALUE_RE.match(s)
    if not m:
        raise InvalidValueError(f"not a value literal: {text!r}")
    parts = m.group(1).split(",")
    if any(not p.strip() for p in parts):
        raise InvalidValueError(f"empty digit in value literal: {text!r}")
    return TruthValue(p.strip() for p in parts)
