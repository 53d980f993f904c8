from fractions import Fraction

import pytest
from hypothesis import strategies as st

from lexilog import formula as fm
from lexilog.values import FALSE, TRUE, enumerate_values

ATOM_NAMES = ["a", "b", "c", "x", "y", "z", "electric", "fast"]


# -- independent oracles ---------------------------------------------------------

def brute_force_values(depth):
    """Apply the inductive definition to plain string lists, no library code.

    Enumerates every combination tree of height <= depth with F/T leaves and
    evaluates it with the textbook rule, then deduplicates.
    """
    def combine(u, v):
        if u == v and u in (("F",), ("T",)):
            return u
        return ("0",) + u + v

    trees = {("F",), ("T",)}
    for _ in range(depth):
        trees = {("F",), ("T",)} | {combine(u, v) for u in trees for v in trees}
    return trees


def direct_val(chars):
    """Balanced-ternary value summed term by term."""
    weight = {"F": -1, "0": 0, "T": 1}
    return sum((Fraction(weight[c], 3**i) for i, c in enumerate(chars)), Fraction(0))


def chars_of(v):
    return tuple(str(v)[1:-1].split(","))


# -- shared fixtures -----------------------------------------------------------

@pytest.fixture(scope="session")
def values3():
    return enumerate_values(3)


@pytest.fixture(scope="session")
def values2():
    return enumerate_values(2)


# -- hypothesis strategies -------------------------------------------------------

def truth_values(depth=3):
    return st.sampled_from(enumerate_values(depth))


_LEAVES = st.one_of(
    st.sampled_from(ATOM_NAMES).map(fm.Atom),
    st.sampled_from([FALSE, TRUE] + enumerate_values(1)).map(fm.Const),
)
_BINARY = [fm.And, fm.Or, fm.LexPrio, fm.IfPossible, fm.OrAtLeast, fm.Xor]
_CORE_BINARY = [fm.And, fm.Or, fm.LexPrio]


def _extend(children, kinds):
    return st.one_of(
        children.map(fm.Not),
        st.tuples(st.sampled_from(kinds), children, children).map(lambda t: t[0](t[1], t[2])),
    )


def formulas(max_leaves=24, core=False):
    kinds = _CORE_BINARY if core else _BINARY
    return st.recursive(_LEAVES, lambda ch: _extend(ch, kinds), max_leaves=max_leaves)


def depth_of(f):
    if isinstance(f, fm.Not):
        return 1 + depth_of(f.child)
    if isinstance(f, fm.Binary):
        return 1 + max(depth_of(f.left), depth_of(f.right))
    return 0


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        title, ok, detail = RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {title}: {detail}")
