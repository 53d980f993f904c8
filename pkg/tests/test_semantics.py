import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lexilog import formula as fm
from lexilog.errors import BudgetExceededError, DataFormatError, UnboundAtomError
from lexilog.semantics import (
    Counterexample,
    Equivalent,
    counterexamples,
    enumerate_classical_assignments,
    equivalent,
    evaluate,
    format_assignment,
    parse_assignment,
    preferable,
    rank_models,
)
from lexilog.values import FALSE, TRUE, lex_combine, parse_value

V = parse_value
CAR = "electric >> (fast >> blue)"
I1 = {"electric": TRUE, "fast": TRUE, "blue": TRUE}
I2 = {"electric": TRUE, "fast": TRUE, "blue": FALSE}
I3 = {"electric": FALSE, "fast": TRUE, "blue": TRUE}
XOR_CAR = "(electric ^ diesel) >> (fast & !expensive)"
J1 = {"electric": TRUE, "diesel": FALSE, "fast": TRUE, "expensive": FALSE}
J2 = {"electric": FALSE, "diesel": TRUE, "fast": TRUE, "expensive": FALSE}

LAWS = [
    ("(a | b) >> c", "(a >> c) | (b >> c)"),
    ("a >> (b | c)", "(a >> b) | (a >> c)"),
    ("(a & b) >> c", "(a >> c) & (b >> c)"),
    ("a >> (b & c)", "(a >> b) & (a >> c)"),
    ("!(a >> b)", "!a >> !b"),
    ("!(!a)", "a"),
]


class TestEvaluate:
    @pytest.mark.parametrize("env, expected", [(I1, "[T]"), (I2, "[0,T,0,T,F]"), (I3, "[0,F,T]")])
    def test_car_example(self, env, expected):
        assert evaluate(CAR, env) == V(expected)

    @pytest.mark.parametrize("env", [J1, J2])
    def test_xor_example(self, env):
        assert evaluate(XOR_CAR, env) == TRUE

    def test_min_max_not(self):
        env = {"a": V("[0,T,F]"), "b": V("[0,F,T]")}
        assert evaluate("a & b", env) == V("[0,F,T]")
        assert evaluate("a | b", env) == V("[0,T,F]")
        assert evaluate("!a", env) == V("[0,F,T]")

    def test_const_leaves(self):
        assert evaluate("[0,F,T] >> T", {}) == V("[0,0,F,T,T]")

    def test_unbound(self):
        with pytest.raises(UnboundAtomError) as exc:
            evaluate("x & y", {"x": TRUE})
        assert exc.value.atom == "y"

    def test_extra_bindings_ignored(self):
        assert evaluate("x", {"x": FALSE, "q": TRUE}) == FALSE


class TestPreferable:
    def test_car(self):
        assert preferable(CAR, I1, I2) == 1
        assert preferable(CAR, I3, I2) == -1
        assert preferable(CAR, I2, I2) == 0


class TestClassicalAssignments:
    def test_single(self):
        assert enumerate_classical_assignments(["x"]) == [{"x": FALSE}, {"x": TRUE}]

    def test_table_order(self):
        rows = enumerate_classical_assignments(["x", "y", "z"])
        assert [tuple(str(r[k]) for k in "xyz") for r in rows] == [
            tuple(f"[{c}]" for c in combo) for combo in itertools.product("FT", repeat=3)
        ]

    def test_count(self):
        assert len(enumerate_classical_assignments("abcd")) == 16

    def test_limit(self):
        with pytest.raises(BudgetExceededError):
            enumerate_classical_assignments([f"a{k}" for k in range(21)])


class TestRankModels:
    def test_car(self):
        ranked = rank_models(CAR, [I3, I1, I2])
        assert [m.assignment for m in ranked] == [I1, I2, I3]
        assert [m.rank for m in ranked] == [1, 2, 3]
        assert [m.index for m in ranked] == [1, 2, 0]
        assert ranked[2].score == Fraction(-2, 9)

    def test_empty(self):
        assert rank_models(CAR, []) == []

    def test_ties_share_rank(self):
        ranked = rank_models(XOR_CAR, [J1, J2])
        assert [m.rank for m in ranked] == [1, 1]
        assert [m.assignment for m in ranked] == [J1, J2]

    def test_competition_ranking(self):
        cands = [{"x": TRUE}, {"x": FALSE}, {"x": TRUE}, {"x": FALSE}]
        ranked = rank_models("x", cands)
        assert [m.rank for m in ranked] == [1, 1, 3, 3]
        assert [m.index for m in ranked] == [0, 2, 1, 3]

    @settings(max_examples=50)
    @given(st.lists(st.tuples(st.booleans(), st.booleans(), st.booleans()), max_size=12), st.randoms())
    def test_permutation_invariance(self, rows, rnd):
        cands = [dict(zip(("electric", "fast", "blue"), (TRUE if b else FALSE for b in r))) for r in rows]
        perm = list(cands)
        rnd.shuffle(perm)
        a = [(m.value, m.rank) for m in rank_models(CAR, cands)]
        b = [(m.value, m.rank) for m in rank_models(CAR, perm)]
        assert a == b


class TestEquivalent:
    def test_double_negation(self):
        v = equivalent("!(!p)", "p", 3)
        assert v == Equivalent(3)
        assert bool(v)
        assert str(v) == "equivalent (up to depth 3)"

    @pytest.mark.parametrize("lhs, rhs", LAWS)
    def test_laws_depth2(self, lhs, rhs):
        assert equivalent(lhs, rhs, 2)

    def test_non_associativity(self):
        first = equivalent("x >> (y >> z)", "(x >> y) >> z", 0)
        assert isinstance(first, Counterexample)
        assert not first
        # binary counting reaches (F,F,T) before the (T,F,F) row
        assert first.assignment == {"x": FALSE, "y": FALSE, "z": TRUE}
        assert (first.left, first.right) == (V("[0,F,0,F,T]"), V("[0,F,T]"))

        found = {
            tuple(str(v) for v in c.assignment.values()): (c.left, c.right)
            for c in counterexamples("x >> (y >> z)", "(x >> y) >> z", 0)
        }
        assert found[("[T]", "[F]", "[F]")] == (V("[0,T,F]"), V("[0,0,T,F,F]"))
        assert len(found) == 6

    def test_reflexive(self):
        assert equivalent("p", "p", 0)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            equivalent("a & b & c & d", "a", 3)
        with pytest.raises(BudgetExceededError):
            equivalent("a & b", "a", 2, budget=100)

    def test_counterexample_text(self):
        cex = equivalent("x", "!x", 0)
        assert str(cex) == "counterexample {x:[F]}: [F] vs [T]"

    def test_depth_zero_is_not_full_equivalence(self):
        # ``x & !x`` and ``F`` agree classically but not on [0,T,F]
        assert equivalent("x & !x", "F", 0)
        assert not equivalent("x & !x", "F", 1)


def _substitute(f, name, g):
    if isinstance(f, fm.Atom):
        return g if f.name == name else f
    if isinstance(f, fm.Const):
        return f
    if isinstance(f, fm.Not):
        return fm.Not(_substitute(f.child, name, g))
    return type(f)(_substitute(f.left, name, g), _substitute(f.right, name, g))


_ctx_leaves = st.sampled_from(["a", "b", "c", "hole"]).map(fm.Atom)
contexts = st.recursive(
    _ctx_leaves,
    lambda ch: st.one_of(
        ch.map(fm.Not),
        st.tuples(st.sampled_from([fm.And, fm.Or, fm.LexPrio]), ch, ch).map(lambda t: t[0](t[1], t[2])),
    ),
    max_leaves=6,
)


@settings(max_examples=25, deadline=None)
@given(contexts, st.sampled_from(LAWS))
def test_substitutivity(ctx, law):
    psi, psi2 = fm.parse(law[0]), fm.parse(law[1])
    assert equivalent(psi, psi2, 2)
    assert equivalent(_substitute(ctx, "hole", psi), _substitute(ctx, "hole", psi2), 2)


class TestDerivedOperators:
    @pytest.mark.parametrize(
        "op, table",
        [
            ("x &> y", {"FF": "[F]", "FT": "[F]", "TF": "[0,T,F]", "TT": "[T]"}),
            ("x |> y", {"FF": "[F]", "FT": "[0,T,F]", "TF": "[T]", "TT": "[T]"}),
        ],
    )
    def test_truth_tables(self, op, table):
        for env in enumerate_classical_assignments("xy"):
            key = str(env["x"])[1] + str(env["y"])[1]
            assert evaluate(op, env) == V(table[key])
        assert V("[0,T,F]") == lex_combine(TRUE, FALSE)

    @pytest.mark.parametrize(
        "lhs, rhs",
        [
            ("x &> (x & y)", "x &> y"),
            ("x |> (x | y)", "x |> y"),
            ("x |> y", "(x | y) &> x"),
            ("x &> y", "(x & y) |> x"),
        ],
    )
    def test_identities_depth3(self, lhs, rhs):
        assert equivalent(lhs, rhs, 3)


class TestAssignmentText:
    def test_inline(self):
        env = parse_assignment("{electric:[T], fast:[0,T,F]}")
        assert env == {"electric": TRUE, "fast": V("[0,T,F]")}

    def test_lines(self):
        env = parse_assignment("# comment\nelectric = [T]\n\nfast=F  # trailing\n")
        assert env == {"electric": TRUE, "fast": FALSE}

    def test_empty(self):
        assert parse_assignment("{}") == {}
        assert parse_assignment("") == {}

    @pytest.mark.parametrize("text", ["{a:[0,T,T]}", "{a}", "a = [T]\na = [F]", "{1a:[T]}"])
    def test_malformed(self, text):
        with pytest.raises(DataFormatError):
            parse_assignment(text)

    def test_round_trip(self):
        env = {"x": TRUE, "y": V("[0,F,T]")}
        assert format_assignment(env) == "{x:[T], y:[0,F,T]}"
        assert parse_assignment(format_assignment(env)) == env
