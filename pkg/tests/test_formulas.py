"""Formula AST, parser, printer, substitution, pairing, evaluation."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sca.formulas import (
    And, Bot, Eq, Exists, Forall, Imp, Lt, MissingAssignment, Not, Or,
    Pair, ParseError, Proj0, Proj1, Succ, UnboundedQuantifier, Var, Zero,
    alpha_equal, all_names, cantor_fst, cantor_pair, cantor_snd,
    collapse_atom_negations, eval_bounded, eval_term, format_formula,
    free_vars, parse, substitute,
)
from tests.conftest import bounded_sentences, prenex, qfree


class TestParse:
    def test_exists_atom(self):
        assert parse("E x. (x = 0)") == Exists("x", Eq(Var("x"), Zero()))

    def test_bounded_forall_sugar(self):
        got = parse("A y < z. (y < z)")
        want = Forall("y", Imp(Lt(Var("y"), Var("z")), Lt(Var("y"), Var("z"))))
        assert got == want

    def test_negation_sugar(self):
        assert parse("~ (x = 0)") == Imp(Eq(Var("x"), Zero()), Bot())

    def test_iff_sugar(self):
        f = parse("(x = 0) <-> (x < y)")
        a, b = Eq(Var("x"), Zero()), Lt(Var("x"), Var("y"))
        assert f == And(Imp(a, b), Imp(b, a))

    def test_imp_right_assoc(self):
        assert parse("bot -> bot -> bot") == Imp(Bot(), Imp(Bot(), Bot()))

    def test_precedence(self):
        f = parse("~ x = 0 /\\ bot \\/ x < y")
        assert f == Or(And(Not(Eq(Var("x"), Zero())), Bot()), Lt(Var("x"), Var("y")))

    def test_syntax_error(self):
        with pytest.raises(ParseError):
            parse("E x. (x =")

    def test_free_variables_are_legal(self):
        assert free_vars(parse("x = y")) == frozenset({"x", "y"})


class TestPrint:
    def test_negation_resugars(self):
        assert format_formula(Imp(Eq(Var("x"), Zero()), Bot())) == "~(x = 0)"

    def test_bounded_exists_resugars(self):
        f = Exists("x", And(Lt(Var("x"), Var("t")), Eq(Var("x"), Zero())))
        assert format_formula(f) == "E x < t. x = 0"

    def test_bot(self):
        assert format_formula(Bot()) == "bot"

    @given(prenex())
    @settings(max_examples=200)
    def test_roundtrip_prenex(self, f):
        assert alpha_equal(parse(format_formula(f)), f)

    @given(bounded_sentences())
    @settings(max_examples=100)
    def test_roundtrip_bounded(self, f):
        assert alpha_equal(parse(format_formula(f)), f)


class TestSubstitute:
    def test_simple(self):
        got = substitute(Eq(Var("x"), Zero()), "x", Succ(Zero()))
        assert got == Eq(Succ(Zero()), Zero())

    def test_capture_avoidance(self):
        f = Exists("x", Eq(Var("x"), Var("y")))
        got = substitute(f, "y", Var("x"))
        assert isinstance(got, Exists) and got.var != "x"
        assert got.body == Eq(Var(got.var), Var("x"))

    def test_bound_occurrence_untouched(self):
        f = Forall("x", Eq(Var("x"), Zero()))
        assert substitute(f, "x", Succ(Zero())) == f

    @given(qfree(), st.sampled_from("xyzw"))
    @settings(max_examples=100)
    def test_free_vars_bound(self, f, v):
        got = substitute(f, v, Zero())
        assert free_vars(got) <= (free_vars(f) - {v})

    @given(prenex(), st.sampled_from("xyzw"))
    @settings(max_examples=100)
    def test_idempotent_when_var_gone(self, f, v):
        once = substitute(f, v, Zero())
        assert substitute(once, v, Zero()) == once


class TestCollapseAtomNegations:
    def test_double_negated_atom(self):
        assert collapse_atom_negations(parse("~~(x = 0)")) == parse("x = 0")

    def test_triple_negation(self):
        assert collapse_atom_negations(parse("~~~(x = 0)")) == parse("~(x = 0)")

    def test_quantified_body_not_an_atom(self):
        f = parse("~(A x. x = 0)")
        assert collapse_atom_negations(f) == f

    @given(qfree())
    @settings(max_examples=100)
    def test_idempotent(self, f):
        once = collapse_atom_negations(f)
        assert collapse_atom_negations(once) == once

    @given(bounded_sentences())
    @settings(max_examples=60)
    def test_preserves_bounded_truth(self, f):
        assert eval_bounded(collapse_atom_negations(f), {}) == eval_bounded(f, {})


class TestPairing:
    def test_bijection_small(self):
        for a in range(0, 201, 7):
            for b in range(0, 201, 11):
                n = cantor_pair(a, b)
                assert cantor_fst(n) == a and cantor_snd(n) == b
        for n in range(201):
            assert cantor_pair(cantor_fst(n), cantor_snd(n)) == n

    def test_eval_pair_terms(self):
        t = Pair(Var("x"), Var("y"))
        n = eval_term(t, {"x": 2, "y": 3})
        assert n == cantor_pair(2, 3)
        assert eval_term(Proj0(t), {"x": 2, "y": 3}) == 2
        assert eval_term(Proj1(t), {"x": 2, "y": 3}) == 3


class TestEvalBounded:
    def test_bounded_tautology(self):
        assert eval_bounded(parse("A x < S(S(0)). (x < S(S(0)))"), {})

    def test_bounded_exists_false(self):
        assert not eval_bounded(parse("E x < z. (x = y)"), {"z": 3, "y": 5})

    def test_pair_projection(self):
        assert eval_bounded(parse("p0(pair(x, y)) = x"), {"x": 2, "y": 3})

    def test_unbounded_quantifier_rejected(self):
        with pytest.raises(UnboundedQuantifier):
            eval_bounded(parse("A x. (x = 0)"), {})

    def test_missing_assignment(self):
        with pytest.raises(MissingAssignment):
            eval_bounded(parse("x = 0"), {})


class TestAlphaEqual:
    def test_renamed_bound_variable(self):
        assert alpha_equal(parse("E x. (x = y)"), parse("E z. (z = y)"))

    def test_different_free_variable(self):
        assert not alpha_equal(parse("E x. (x = y)"), parse("E x. (x = z)"))

    def test_all_names_superset_of_free(self):
        f = parse("E x. (x = y)")
        assert free_vars(f) <= all_names(f)
