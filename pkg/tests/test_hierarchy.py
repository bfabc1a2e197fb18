"""Hierarchy classification, the inclusion lattice, block merging, and
theory-relative classification."""

from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings

from sca.formulas import cantor_pair, eval_bounded, parse
from sca.hierarchy import (
    HClass, NotPrenex, class_lit_subset, class_subset, classify_prenex,
    format_class_literal, parse_class_literal, prenex_merge,
    relative_classify,
)
from tests.conftest import prenex, qfree

ALL_CLASSES = [HClass(p, k) for p in ("Sigma", "Pi") for k in range(7)]


class TestClassify:
    def test_quantifier_free(self):
        assert classify_prenex(parse("x = 0")) == HClass("Sigma", 0)

    def test_single_exists_block(self):
        assert classify_prenex(parse("E x. E y. (x < y)")) == HClass("Sigma", 1)

    def test_pi_two(self):
        assert classify_prenex(parse("A x. E y. (y = x + 0)")) == HClass("Pi", 2)

    def test_not_prenex(self):
        with pytest.raises(NotPrenex):
            classify_prenex(parse("(A x. x = 0) -> bot"))

    def test_pi0_canonicalizes_to_sigma0(self):
        assert classify_prenex(parse("bot")).polarity == "Sigma"


class TestClassSubset:
    def test_sigma1_in_pi2(self):
        assert class_subset(HClass("Sigma", 1), HClass("Pi", 2))

    def test_pi2_not_in_sigma1(self):
        assert not class_subset(HClass("Pi", 2), HClass("Sigma", 1))

    def test_level_zero_identified(self):
        assert class_subset(HClass("Sigma", 0), HClass("Pi", 0))
        assert class_subset(HClass("Pi", 0), HClass("Sigma", 0))

    def test_partial_order_by_exhaustion(self):
        for a in ALL_CLASSES:
            assert class_subset(a, a)
        for a, b, c in itertools.product(ALL_CLASSES, repeat=3):
            if class_subset(a, b) and class_subset(b, c):
                assert class_subset(a, c)
            if class_subset(a, b) and class_subset(b, a):
                assert a.level == b.level == 0 or a == b

    def test_strict_inclusions_up(self):
        for k in range(5):
            for p in ("Sigma", "Pi"):
                a = HClass(p, k)
                assert class_subset(a, HClass("Sigma", k + 1))
                assert class_subset(a, HClass("Pi", k + 1))

    def test_no_cross_inclusion_same_level(self):
        assert not class_subset(HClass("Sigma", 2), HClass("Pi", 2))
        assert not class_subset(HClass("Pi", 2), HClass("Sigma", 2))


class TestPrenexMerge:
    def test_merges_exists_pair(self):
        f = parse("E x. E y. A z. (z < x + y)")
        m = prenex_merge(f)
        assert m == parse("E u. A z. (z < p0(u) + p1(u))")

    def test_singleton_blocks_unchanged(self):
        f = parse("A x. (x = 0)")
        assert prenex_merge(f) == f

    def test_merge_sound_on_bounded_samples(self):
        # Bounding x, y by b and the pair variable by pair(b-1, b-1) + 1
        # makes the merged form at least as strong as the original, so
        # truth must transfer left to right on every sample.
        before = parse("E x < b. E y < b. A z < c. (z < x + y)")
        after = parse("E u < m. A z < c. (z < p0(u) + p1(u))")
        rng = random.Random(20260823)
        for _ in range(50):
            b, c = rng.randint(1, 6), rng.randint(1, 6)
            env = {"b": b, "c": c, "m": cantor_pair(b - 1, b - 1) + 1}
            if eval_bounded(before, env):
                assert eval_bounded(after, env)

    @given(prenex())
    @settings(max_examples=150)
    def test_preserves_classification(self, f):
        assert classify_prenex(prenex_merge(f)) == classify_prenex(f)

    @given(prenex())
    @settings(max_examples=150)
    def test_result_has_singleton_blocks(self, f):
        from sca.hierarchy import prenex_prefix
        prefix, _ = prenex_prefix(prenex_merge(f))
        for (a, _v), (b, _w) in zip(prefix, prefix[1:]):
            assert a != b


class TestRelativeClassify:
    def test_bounded_exists_before_pi1_over_ha(self):
        f = parse("E y < x. A z. (z = y)")
        assert relative_classify(f) == HClass("Sigma", 2)

    def test_bounded_exists_collapse_with_dml(self):
        f = parse("E y < x. A z. (z = y)")
        assert relative_classify(f, ["DML:S1", "DNE:S0"]) == HClass("Pi", 1)

    def test_negated_sigma_with_dne(self):
        f = parse("~ (E x. (x = y))")
        assert relative_classify(f, ["DNE:S0"]) == HClass("Pi", 1)

    def test_bounded_forall_collapse(self):
        f = parse("A y < x. E z. A v. (v = y + z)")
        assert relative_classify(f) == HClass("Pi", 3)
        assert relative_classify(f, ["DML:S1", "DNE:S0"]) == HClass("Sigma", 2)

    def test_bounded_quantifiers_absorb(self):
        assert relative_classify(parse("E y < x. E z. (z = y)")) == HClass("Sigma", 1)
        assert relative_classify(parse("A y < x. A z. (z = y)")) == HClass("Pi", 1)

    @given(prenex(max_prefix=3))
    @settings(max_examples=100)
    def test_monotone_in_theory(self, f):
        stronger = ["DML:S1", "DNE:S0", "DML:S2", "DNE:S1", "DNE:S2"]
        try:
            base = relative_classify(f)
        except Exception:
            return
        rel = relative_classify(f, stronger)
        assert rel.level <= base.level

    @given(qfree())
    @settings(max_examples=60)
    def test_quantifier_free_is_sigma0(self, f):
        assert relative_classify(f) == HClass("Sigma", 0)


class TestClassLiterals:
    def test_roundtrip(self):
        for text in ["S0", "P3", "D2", "nS2", "nnP1", "nD4"]:
            assert format_class_literal(parse_class_literal(text)) == text

    def test_subset_basics(self):
        assert class_lit_subset(parse_class_literal("S1"), parse_class_literal("P2"))
        assert not class_lit_subset(parse_class_literal("P2"), parse_class_literal("S1"))

    def test_negation_congruence(self):
        assert class_lit_subset(parse_class_literal("nS1"), parse_class_literal("nS2"))
        assert not class_lit_subset(parse_class_literal("nS1"), parse_class_literal("S2"))
