"""Quantifier-alternation classification of prenex formulas, the class
inclusion lattice, pairing-based block merging, and theory-relative
classification of bounded quantifiers and negations.

Class literal text syntax (shared with the rule base and CLI):
"S<k>" / "P<k>" / "D<k>" for the existential-leading, universal-leading,
and equivalence-premise classes at level k, optionally prefixed by "n"
(negated) or "nn" (doubly negated), e.g. "nS2", "nnP1".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .formulas import (
    Add, And, Bot, Eq, Exists, Forall, Formula, Imp, Lt, Or, Proj0, Proj1,
    Term, Var, all_names, format_formula, fresh_name, is_negation, negand,
    substitute, term_vars,
)

__all__ = [
    "HClass", "ClassLit", "NotPrenex", "Unclassifiable",
    "classify_prenex", "class_subset", "prenex_merge", "relative_classify",
    "prenex_prefix", "parse_class_literal", "format_class_literal",
    "class_lit_subset",
]

SIGMA = "Sigma"
PI = "Pi"


class NotPrenex(ValueError):
    """The formula has a quantifier under a connective."""

    def __init__(self, sub: Formula):
        super().__init__(f"not prenex: {format_formula(sub)}")
        self.sub = sub


class Unclassifiable(ValueError):
    """No classification rule applies; carries the blocking subformula."""

    def __init__(self, sub: Formula):
        super().__init__(f"unclassifiable subformula: {format_formula(sub)}")
        self.sub = sub


@dataclass(frozen=True, slots=True)
class HClass:
    """A position in the arithmetical hierarchy: Sigma(k) or Pi(k).

    Sigma(0) and Pi(0) both denote the quantifier-free class; Sigma(0) is
    the canonical form.
    """

    polarity: str
    level: int

    def canonical(self) -> "HClass":
        if self.level == 0:
            return HClass(SIGMA, 0)
        return self

    def __str__(self) -> str:
        return f"{self.polarity} {self.level}"


def _check_quantifier_free(f: Formula) -> None:
    if isinstance(f, (Eq, Lt, Bot)):
        return
    if isinstance(f, (And, Or, Imp)):
        _check_quantifier_free(f.f1)
        _check_quantifier_free(f.f2)
        return
    raise NotPrenex(f)


def prenex_prefix(f: Formula) -> tuple[list[tuple[str, str]], Formula]:
    """Split a prenex formula into its quantifier prefix and matrix.

    Prefix entries are ("E"|"A", variable); raises NotPrenex if the matrix
    contains a quantifier.
    """
    prefix: list[tuple[str, str]] = []
    while isinstance(f, (Exists, Forall)):
        prefix.append(("E" if isinstance(f, Exists) else "A", f.var))
        f = f.body
    _check_quantifier_free(f)
    return prefix, f


def classify_prenex(f: Formula) -> HClass:
    """Exact class of a prenex formula: count alternating quantifier
    blocks; a leading E-block gives Sigma, a leading A-block Pi."""
    prefix, _ = prenex_prefix(f)
    blocks = 0
    last = None
    for kind, _v in prefix:
        if kind != last:
            blocks += 1
            last = kind
    if blocks == 0:
        return HClass(SIGMA, 0)
    lead = prefix[0][0]
    return HClass(SIGMA if lead == "E" else PI, blocks)


def class_subset(a: HClass, b: HClass) -> bool:
    """The inclusion lattice: reflexivity, Sigma(0)=Pi(0), and every
    level-k class inside both level-(k+1) classes, transitively closed."""
    a = a.canonical()
    b = b.canonical()
    return a == b or a.level < b.level


def prenex_merge(f: Formula) -> Formula:
    """Contract every quantifier block to length 1 by merging adjacent
    same-polarity quantifiers into one quantifier over a pair variable,
    projecting with p0/p1 in the matrix."""
    prefix, matrix = prenex_prefix(f)
    # An outer duplicate of an inner binder binds nothing; rename it so the
    # prefix variables are pairwise distinct.
    seen: set[str] = set(all_names(matrix))
    for i in range(len(prefix) - 1, -1, -1):
        kind, v = prefix[i]
        if v in {w for _, w in prefix[i + 1:]}:
            prefix[i] = (kind, fresh_name(v, seen | {w for _, w in prefix}))
        seen.add(prefix[i][1])
    while True:
        for i in range(len(prefix) - 1):
            if prefix[i][0] == prefix[i + 1][0]:
                break
        else:
            break
        kind, x = prefix[i]
        _, y = prefix[i + 1]
        avoid = all_names(matrix) | {w for _, w in prefix}
        u = fresh_name("u", avoid)
        matrix = substitute(matrix, x, Proj0(Var(u)))
        matrix = substitute(matrix, y, Proj1(Var(u)))
        prefix[i: i + 2] = [(kind, u)]
    out = matrix
    for kind, v in reversed(prefix):
        out = Exists(v, out) if kind == "E" else Forall(v, out)
    return out


# ---------------------------------------------------------------------------
# Class literals

_CLASS_RE = re.compile(r"^(nn|n)?([SPD])(\d+)$")


@dataclass(frozen=True, slots=True)
class ClassLit:
    """Ground class literal: negation depth 0-2, kind S/P/D, level."""

    neg: int
    kind: str
    level: int

    def canonical(self) -> "ClassLit":
        if self.kind == "P" and self.level == 0:
            return ClassLit(self.neg, "S", 0)
        return self


def parse_class_literal(text: str) -> ClassLit:
    m = _CLASS_RE.match(text)
    if not m:
        raise ValueError(f"bad class literal: {text!r}")
    prefix, kind, level = m.groups()
    neg = 0 if prefix is None else len(prefix)
    return ClassLit(neg, kind, int(level))


def format_class_literal(c: ClassLit) -> str:
    return "n" * c.neg + c.kind + str(c.level)


def class_lit_subset(a: ClassLit, b: ClassLit) -> bool:
    """Ground inclusion lattice extended with the premise classes D<k>
    (between level k-1 and level k) and negation congruence."""
    a = a.canonical()
    b = b.canonical()
    if a.neg != b.neg:
        return False
    if a == b:
        return True
    if a.level < b.level:
        return True
    if a.level == b.level and a.kind == "D" and b.kind in ("S", "P"):
        return True
    return False


# ---------------------------------------------------------------------------
# Theory-relative classification

def _bounded(f: Formula) -> tuple[str, str, Term, Formula] | None:
    """Match bounded-quantifier sugar, returning (kind, var, bound, body)."""
    if isinstance(f, Exists) and isinstance(f.body, And):
        g = f.body.f1
        if isinstance(g, Lt) and g.t1 == Var(f.var) and f.var not in term_vars(g.t2):
            return "E", f.var, g.t2, f.body.f2
    if isinstance(f, Forall) and isinstance(f.body, Imp):
        g = f.body.f1
        if isinstance(g, Lt) and g.t1 == Var(f.var) and f.var not in term_vars(g.t2):
            return "A", f.var, g.t2, f.body.f2
    return None


def relative_classify(f: Formula, theory: Iterable[str] = ()) -> HClass:
    """Best class of a formula built from a prenex core with bounded
    quantifiers and negations, relative to a theory given as a set of
    ground principle-node strings (e.g. {"DML:S1", "DNE:S0"}).

    The theory is used literally; close it under derivability first if
    subsumed principles should count.
    """
    t = frozenset(theory)

    def go(g: Formula) -> HClass:
        try:
            return classify_prenex(g)
        except NotPrenex:
            pass
        b = _bounded(g)
        if b is not None:
            kind, _v, _bound, body = b
            c = go(body).canonical()
            k = c.level
            if kind == "E":
                if c.polarity == SIGMA:
                    return HClass(SIGMA, max(k, 1))
                if f"DML:S{k}" in t and f"DNE:S{k - 1}" in t:
                    return HClass(PI, k)
                return HClass(SIGMA, k + 1)
            if c.polarity == PI and k >= 1:
                return HClass(PI, k)
            if k == 0:
                return HClass(PI, 1)
            if k >= 2 and f"DML:S{k - 1}" in t and f"DNE:S{k - 2}" in t:
                return HClass(SIGMA, k)
            if k == 1 and f"DML:S0" in t:
                return HClass(SIGMA, k)
            return HClass(PI, k + 1)
        if is_negation(g):
            c = go(negand(g)).canonical()
            k = c.level
            if k == 0:
                return HClass(SIGMA, 0)
            if c.polarity == SIGMA and f"DNE:S{k - 1}" in t:
                return HClass(PI, k)
            if c.polarity == PI and f"DNE:S{k}" in t:
                return HClass(SIGMA, k)
            raise Unclassifiable(g)
        if isinstance(g, Exists):
            c = go(g.body).canonical()
            if c.polarity == SIGMA:
                return HClass(SIGMA, max(c.level, 1))
            return HClass(SIGMA, c.level + 1)
        if isinstance(g, Forall):
            c = go(g.body).canonical()
            if c.polarity == PI and c.level >= 1:
                return HClass(PI, c.level)
            return HClass(PI, c.level + 1)
        raise Unclassifiable(g)

    return go(f)
