"""Decision procedure for intuitionistic propositional logic in a
contraction-free sequent calculus, with replayable derivation traces, a
classical truth-table checker, propositional skeleton extraction for
first-order formulas, and hybrid verification of rule-base implications.

The left-implication rule is split four ways on the shape of the
antecedent (atomic / conjunctive / disjunctive / nested implication),
which makes proof search terminate without a loop check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Union

from . import formulas as fo
from .formulas import Formula

__all__ = [
    "PropFormula", "PAtom", "PBot", "PAnd", "POr", "PImp", "PNot",
    "Sequent", "Trace", "ProofResult",
    "parse_prop", "format_prop", "prop_atoms",
    "prove_ipc", "prove_classical", "validate_trace",
    "skeletonize", "SkeletonTable", "MalformedSkeleton",
    "verify_rule", "VERIFIED", "FAILED", "NEEDS_FIRST_ORDER",
]


# ---------------------------------------------------------------------------
# Propositional formulas

@dataclass(frozen=True, slots=True)
class PAtom:
    name: str


@dataclass(frozen=True, slots=True)
class PBot:
    pass


@dataclass(frozen=True, slots=True)
class PAnd:
    f1: "PropFormula"
    f2: "PropFormula"


@dataclass(frozen=True, slots=True)
class POr:
    f1: "PropFormula"
    f2: "PropFormula"


@dataclass(frozen=True, slots=True)
class PImp:
    f1: "PropFormula"
    f2: "PropFormula"


PropFormula = Union[PAtom, PBot, PAnd, POr, PImp]


def PNot(f: PropFormula) -> PropFormula:
    return PImp(f, PBot())


class _PropParser:
    """Same connective grammar as the first-order language, minus
    quantifiers; atoms are identifiers."""

    def __init__(self, src: str):
        self.toks = fo._tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def eat(self, text: str) -> bool:
        if self.peek()[1] == text:
            self.i += 1
            return True
        return False

    def formula(self) -> PropFormula:
        f = self.imp()
        while self.eat("<->"):
            g = self.imp()
            f = PAnd(PImp(f, g), PImp(g, f))
        return f

    def imp(self) -> PropFormula:
        f = self.disj()
        if self.eat("->"):
            return PImp(f, self.imp())
        return f

    def disj(self) -> PropFormula:
        f = self.conj()
        while self.eat("\\/"):
            f = POr(f, self.conj())
        return f

    def conj(self) -> PropFormula:
        f = self.unary()
        while self.eat("/\\"):
            f = PAnd(f, self.unary())
        return f

    def unary(self) -> PropFormula:
        kind, tok, pos = self.peek()
        if tok == "~":
            self.next()
            return PNot(self.unary())
        if tok == "(":
            self.next()
            f = self.formula()
            k, t, p = self.next()
            if t != ")":
                raise fo.ParseError("expected ')'", p)
            return f
        if tok == "bot":
            self.next()
            return PBot()
        if kind == "ident":
            self.next()
            return PAtom(tok)
        raise fo.ParseError(f"expected a propositional formula, found {tok or 'end of input'!r}", pos)


def parse_prop(src: str) -> PropFormula:
    p = _PropParser(src)
    f = p.formula()
    kind, tok, pos = p.peek()
    if kind != "eof":
        raise fo.ParseError(f"trailing input {tok!r}", pos)
    return f


def format_prop(f: PropFormula, prec: int = 0) -> str:
    if isinstance(f, PAtom):
        return f.name
    if isinstance(f, PBot):
        return "bot"
    if isinstance(f, PImp) and isinstance(f.f2, PBot):
        g = f.f1
        if isinstance(g, (PAtom, PBot)) or (isinstance(g, PImp) and isinstance(g.f2, PBot)):
            return f"~{format_prop(g, 4)}"
        return f"~({format_prop(g)})"
    if isinstance(f, PImp):
        s = f"{format_prop(f.f1, 2)} -> {format_prop(f.f2, 1)}"
        return f"({s})" if prec > 1 else s
    if isinstance(f, POr):
        s = f"{format_prop(f.f1, 2)} \\/ {format_prop(f.f2, 3)}"
        return f"({s})" if prec > 2 else s
    s = f"{format_prop(f.f1, 3)} /\\ {format_prop(f.f2, 4)}"
    return f"({s})" if prec > 3 else s


def prop_atoms(f: PropFormula) -> frozenset[str]:
    if isinstance(f, PAtom):
        return frozenset((f.name,))
    if isinstance(f, PBot):
        return frozenset()
    return prop_atoms(f.f1) | prop_atoms(f.f2)


# ---------------------------------------------------------------------------
# Sequents and traces

@dataclass(frozen=True, slots=True)
class Sequent:
    hypotheses: frozenset
    goal: PropFormula

    def __str__(self) -> str:
        hs = ", ".join(sorted(format_prop(h) for h in self.hypotheses))
        return f"{hs} |- {format_prop(self.goal)}" if hs else f"|- {format_prop(self.goal)}"


@dataclass(frozen=True, slots=True)
class Trace:
    rule: str
    sequent: Sequent
    principal: PropFormula | None
    children: tuple["Trace", ...]


@dataclass(frozen=True, slots=True)
class ProofResult:
    provable: bool
    trace: Trace | None


# ---------------------------------------------------------------------------
# The decision procedure

def prove_ipc(s: Sequent | PropFormula) -> ProofResult:
    """Decide a sequent (a bare formula means empty hypotheses).

    Returns Provable with a derivation trace replayable by
    validate_trace, or Unprovable (trace None).  Total: terminates on
    every input without a loop check.
    """
    if not isinstance(s, Sequent):
        s = Sequent(frozenset(), s)
    cache: dict[Sequent, Trace | None] = {}
    tr = _search(s.hypotheses, s.goal, cache)
    return ProofResult(tr is not None, tr)


def _search(hyps: frozenset, goal: PropFormula,
            cache: dict[Sequent, "Trace | None"]) -> "Trace | None":
    seq = Sequent(hyps, goal)
    if seq in cache:
        return cache[seq]
    tr = _step(hyps, goal, cache)
    cache[seq] = tr
    return tr


def _step(hyps: frozenset, goal: PropFormula, cache) -> "Trace | None":
    seq = Sequent(hyps, goal)

    if any(isinstance(h, PBot) for h in hyps):
        return Trace("L-bot", seq, PBot(), ())
    if isinstance(goal, PAtom) and goal in hyps:
        return Trace("axiom", seq, goal, ())

    # invertible left rules
    for h in hyps:
        if isinstance(h, PAnd):
            sub = _search(hyps - {h} | {h.f1, h.f2}, goal, cache)
            return Trace("L-and", seq, h, (sub,)) if sub else None
        if isinstance(h, POr):
            s1 = _search(hyps - {h} | {h.f1}, goal, cache)
            if s1 is None:
                return None
            s2 = _search(hyps - {h} | {h.f2}, goal, cache)
            return Trace("L-or", seq, h, (s1, s2)) if s2 else None
        if isinstance(h, PImp):
            a = h.f1
            if isinstance(a, PBot):
                sub = _search(hyps - {h}, goal, cache)
                return Trace("L-imp-bot", seq, h, (sub,)) if sub else None
            if isinstance(a, PAtom) and a in hyps:
                sub = _search(hyps - {h} | {h.f2}, goal, cache)
                return Trace("L-imp-atom", seq, h, (sub,)) if sub else None
            if isinstance(a, PAnd):
                sub = _search(hyps - {h} | {PImp(a.f1, PImp(a.f2, h.f2))}, goal, cache)
                return Trace("L-imp-and", seq, h, (sub,)) if sub else None
            if isinstance(a, POr):
                sub = _search(hyps - {h} | {PImp(a.f1, h.f2), PImp(a.f2, h.f2)}, goal, cache)
                return Trace("L-imp-or", seq, h, (sub,)) if sub else None

    # invertible right rules
    if isinstance(goal, PAnd):
        s1 = _search(hyps, goal.f1, cache)
        if s1 is None:
            return None
        s2 = _search(hyps, goal.f2, cache)
        return Trace("R-and", seq, None, (s1, s2)) if s2 else None
    if isinstance(goal, PImp):
        sub = _search(hyps | {goal.f1}, goal.f2, cache)
        return Trace("R-imp", seq, None, (sub,)) if sub else None

    # choice points
    if isinstance(goal, POr):
        s1 = _search(hyps, goal.f1, cache)
        if s1 is not None:
            return Trace("R-or-1", seq, None, (s1,))
        s2 = _search(hyps, goal.f2, cache)
        if s2 is not None:
            return Trace("R-or-2", seq, None, (s2,))
    for h in sorted((h for h in hyps if isinstance(h, PImp) and isinstance(h.f1, PImp)),
                    key=format_prop):
        c, d = h.f1.f1, h.f1.f2
        s1 = _search(hyps - {h} | {PImp(d, h.f2)}, h.f1, cache)
        if s1 is None:
            continue
        s2 = _search(hyps - {h} | {h.f2}, goal, cache)
        if s2 is not None:
            return Trace("L-imp-imp", seq, h, (s1, s2))
    return None


def validate_trace(tr: Trace) -> bool:
    """Replay a derivation rule by rule, independently of the search."""
    seq = tr.sequent
    hyps, goal = seq.hypotheses, seq.goal
    kids = tuple(k.sequent for k in tr.children)
    p = tr.principal
    ok = False
    if tr.rule == "L-bot":
        ok = any(isinstance(h, PBot) for h in hyps) and not kids
    elif tr.rule == "axiom":
        ok = isinstance(goal, PAtom) and goal in hyps and not kids
    elif tr.rule == "L-and":
        ok = (isinstance(p, PAnd) and p in hyps and len(kids) == 1
              and kids[0] == Sequent(hyps - {p} | {p.f1, p.f2}, goal))
    elif tr.rule == "L-or":
        ok = (isinstance(p, POr) and p in hyps and len(kids) == 2
              and kids[0] == Sequent(hyps - {p} | {p.f1}, goal)
              and kids[1] == Sequent(hyps - {p} | {p.f2}, goal))
    elif tr.rule == "L-imp-bot":
        ok = (isinstance(p, PImp) and isinstance(p.f1, PBot) and p in hyps
              and len(kids) == 1 and kids[0] == Sequent(hyps - {p}, goal))
    elif tr.rule == "L-imp-atom":
        ok = (isinstance(p, PImp) and isinstance(p.f1, PAtom) and p in hyps
              and p.f1 in hyps and len(kids) == 1
              and kids[0] == Sequent(hyps - {p} | {p.f2}, goal))
    elif tr.rule == "L-imp-and":
        ok = (isinstance(p, PImp) and isinstance(p.f1, PAnd) and p in hyps
              and len(kids) == 1
              and kids[0] == Sequent(
                  hyps - {p} | {PImp(p.f1.f1, PImp(p.f1.f2, p.f2))}, goal))
    elif tr.rule == "L-imp-or":
        ok = (isinstance(p, PImp) and isinstance(p.f1, POr) and p in hyps
              and len(kids) == 1
              and kids[0] == Sequent(
                  hyps - {p} | {PImp(p.f1.f1, p.f2), PImp(p.f1.f2, p.f2)}, goal))
    elif tr.rule == "L-imp-imp":
        ok = (isinstance(p, PImp) and isinstance(p.f1, PImp) and p in hyps
              and len(kids) == 2
              and kids[0] == Sequent(hyps - {p} | {PImp(p.f1.f2, p.f2)}, p.f1)
              and kids[1] == Sequent(hyps - {p} | {p.f2}, goal))
    elif tr.rule == "R-and":
        ok = (isinstance(goal, PAnd) and len(kids) == 2
              and kids[0] == Sequent(hyps, goal.f1)
              and kids[1] == Sequent(hyps, goal.f2))
    elif tr.rule == "R-imp":
        ok = (isinstance(goal, PImp) and len(kids) == 1
              and kids[0] == Sequent(hyps | {goal.f1}, goal.f2))
    elif tr.rule == "R-or-1":
        ok = (isinstance(goal, POr) and len(kids) == 1
              and kids[0] == Sequent(hyps, goal.f1))
    elif tr.rule == "R-or-2":
        ok = (isinstance(goal, POr) and len(kids) == 1
              and kids[0] == Sequent(hyps, goal.f2))
    return ok and all(validate_trace(k) for k in tr.children)


# ---------------------------------------------------------------------------
# Classical oracle

def _eval_prop(f: PropFormula, env: Mapping[str, bool]) -> bool:
    if isinstance(f, PAtom):
        return env[f.name]
    if isinstance(f, PBot):
        return False
    if isinstance(f, PAnd):
        return _eval_prop(f.f1, env) and _eval_prop(f.f2, env)
    if isinstance(f, POr):
        return _eval_prop(f.f1, env) or _eval_prop(f.f2, env)
    return (not _eval_prop(f.f1, env)) or _eval_prop(f.f2, env)


def prove_classical(f: PropFormula) -> bool:
    """Truth-table validity."""
    names = sorted(prop_atoms(f))
    return all(_eval_prop(f, dict(zip(names, vals)))
               for vals in itertools.product((False, True), repeat=len(names)))


# ---------------------------------------------------------------------------
# Skeleton extraction

class MalformedSkeleton(ValueError):
    pass


_ATOM_BUDGET = 12
_ATOM_NAMES = "abcdefghijkl"


def _alpha_normal(f: Formula, env: dict[str, str], depth: int) -> Formula:
    if isinstance(f, (fo.Eq, fo.Lt)):
        return type(f)(_alpha_normal_term(f.t1, env), _alpha_normal_term(f.t2, env))
    if isinstance(f, fo.Bot):
        return f
    if isinstance(f, (fo.And, fo.Or, fo.Imp)):
        return type(f)(_alpha_normal(f.f1, env, depth), _alpha_normal(f.f2, env, depth))
    env2 = dict(env)
    env2[f.var] = f"_b{depth}"
    return type(f)(env2[f.var], _alpha_normal(f.body, env2, depth + 1))


def _alpha_normal_term(t, env: dict[str, str]):
    if isinstance(t, fo.Var):
        return fo.Var(env.get(t.name, t.name))
    if isinstance(t, fo.Zero):
        return t
    if isinstance(t, (fo.Succ, fo.Proj0, fo.Proj1)):
        return type(t)(_alpha_normal_term(t.t, env))
    return type(t)(_alpha_normal_term(t.t1, env), _alpha_normal_term(t.t2, env))


class SkeletonTable:
    """Shared atom table so several formulas can be skeletonized jointly;
    alpha-equivalent subformulas map to the same atom."""

    def __init__(self) -> None:
        self._atoms: dict[Formula, str] = {}

    def _atom_for(self, f: Formula) -> PAtom:
        key = _alpha_normal(f, {}, 0)
        name = self._atoms.get(key)
        if name is None:
            if len(self._atoms) >= _ATOM_BUDGET:
                raise MalformedSkeleton(
                    f"skeleton needs more than {_ATOM_BUDGET} distinct atoms")
            name = _ATOM_NAMES[len(self._atoms)]
            self._atoms[key] = name
        return PAtom(name)

    def abstract(self, f: Formula) -> PropFormula:
        if isinstance(f, fo.Bot):
            return PBot()
        if isinstance(f, (fo.Eq, fo.Lt, fo.Exists, fo.Forall)):
            return self._atom_for(f)
        return {fo.And: PAnd, fo.Or: POr, fo.Imp: PImp}[type(f)](
            self.abstract(f.f1), self.abstract(f.f2))


def skeletonize(f: Formula) -> PropFormula:
    """Propositional skeleton: every maximal quantified subformula and
    every atomic formula becomes a propositional atom (bot is kept).

    If the skeleton is provable in intuitionistic propositional logic,
    the original formula is intuitionistically valid (uniform
    substitution).
    """
    return SkeletonTable().abstract(f)


# ---------------------------------------------------------------------------
# Rule verification

VERIFIED = "Verified"
FAILED = "Failed"
NEEDS_FIRST_ORDER = "NeedsFirstOrder"

# The only lemma shapes admitted as trusted hypotheses: the dual laws
# (dual implies negation; a formula and its dual are inconsistent; the
# double dual is equivalent to the formula) and an assumed class
# equivalence premise.
_LEMMA_LAWS = ("dual-imp-neg", "dual-disjoint", "dual-involution", "delta-premise")


def _lemma_formula(lemma: Mapping[str, str]) -> PropFormula:
    law = lemma.get("law")
    if law == "dual-imp-neg":
        return PImp(PAtom(lemma["dual"]), PNot(PAtom(lemma["phi"])))
    if law == "dual-disjoint":
        return PNot(PAnd(PAtom(lemma["phi"]), PAtom(lemma["dual"])))
    if law == "dual-involution":
        a, dd = PAtom(lemma["phi"]), PAtom(lemma["ddual"])
        return PAnd(PImp(dd, a), PImp(a, dd))
    if law == "delta-premise":
        a, b = PAtom(lemma["lhs"]), PAtom(lemma["rhs"])
        return PAnd(PImp(a, b), PImp(b, a))
    raise MalformedSkeleton(f"unknown lemma law: {law!r}")


def verify_rule(rule, lemma_library=None) -> str:
    """Hybrid verification of one rule.

    For a rule marked propositional: parse its declared skeleton, add its
    trusted lemma hypotheses (only the dual laws and equivalence premises
    are admitted), and decide with prove_ipc.  For a rule marked
    first-order, return NeedsFirstOrder without attempting anything.
    """
    verify = rule["verify"] if isinstance(rule, Mapping) else rule.verify
    kind = verify.get("kind")
    if kind == "first-order":
        return NEEDS_FIRST_ORDER
    if kind != "propositional":
        raise MalformedSkeleton(f"unknown verification kind: {kind!r}")
    skeleton = verify.get("skeleton")
    if not skeleton:
        raise MalformedSkeleton("propositional rule without a skeleton")
    goal = parse_prop(skeleton)
    hyps = frozenset(_lemma_formula(l) for l in verify.get("lemmas", ()))
    if len(prop_atoms(goal) | frozenset().union(*(prop_atoms(h) for h in hyps), frozenset())) > _ATOM_BUDGET:
        raise MalformedSkeleton("skeleton exceeds the atom budget")
    result = prove_ipc(Sequent(hyps, goal))
    return VERIFIED if result.provable else FAILED
