"""Horn-rule derivability engine over the implication lattice of the
restricted classical principles.

A rule base is JSON data: level-parametric rules (patterns over a single
level variable k, e.g. "DNE:S(k-1)"), cited separation facts, and the
list of families whose nodes are monotone in their class arguments.
Closure is a least fixpoint of forward chaining over all ground
instantiations of k up to a level cap; queries answer with a replayable
chain, a citation-backed separation, or Unknown.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from . import ipc
from .hierarchy import ClassLit, class_lit_subset, format_class_literal
from .principles import PLAIN, catalog

__all__ = [
    "Rule", "SeparationFact", "RuleBase", "TheoryContext",
    "Derivable", "Separated", "Unknown", "Report",
    "SchemaError", "MissingCitation", "UnknownFamily", "LevelOutOfRange",
    "parse_pattern", "ground_pattern", "canonical_node", "node_level",
    "load_rulebase", "closure", "query", "equivalence_class",
    "export_dot", "verify_rulebase",
]

MONOTONE_FAMILIES = frozenset({
    "LEM", "DNE", "DNS", "DML", "LEMBOT", "DMLBOT", "DNEOR",
    "PEIRCE", "DUAL", "WDUAL", "LN", "CD", "COLL",
})

# Families whose two class arguments are interchangeable; their ground
# nodes are stored with sorted arguments.
_SYMMETRIC = frozenset({"DML", "DMLBOT", "DNEOR"})

_VARIANT_TAGS = ("DSI", "DPI")

_ARITY = {}
for _pid, _desc in catalog():
    _tag = {"Plain": "", "DeltaSigma": "DSI", "DeltaPi": "DPI"}[_pid.variant]
    _ARITY[(_pid.family, _tag)] = _pid.arity


class SchemaError(ValueError):
    pass


class MissingCitation(SchemaError):
    pass


class UnknownFamily(SchemaError):
    pass


class LevelOutOfRange(ValueError):
    pass


# ---------------------------------------------------------------------------
# Node patterns

_CLASS_PAT_RE = re.compile(r"^(nn|n)?([SPD])(?:\(k([+-]\d+)?\)|(\d+))$")


@dataclass(frozen=True, slots=True)
class ClassPat:
    neg: int
    kind: str
    # offset from the level variable k, or an absolute level
    offset: int | None
    const: int | None

    def level_at(self, k: int) -> int:
        return k + self.offset if self.offset is not None else self.const


@dataclass(frozen=True, slots=True)
class NodePat:
    family: str
    tag: str
    args: tuple[ClassPat, ...]


def parse_pattern(text: str) -> NodePat:
    parts = text.split(":")
    family = parts[0]
    rest = parts[1:]
    tag = ""
    if rest and rest[0] in _VARIANT_TAGS:
        tag = rest[0]
        rest = rest[1:]
    if (family, tag) not in _ARITY:
        raise UnknownFamily(f"unknown principle family: {text!r}")
    args = []
    for p in rest:
        m = _CLASS_PAT_RE.match(p)
        if not m:
            raise SchemaError(f"bad class pattern {p!r} in {text!r}")
        prefix, kind, off, const = m.groups()
        neg = 0 if prefix is None else len(prefix)
        if const is not None:
            args.append(ClassPat(neg, kind, None, int(const)))
        else:
            args.append(ClassPat(neg, kind, int(off) if off else 0, None))
    arity = _ARITY[(family, tag)]
    if len(args) == 1 and arity == 2:
        args = args * 2
    if len(args) != arity:
        raise SchemaError(f"{family} takes {arity} class argument(s): {text!r}")
    return NodePat(family, tag, tuple(args))


def _format_node(family: str, tag: str, lits: Iterable[ClassLit]) -> str:
    lits = [lit.canonical() for lit in lits]
    texts = [format_class_literal(lit) for lit in lits]
    if family in _SYMMETRIC and not tag:
        texts.sort()
    parts = [family] + ([tag] if tag else []) + texts
    return ":".join(parts)


def ground_pattern(pat: NodePat, k: int) -> str | None:
    """Instantiate at level k; None when any class goes below level 0
    (the empty-class convention discards the instance)."""
    lits = []
    for a in pat.args:
        lvl = a.level_at(k)
        if lvl < 0:
            return None
        lits.append(ClassLit(a.neg, a.kind, lvl))
    return _format_node(pat.family, pat.tag, lits)


def canonical_node(text: str) -> str:
    """Canonical ground node string: classes canonicalized (P0 = S0),
    symmetric families sorted, diagonal sugar expanded."""
    pat = parse_pattern(text)
    node = ground_pattern(pat, 0)
    if node is None:
        raise SchemaError(f"not a ground node: {text!r}")
    for a in pat.args:
        if a.const is None:
            raise SchemaError(f"not a ground node: {text!r}")
    return node


def node_level(node: str) -> int:
    pat = parse_pattern(node)
    return max(a.const if a.const is not None else 0 for a in pat.args)


# ---------------------------------------------------------------------------
# Rule base

@dataclass(frozen=True, slots=True)
class Rule:
    rule_id: str
    premises: tuple[NodePat, ...]
    conclusion: NodePat
    guard: str | None
    cite: Mapping[str, str]
    verify: Mapping


@dataclass(frozen=True, slots=True)
class SeparationFact:
    fact_id: str
    theory: tuple[NodePat, ...]
    unprovable: NodePat
    guard: str | None
    cite: Mapping[str, str]


@dataclass
class RuleBase:
    rules: tuple[Rule, ...]
    separations: tuple[SeparationFact, ...]
    inclusions: frozenset[str]
    _ground_cache: dict = field(default_factory=dict, repr=False)


_GUARD_RE = re.compile(r"^k(>=|==)(\d+)$")


def _guard_ok(guard: str | None, k: int) -> bool:
    if not guard:
        return True
    m = _GUARD_RE.match(guard.replace(" ", ""))
    if not m:
        raise SchemaError(f"bad guard: {guard!r}")
    op, n = m.group(1), int(m.group(2))
    return k >= n if op == ">=" else k == n


def load_rulebase(src) -> RuleBase:
    """Validate and load a rule base from a JSON string or a dict."""
    if isinstance(src, (str, bytes)):
        data = json.loads(src)
    else:
        data = src
    if not isinstance(data, dict) or "rules" not in data:
        raise SchemaError("rule base must be an object with a 'rules' key")

    rules = []
    seen = set()
    for raw in data.get("rules", ()):
        rid = raw.get("id")
        if not rid or rid in seen:
            raise SchemaError(f"missing or duplicate rule id: {rid!r}")
        seen.add(rid)
        cite = raw.get("cite") or {}
        if not cite.get("ref") or not cite.get("quote"):
            raise MissingCitation(f"rule {rid} lacks a citation ref/quote")
        verify = raw.get("verify") or {"kind": "first-order"}
        if verify.get("kind") not in ("propositional", "first-order"):
            raise SchemaError(f"rule {rid}: bad verify kind")
        if verify["kind"] == "propositional" and not verify.get("skeleton"):
            raise SchemaError(f"rule {rid}: propositional rule without skeleton")
        prem = tuple(parse_pattern(p) for p in raw.get("premises", ()))
        concl = parse_pattern(raw["conclusion"])
        guard = raw.get("guard")
        _guard_ok(guard, 0)
        rules.append(Rule(rid, prem, concl, guard, dict(cite), dict(verify)))

    seps = []
    for raw in data.get("separations", ()):
        fid = raw.get("id")
        if not fid or fid in seen:
            raise SchemaError(f"missing or duplicate separation id: {fid!r}")
        seen.add(fid)
        cite = raw.get("cite") or {}
        if not cite.get("ref") or not cite.get("quote"):
            raise MissingCitation(f"separation {fid} lacks a citation ref/quote")
        theory = tuple(parse_pattern(p) for p in raw.get("theory", ()))
        unprov = parse_pattern(raw["unprovable"])
        guard = raw.get("guard")
        _guard_ok(guard, 0)
        seps.append(SeparationFact(fid, theory, unprov, guard, dict(cite)))

    incl = frozenset(data.get("inclusions", MONOTONE_FAMILIES))
    for fam in incl:
        if not any(f == fam for f, _tag in _ARITY):
            raise UnknownFamily(f"unknown family in inclusions: {fam!r}")
    return RuleBase(tuple(rules), tuple(seps), incl)


def load_default_rulebase() -> RuleBase:
    from importlib import resources
    text = resources.files("sca").joinpath("data/rulebase.json").read_text("utf-8")
    return load_rulebase(text)


# ---------------------------------------------------------------------------
# Contexts and results

@dataclass(frozen=True)
class TheoryContext:
    assumed: frozenset[str]
    k_max: int

    @staticmethod
    def make(nodes: Iterable[str], k_max: int) -> "TheoryContext":
        canon = frozenset(canonical_node(n) for n in nodes)
        for n in canon:
            if node_level(n) > k_max:
                raise LevelOutOfRange(f"{n} exceeds k_max={k_max}")
        return TheoryContext(canon, k_max)


@dataclass
class Derivable:
    chain: list  # (rule_id, premises tuple, conclusion)


@dataclass
class Separated:
    fact_id: str
    witness: dict


@dataclass
class Unknown:
    boundary_warning: bool


# ---------------------------------------------------------------------------
# Closure

def _ground_rules(rb: RuleBase, k_max: int):
    """All ground instances for k in 0..k_max; instances whose conclusion
    exceeds k_max are kept as clamp markers (conclusion None)."""
    key = k_max
    if key in rb._ground_cache:
        return rb._ground_cache[key]
    out = []
    for rule in rb.rules:
        for k in range(k_max + 1):
            if not _guard_ok(rule.guard, k):
                continue
            prems = []
            dead = False
            for p in rule.premises:
                g = ground_pattern(p, k)
                if g is None:
                    dead = True
                    break
                prems.append(g)
            if dead:
                continue
            concl = ground_pattern(rule.conclusion, k)
            if concl is None:
                continue
            lvl = node_level(concl)
            if lvl > k_max or any(node_level(p) > k_max for p in prems):
                out.append((rule.rule_id, tuple(prems), None, lvl))
            else:
                out.append((rule.rule_id, tuple(prems), concl, lvl))
    rb._ground_cache[key] = out
    return out


def _weaker_nodes(node: str, incl: frozenset[str], cache: dict) -> tuple[str, ...]:
    if node in cache:
        return cache[node]
    pat = parse_pattern(node)
    out: tuple[str, ...] = ()
    if pat.family in incl and not pat.tag:
        per_arg = []
        for a in pat.args:
            lit = ClassLit(a.neg, a.kind, a.const)
            lower = [lit]
            for kind in "SPD":
                for lvl in range(a.const + 1):
                    cand = ClassLit(a.neg, kind, lvl)
                    if cand.canonical() != lit.canonical() and class_lit_subset(cand, lit):
                        lower.append(cand)
            per_arg.append(lower)
        nodes = set()
        if len(per_arg) == 1:
            for l0 in per_arg[0]:
                nodes.add(_format_node(pat.family, pat.tag, (l0,)))
        else:
            for l0 in per_arg[0]:
                for l1 in per_arg[1]:
                    nodes.add(_format_node(pat.family, pat.tag, (l0, l1)))
        nodes.discard(node)
        out = tuple(sorted(nodes))
    cache[node] = out
    return out


def _closure_detail(assumed: frozenset[str], rb: RuleBase, k_max: int,
                    rng: random.Random | None = None):
    """Least fixpoint with provenance.

    Returns (nodes, steps, clamped_levels): steps maps each derived node
    to the (rule_id, premises, node) step that first added it;
    clamped_levels collects conclusion levels that were cut off at k_max.
    """
    instances = list(_ground_rules(rb, k_max))
    if rng is not None:
        instances = instances[:]
        rng.shuffle(instances)
    nodes: set[str] = set(assumed)
    steps: dict[str, tuple] = {}
    clamped: set[int] = set()
    mono_cache: dict = {}

    def add(node, rid, prems):
        nodes.add(node)
        steps[node] = (rid, tuple(prems), node)

    changed = True
    while changed:
        changed = False
        for n in list(nodes):
            for w in _weaker_nodes(n, rb.inclusions, mono_cache):
                if w not in nodes:
                    add(w, f"mono:{parse_pattern(n).family}", (n,))
                    changed = True
        for rid, prems, concl, lvl in instances:
            if concl is not None and concl in nodes:
                continue
            if all(p in nodes for p in prems):
                if concl is None:
                    clamped.add(lvl)
                else:
                    add(concl, rid, prems)
                    changed = True
    return frozenset(nodes), steps, clamped


def closure(ctx: TheoryContext, rb: RuleBase,
            rng: random.Random | None = None) -> frozenset[str]:
    """The set of ground principle nodes derivable over HA from the
    assumed nodes, up to level k_max.  Deterministic: the least fixpoint
    does not depend on the rule firing order."""
    nodes, _steps, _clamped = _closure_detail(ctx.assumed, rb, ctx.k_max, rng)
    return nodes


def _chain_for(goal: str, assumed: frozenset[str], steps: dict) -> list:
    chain = []
    done = set(assumed)

    def visit(node):
        if node in done:
            return
        done.add(node)
        rid, prems, concl = steps[node]
        for p in prems:
            visit(p)
        chain.append((rid, prems, concl))

    visit(goal)
    return chain


def query(ctx: TheoryContext, goal: str, rb: RuleBase):
    """Derivable with a replayable chain, a cited Separated answer, or
    Unknown (with a boundary warning when the level cap interfered)."""
    goal = canonical_node(goal)
    if node_level(goal) > ctx.k_max:
        raise LevelOutOfRange(f"{goal} exceeds k_max={ctx.k_max}")
    nodes, steps, clamped = _closure_detail(ctx.assumed, rb, ctx.k_max)
    if goal in nodes:
        return Derivable(_chain_for(goal, ctx.assumed, steps))

    ctx_with_goal = ctx.assumed | {goal}
    nodes_with_goal, _s, _c = _closure_detail(ctx_with_goal, rb, ctx.k_max)
    for fact in rb.separations:
        for k in range(ctx.k_max + 1):
            if not _guard_ok(fact.guard, k):
                continue
            theory = []
            dead = False
            for p in fact.theory:
                g = ground_pattern(p, k)
                if g is None or node_level(g) > ctx.k_max:
                    dead = True
                    break
                theory.append(g)
            unprov = ground_pattern(fact.unprovable, k)
            if dead or unprov is None or node_level(unprov) > ctx.k_max:
                continue
            theory_closure, _s2, _c2 = _closure_detail(
                frozenset(theory), rb, ctx.k_max)
            if nodes <= theory_closure and unprov in nodes_with_goal:
                return Separated(fact.fact_id, {
                    "k": k,
                    "theory": tuple(theory),
                    "unprovable": unprov,
                    "cite": dict(fact.cite),
                })

    involved = {node_level(n) for n in ctx_with_goal}
    warning = any(abs(lvl - m) <= 2 for lvl in clamped for m in involved)
    return Unknown(bool(clamped) and warning)


def equivalence_class(node: str, base: TheoryContext, rb: RuleBase) -> frozenset[str]:
    """All nodes inter-derivable with the given node over HA plus the
    base context."""
    node = canonical_node(node)
    if node_level(node) > base.k_max - 2:
        raise LevelOutOfRange(
            f"{node} needs k_max >= level + 2 (k_max={base.k_max})")
    fwd, _s, _c = _closure_detail(base.assumed | {node}, rb, base.k_max)
    out = set()
    for cand in fwd:
        back, _s2, _c2 = _closure_detail(base.assumed | {cand}, rb, base.k_max)
        if node in back:
            out.add(cand)
    return frozenset(out)


# ---------------------------------------------------------------------------
# Rule verification

@dataclass
class Report:
    verified: int
    failed: int
    needs_first_order: int
    statuses: list


def verify_rulebase(rb: RuleBase) -> Report:
    statuses = []
    counts = {ipc.VERIFIED: 0, ipc.FAILED: 0, ipc.NEEDS_FIRST_ORDER: 0}
    for rule in rb.rules:
        status = ipc.verify_rule({"verify": rule.verify})
        counts[status] += 1
        statuses.append((rule.rule_id, status))
    return Report(counts[ipc.VERIFIED], counts[ipc.FAILED],
                  counts[ipc.NEEDS_FIRST_ORDER], statuses)


# ---------------------------------------------------------------------------
# Figure export

def _abhk_graph(k: int):
    slem_ = f"LEM:S{k - 1}"
    dlem = f"LEM:D{k}"
    ppdne = f"DNEOR:P{k}:P{k}"
    plem = f"LEM:P{k}"
    sdne = f"DNE:S{k}"
    slem = f"LEM:S{k}"
    nodes = [slem_, dlem, ppdne, plem, sdne, slem]
    solid = [
        (slem, plem), (slem, sdne), (plem, ppdne),
        (ppdne, dlem), (sdne, dlem), (dlem, slem_),
    ]
    dashed = [((plem, slem), f"HA + DNE:S{k}")]
    return nodes, [(s, d, "solid", "") for s, d in solid] + \
        [(e[0], e[1], "dashed", lab) for e, lab in dashed]


def _dns_graph(k: int):
    sdne_ = f"DNE:S{k - 1}"
    ppdne_ = f"DNEOR:P{k - 1}:P{k - 1}"
    nslem_ = f"LEM:nS{k - 1}"
    plem_ = f"LEM:P{k - 1}"
    slem_ = f"LEM:S{k - 1}"
    nddml = f"DML:nD{k}"
    ddml = f"DML:D{k}"
    dddne = f"DNEOR:D{k}:D{k}"
    ndlem = f"LEM:nD{k}"
    dlem = f"LEM:D{k}"
    pdml = f"DML:P{k}"
    sdml = f"DML:S{k}"
    sdne = f"DNE:S{k}"
    ppdne = f"DNEOR:P{k}:P{k}"
    nslem = f"LEM:nS{k}"
    plem = f"LEM:P{k}"
    slem = f"LEM:S{k}"
    nodes = [sdne_, ppdne_, nslem_, plem_, slem_, nddml, ddml, dddne,
             ndlem, dlem, pdml, sdml, sdne, ppdne, nslem, plem, slem]
    solid = [
        (slem, plem), (slem, sdne), (plem, ppdne), (plem, nslem),
        (sdne, dlem), (sdne, pdml), (ppdne, dlem), (ppdne, pdml),
        (ppdne, sdml), (nslem, sdml), (dlem, dddne), (dlem, ndlem),
        (dddne, slem_), (dddne, nddml), (ndlem, nddml), (ndlem, ddml),
        (slem_, sdne_), (slem_, plem_), (plem_, ppdne_), (plem_, nslem_),
        (nslem, pdml), (pdml, ndlem), (sdml, ndlem), (nddml, nslem_),
        (ddml, nslem_),
    ]
    dashed = [
        (nslem, plem), (sdml, ppdne), (ndlem, dlem),
        (nddml, dddne), (nslem_, slem_), (ddml, nddml),
    ]
    label = f"HA + DNE:S{k - 1}"
    return nodes, [(s, d, "solid", "") for s, d in solid] + \
        [(s, d, "dashed", label) for s, d in dashed]


def _cd_graph(k: int):
    ndnscd = f"CD:nD{k}:nS{k}"
    nsnscd = f"CD:nS{k}:nS{k}"
    npnscd = f"CD:nP{k}:nS{k}"
    dsdml = f"DML:D{k}:S{k}"
    sdml = f"DML:S{k}"
    spdml = f"DML:P{k}:S{k}"
    ndlem = f"LEM:nD{k}"
    nslem = f"LEM:nS{k}"
    nplem = f"LEM:nP{k}"
    nstcd = f"CD:nS{k}:THETA"
    nptcd = f"CD:nP{k}:THETA"
    nodes = [ndnscd, nsnscd, npnscd, dsdml, sdml, spdml,
             ndlem, nslem, nplem, nstcd, nptcd]
    solid = [
        (dsdml, ndnscd), (nsnscd, ndnscd), (npnscd, ndnscd),
        (sdml, dsdml), (spdml, dsdml), (sdml, nsnscd), (spdml, npnscd),
        (ndlem, dsdml), (nslem, ndlem), (nplem, ndlem),
        (nslem, sdml), (nslem, spdml), (nplem, spdml),
        (nstcd, nsnscd), (nptcd, npnscd), (nslem, nstcd), (nplem, nptcd),
    ]
    dashed = [(ndnscd, dsdml), (nsnscd, sdml), (npnscd, spdml)]
    dotted = [(spdml, nslem), (spdml, nplem), (dsdml, ndlem)]
    return nodes, (
        [(s, d, "solid", "") for s, d in solid]
        + [(s, d, "dashed", f"HA + DNS:S{k - 2}") for s, d in dashed]
        + [(s, d, "dotted", f"HA + DNS:S{k - 1}") for s, d in dotted]
    )


_PRESETS = {"abhk": _abhk_graph, "dns": _dns_graph, "cd": _cd_graph}


def export_dot(preset: str, k: int, rb: RuleBase | None = None) -> str:
    """DOT digraph of the preset implication diagram at level k; dashed
    and dotted edges carry a label naming their side-condition base."""
    if preset not in _PRESETS:
        raise ValueError(f"unknown preset: {preset!r}")
    if k < 1:
        raise ValueError("preset figures need k >= 1")
    nodes, edges = _PRESETS[preset](k)
    lines = [f"digraph {preset} {{", "  rankdir=BT;", "  node [shape=box];"]
    for n in nodes:
        lines.append(f'  "{n}";')
    for src, dst, style, label in edges:
        if style == "solid":
            lines.append(f'  "{src}" -> "{dst}";')
        else:
            lines.append(
                f'  "{src}" -> "{dst}" [style={style} label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
