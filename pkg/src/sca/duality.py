"""The dual of a prenex formula: flip every quantifier and negate the
quantifier-free matrix.  The dual is classically equivalent to the
negation; the laws relating the two are emitted as concrete formula
instances for use as trusted hypotheses during rule verification.
"""

from __future__ import annotations

from .formulas import And, Exists, Forall, Formula, Imp, Not
from .hierarchy import prenex_prefix

__all__ = ["dual", "dual_law_instances"]


def dual(f: Formula) -> Formula:
    """Structural dual of a prenex formula.

    A quantifier-free core maps to its negation; an E-quantifier maps to
    an A-quantifier over the dual body, and vice versa.  Raises NotPrenex
    on non-prenex input.
    """
    prefix, matrix = prenex_prefix(f)
    out: Formula = Not(matrix)
    for kind, v in reversed(prefix):
        out = Forall(v, out) if kind == "E" else Exists(v, out)
    return out


def dual_law_instances(f: Formula) -> list[Formula]:
    """The two laws usable as trusted lemma hypotheses: the dual implies
    the negation, and the formula is inconsistent with its dual."""
    d = dual(f)
    return [Imp(d, Not(f)), Not(And(f, d))]
