"""Textbook substitution-based evaluator, kept as an independent oracle.

Deliberately naive: no environments, no caches, no definitional symbols.
Bounded quantifiers are expanded by substituting plain numerals, so truth of
a closed base-language sentence is computed by a completely different route
than the main evaluator — which is the point of cross-checking against it.
"""

from __future__ import annotations

from .syntax import (
    BoundedExists,
    BoundedForAll,
    Eq,
    ForAll,
    Formula,
    Implies,
    Not,
    Plus,
    Succ,
    Term,
    Times,
    Zero,
    numeral,
    substitute,
)


def closed_term_value(t: Term) -> int:
    match t:
        case Zero():
            return 0
        case Succ(a):
            return closed_term_value(a) + 1
        case Plus(a, b):
            return closed_term_value(a) + closed_term_value(b)
        case Times(a, b):
            return closed_term_value(a) * closed_term_value(b)
    raise ValueError(f"not a closed base term: {t!r}")


def sentence_truth(f: Formula) -> bool:
    """Truth of a closed Delta0 base-language sentence by full expansion."""
    match f:
        case Eq(left, right):
            return closed_term_value(left) == closed_term_value(right)
        case Not(body):
            return not sentence_truth(body)
        case Implies(a, b):
            return (not sentence_truth(a)) or sentence_truth(b)
        case BoundedForAll(v, bound, body):
            limit = closed_term_value(bound)
            return all(sentence_truth(substitute(body, v, numeral(i))) for i in range(limit + 1))
        case BoundedExists(v, bound, body):
            limit = closed_term_value(bound)
            return any(sentence_truth(substitute(body, v, numeral(i))) for i in range(limit + 1))
        case ForAll(_, _):
            raise ValueError("unbounded quantifier: not finitely evaluable")
    raise TypeError(f"not a formula: {f!r}")
