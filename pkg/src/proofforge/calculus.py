"""Hilbert-style proof calculus for first-order arithmetic.

Lines of a proof are formulas; a line is justified when it is an instance of
an axiom schema, a theory axiom, or follows from earlier lines by modus
ponens or (bounded) generalization.  The schema basis:

    P1       A -> (B -> A)
    P2       (A -> (B -> C)) -> ((A -> B) -> (A -> C))
    P3       (!A -> !B) -> (B -> A)
    Q1       forall x A -> A[x := t]          (capture-avoiding)
    Q2       forall x (A -> B) -> (forall x A -> forall x B)
    BQ2A     forall<= x b (A -> B) -> (forall<= x b A -> forall<= x b B)
    BQ2E     forall<= x b (A -> B) -> (exists<= x b A -> exists<= x b B)
    BCONGA   b = b' -> (forall<= x b A -> forall<= x b' A)
    BCONGE   b = b' -> (exists<= x b A -> exists<= x b' A)
    EQREFL   t = t
    EQSUBST  s = u -> (A -> A')   for atomic A, A' = A with some
             occurrences of s replaced by u
    QAX i    the i-th Robinson axiom (i in 1..7)
    IND      A[x:=0] -> (forall x (A -> A[x:=S(x)]) -> forall x A)
             (only when the theory enables induction)
    COMPUTE  t = u   for closed t, u with equal values under the theory's
             definitional-extension evaluators

plus the rules

    MP    from A -> B and A infer B
    GEN   from A infer forall x A
    BGEN  from A infer forall<= x b A

Every schema instance is true in the standard model under every variable
assignment, theory axioms are closed, and the rules preserve that property,
so everything provable is true in N.  Matching any single schema against a
candidate line is linear in the line size.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Mapping, Union

from .syntax import (
    ZERO,
    BoundedExists,
    BoundedForAll,
    DefFn,
    Eq,
    ForAll,
    Formula,
    Implies,
    Not,
    Plus,
    Succ,
    Term,
    Times,
    Var,
    Zero,
    ensure_recursion_headroom,
    formula_size,
    free_variables,
    is_sentence,
    parse_formula,
    parse_term,
    print_formula,
    print_term,
    substitute,
)

SCHEMATA = (
    "P1",
    "P2",
    "P3",
    "Q1",
    "Q2",
    "BQ2A",
    "BQ2E",
    "BCONGA",
    "BCONGE",
    "EQREFL",
    "EQSUBST",
    "QAX",
    "IND",
    "COMPUTE",
)


# ---------------------------------------------------------------------------
# Cost accounting
# ---------------------------------------------------------------------------


class Cost:
    """Mutable counter for deterministic work measures."""

    __slots__ = ("symbol_comparisons", "lines_scanned", "pair_searches")

    def __init__(self) -> None:
        self.symbol_comparisons = 0
        self.lines_scanned = 0
        self.pair_searches = 0


_NULL_COST = Cost()  # shared sink when the caller does not measure


def eq_terms(a: Term, b: Term, cost: Cost = _NULL_COST) -> bool:
    """Structural equality with early exit, counting node comparisons."""
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        cost.symbol_comparisons += 1
        if type(x) is not type(y):
            return False
        match x:
            case Var(n):
                if n != y.name:
                    return False
            case Zero():
                pass
            case Succ(arg):
                stack.append((arg, y.arg))
            case Plus(l, r) | Times(l, r):
                stack.append((l, y.left))
                stack.append((r, y.right))
            case DefFn(sym, args):
                if sym != y.symbol or len(args) != len(y.args):
                    return False
                stack.extend(zip(args, y.args))
    return True


def eq_formulas(a: Formula, b: Formula, cost: Cost = _NULL_COST) -> bool:
    stack: list[tuple] = [(a, b)]
    while stack:
        x, y = stack.pop()
        cost.symbol_comparisons += 1
        if type(x) is not type(y):
            return False
        match x:
            case Eq(l, r):
                if not eq_terms(l, y.left, cost) or not eq_terms(r, y.right, cost):
                    return False
            case Not(body):
                stack.append((body, y.body))
            case Implies(p, q):
                stack.append((p, y.antecedent))
                stack.append((q, y.consequent))
            case ForAll(v, body):
                if v != y.var:
                    return False
                stack.append((body, y.body))
            case BoundedForAll(v, bound, body) | BoundedExists(v, bound, body):
                if v != y.var or not eq_terms(bound, y.bound, cost):
                    return False
                stack.append((body, y.body))
    return True


# ---------------------------------------------------------------------------
# Definitional extensions and theories
# ---------------------------------------------------------------------------


class EvalBudgetExceeded(RuntimeError):
    pass


class EvalBudget:
    """Operation counter shared across one evaluation; raises when spent."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int = 10_000_000):
        self.limit = limit
        self.used = 0

    def charge(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise EvalBudgetExceeded(f"evaluation budget of {self.limit} operations exceeded")


@dataclass(frozen=True)
class DefExtension:
    """A definitional function symbol: total evaluator plus its defining story."""

    symbol: str
    arity: int
    evaluator: Callable[..., int]
    description: str


@dataclass(frozen=True)
class TheorySpec:
    """A theory: Robinson arithmetic plus extra closed axioms and definitional symbols.

    `induction` switches the full arithmetic mode (IND schema available).
    Immutable after construction; extension builds a new spec.
    """

    name: str
    extra_axioms: tuple[Formula, ...] = ()
    def_extensions: Mapping[str, DefExtension] = field(default_factory=dict)
    induction: bool = False

    def __post_init__(self) -> None:
        for i, ax in enumerate(self.extra_axioms):
            if not is_sentence(ax):
                raise ValueError(f"theory axiom {i + 1} of {self.name!r} is not a sentence: {print_formula(ax)}")

    def arities(self) -> dict[str, int]:
        return {s: d.arity for s, d in self.def_extensions.items()}

    def extended(self, name: str, axiom: Formula, new_symbols: Mapping[str, DefExtension] | None = None) -> "TheorySpec":
        exts = dict(self.def_extensions)
        if new_symbols:
            exts.update(new_symbols)
        return TheorySpec(
            name=name,
            extra_axioms=self.extra_axioms + (axiom,),
            def_extensions=exts,
            induction=self.induction,
        )


@lru_cache(maxsize=1)
def robinson_axioms() -> tuple[Formula, ...]:
    """The seven closed axioms of Robinson arithmetic, in fixed order."""
    texts = (
        "forall x !(S(x) = 0)",
        "forall x forall y (S(x) = S(y) -> x = y)",
        "forall x (!(x = 0) -> exists y x = S(y))",
        "forall x x + 0 = x",
        "forall x forall y x + S(y) = S(x + y)",
        "forall x x * 0 = 0",
        "forall x forall y x * S(y) = x * y + x",
    )
    return tuple(parse_formula(t, deffn_arities={}) for t in texts)


def eval_term_in(theory: TheorySpec, t: Term, budget: EvalBudget | None = None) -> int:
    """Value of a closed term in N under the theory's definitional evaluators.

    Raises ValueError on free variables, EvalBudgetExceeded when the budget
    runs out, KeyError on an unregistered symbol.
    """
    ensure_recursion_headroom()
    if budget is None:
        budget = EvalBudget()
    return _eval_term(theory, t, budget)


def _eval_term(theory: TheorySpec, t: Term, budget: EvalBudget) -> int:
    budget.charge()
    match t:
        case Zero():
            return 0
        case Succ(_):
            n = 0
            while isinstance(t, Succ):
                n += 1
                t = t.arg
            budget.charge(n)
            return n + _eval_term(theory, t, budget)
        case Plus(a, b):
            return _eval_term(theory, a, budget) + _eval_term(theory, b, budget)
        case Times(a, b):
            va = _eval_term(theory, a, budget)
            vb = _eval_term(theory, b, budget)
            budget.charge(max(va.bit_length() + vb.bit_length(), 1) // 8)
            return va * vb
        case DefFn(sym, args):
            ext = theory.def_extensions.get(sym)
            if ext is None:
                raise KeyError(f"function symbol {sym!r} not registered in theory {theory.name!r}")
            vals = [_eval_term(theory, a, budget) for a in args]
            budget.charge(4)
            return ext.evaluator(*vals, budget=budget)
        case Var(name):
            raise ValueError(f"cannot evaluate open term (free variable {name!r})")
    raise TypeError(f"not a term: {t!r}")


# ---------------------------------------------------------------------------
# Justifications
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AxiomJust:
    schema: str
    index: int | None = None  # QAX index, 1-based
    term: Term | None = None  # Q1 / EQREFL instantiation payload


@dataclass(frozen=True)
class TheoryAxiomJust:
    index: int  # 1-based position in extra_axioms


@dataclass(frozen=True)
class MPJust:
    implication: int  # 0-based line index of A -> B
    antecedent: int  # 0-based line index of A


@dataclass(frozen=True)
class GenJust:
    source: int
    var: str


@dataclass(frozen=True)
class BGenJust:
    source: int
    var: str
    bound: Term


@dataclass(frozen=True)
class ComputeJust:
    value: int | None = None


Justification = Union[AxiomJust, TheoryAxiomJust, MPJust, GenJust, BGenJust, ComputeJust]


@dataclass(frozen=True)
class ProofLine:
    formula: Formula
    justification: Justification | None = None


@dataclass(frozen=True)
class Proof:
    lines: tuple[ProofLine, ...]

    @property
    def conclusion(self) -> Formula:
        if not self.lines:
            raise ValueError("empty proof has no conclusion")
        return self.lines[-1].formula


def proof_size(proof: Proof) -> int:
    """Sum of line sizes plus one separator between consecutive lines."""
    if not proof.lines:
        return 0
    return sum(formula_size(ln.formula) for ln in proof.lines) + len(proof.lines) - 1


def proof_of_formulas(formulas: list[Formula] | tuple[Formula, ...]) -> Proof:
    return Proof(tuple(ProofLine(f) for f in formulas))


# ---------------------------------------------------------------------------
# Schema matchers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MatchResult:
    ok: bool
    bindings: Mapping[str, object] = field(default_factory=dict)
    reason: str = ""


_NO = MatchResult(False)


def _match_p1(f: Formula, cost: Cost) -> MatchResult:
    if isinstance(f, Implies) and isinstance(f.consequent, Implies):
        a, inner = f.antecedent, f.consequent
        if eq_formulas(a, inner.consequent, cost):
            return MatchResult(True, {"A": a, "B": inner.antecedent})
    return _NO


def _match_p2(f: Formula, cost: Cost) -> MatchResult:
    # (A -> (B -> C)) -> ((A -> B) -> (A -> C))
    if not (isinstance(f, Implies) and isinstance(f.antecedent, Implies)):
        return _NO
    left = f.antecedent
    if not isinstance(left.consequent, Implies):
        return _NO
    a, b, c = left.antecedent, left.consequent.antecedent, left.consequent.consequent
    r = f.consequent
    if not (isinstance(r, Implies) and isinstance(r.antecedent, Implies) and isinstance(r.consequent, Implies)):
        return _NO
    ab, ac = r.antecedent, r.consequent
    if (
        eq_formulas(ab.antecedent, a, cost)
        and eq_formulas(ab.consequent, b, cost)
        and eq_formulas(ac.antecedent, a, cost)
        and eq_formulas(ac.consequent, c, cost)
    ):
        return MatchResult(True, {"A": a, "B": b, "C": c})
    return _NO


def _match_p3(f: Formula, cost: Cost) -> MatchResult:
    # (!A -> !B) -> (B -> A)
    if not (isinstance(f, Implies) and isinstance(f.antecedent, Implies) and isinstance(f.consequent, Implies)):
        return _NO
    left, right = f.antecedent, f.consequent
    if not (isinstance(left.antecedent, Not) and isinstance(left.consequent, Not)):
        return _NO
    a, b = left.antecedent.body, left.consequent.body
    if eq_formulas(right.antecedent, b, cost) and eq_formulas(right.consequent, a, cost):
        return MatchResult(True, {"A": a, "B": b})
    return _NO


def _leftmost_instance(phi: Formula, psi: Formula, x: str) -> Term | None:
    """Subterm of psi at the position of the leftmost free occurrence of x in phi.

    The walk follows phi's structure; binder names may differ between the two
    sides (canonical renaming), which the walk tolerates — the caller verifies
    the candidate by substitution, so leniency here is harmless.
    """

    def walk_term(pt: Term, qt: Term) -> tuple[bool, Term | None]:
        # returns (found, candidate)
        if isinstance(pt, Var):
            if pt.name == x:
                return True, qt
            return False, None
        if type(pt) is not type(qt):
            return False, None
        match pt:
            case Succ(arg):
                return walk_term(arg, qt.arg)
            case Plus(a, b) | Times(a, b):
                found, cand = walk_term(a, qt.left)
                if found:
                    return found, cand
                return walk_term(b, qt.right)
            case DefFn(_, args):
                if len(args) != len(qt.args):
                    return False, None
                for pa, qa in zip(args, qt.args):
                    found, cand = walk_term(pa, qa)
                    if found:
                        return found, cand
                return False, None
            case _:
                return False, None

    def walk(pf: Formula, qf: Formula, shadowed: bool) -> tuple[bool, Term | None]:
        if type(pf) is not type(qf):
            return False, None
        match pf:
            case Eq(a, b):
                if not shadowed:
                    found, cand = walk_term(a, qf.left)
                    if found:
                        return found, cand
                    return walk_term(b, qf.right)
                return False, None
            case Not(body):
                return walk(body, qf.body, shadowed)
            case Implies(p, q):
                found, cand = walk(p, qf.antecedent, shadowed)
                if found:
                    return found, cand
                return walk(q, qf.consequent, shadowed)
            case ForAll(v, body):
                return walk(body, qf.body, shadowed or v == x)
            case BoundedForAll(v, bound, body) | BoundedExists(v, bound, body):
                if not shadowed:
                    found, cand = walk_term(bound, qf.bound)
                    if found:
                        return found, cand
                return walk(body, qf.body, shadowed or v == x)
        return False, None

    found, cand = walk(phi, psi, False)
    return cand if found else None


def _match_q1(f: Formula, cost: Cost) -> MatchResult:
    # forall x A -> A[x := t]
    if not (isinstance(f, Implies) and isinstance(f.antecedent, ForAll)):
        return _NO
    x, phi, psi = f.antecedent.var, f.antecedent.body, f.consequent
    cost.symbol_comparisons += 1
    if x not in free_variables(phi):
        if eq_formulas(phi, psi, cost):
            return MatchResult(True, {"x": x, "A": phi, "t": ZERO})
        return _NO
    t = _leftmost_instance(phi, psi, x)
    if t is None:
        return _NO
    cost.symbol_comparisons += formula_size(phi)
    if eq_formulas(substitute(phi, x, t), psi, cost):
        return MatchResult(True, {"x": x, "A": phi, "t": t})
    return _NO


def _match_q2(f: Formula, cost: Cost) -> MatchResult:
    # forall x (A -> B) -> (forall x A -> forall x B)
    if not (isinstance(f, Implies) and isinstance(f.antecedent, ForAll) and isinstance(f.consequent, Implies)):
        return _NO
    q = f.antecedent
    if not isinstance(q.body, Implies):
        return _NO
    r = f.consequent
    if not (isinstance(r.antecedent, ForAll) and isinstance(r.consequent, ForAll)):
        return _NO
    if q.var != r.antecedent.var or q.var != r.consequent.var:
        return _NO
    if eq_formulas(r.antecedent.body, q.body.antecedent, cost) and eq_formulas(r.consequent.body, q.body.consequent, cost):
        return MatchResult(True, {"x": q.var, "A": q.body.antecedent, "B": q.body.consequent})
    return _NO


def _match_bq2(f: Formula, cost: Cost, exists_form: bool) -> MatchResult:
    # forall<= x b (A -> B) -> (Q<= x b A -> Q<= x b B)
    inner_type = BoundedExists if exists_form else BoundedForAll
    if not (isinstance(f, Implies) and isinstance(f.antecedent, BoundedForAll) and isinstance(f.consequent, Implies)):
        return _NO
    q = f.antecedent
    if not isinstance(q.body, Implies):
        return _NO
    r = f.consequent
    if not (isinstance(r.antecedent, inner_type) and isinstance(r.consequent, inner_type)):
        return _NO
    if q.var != r.antecedent.var or q.var != r.consequent.var:
        return _NO
    if not (eq_terms(q.bound, r.antecedent.bound, cost) and eq_terms(q.bound, r.consequent.bound, cost)):
        return _NO
    if eq_formulas(r.antecedent.body, q.body.antecedent, cost) and eq_formulas(r.consequent.body, q.body.consequent, cost):
        return MatchResult(True, {"x": q.var, "b": q.bound, "A": q.body.antecedent, "B": q.body.consequent})
    return _NO


def _match_bcong(f: Formula, cost: Cost, exists_form: bool) -> MatchResult:
    # b = b' -> (Q<= x b A -> Q<= x b' A)
    qtype = BoundedExists if exists_form else BoundedForAll
    if not (isinstance(f, Implies) and isinstance(f.antecedent, Eq) and isinstance(f.consequent, Implies)):
        return _NO
    b, b2 = f.antecedent.left, f.antecedent.right
    r = f.consequent
    if not (isinstance(r.antecedent, qtype) and isinstance(r.consequent, qtype)):
        return _NO
    if r.antecedent.var != r.consequent.var:
        return _NO
    if not (eq_terms(r.antecedent.bound, b, cost) and eq_terms(r.consequent.bound, b2, cost)):
        return _NO
    if eq_formulas(r.antecedent.body, r.consequent.body, cost):
        return MatchResult(True, {"x": r.antecedent.var, "b": b, "b'": b2, "A": r.antecedent.body})
    return _NO


def _match_eqrefl(f: Formula, cost: Cost) -> MatchResult:
    if isinstance(f, Eq) and eq_terms(f.left, f.right, cost):
        return MatchResult(True, {"t": f.left})
    return _NO


def _replaceable_term(a: Term, b: Term, s: Term, u: Term, cost: Cost) -> bool:
    """b arises from a by replacing some (possibly zero) occurrences of s by u."""
    if eq_terms(a, b, cost):
        return True
    if eq_terms(a, s, cost) and eq_terms(b, u, cost):
        return True
    if type(a) is not type(b):
        return False
    match a:
        case Succ(arg):
            return _replaceable_term(arg, b.arg, s, u, cost)
        case Plus(l, r) | Times(l, r):
            return _replaceable_term(l, b.left, s, u, cost) and _replaceable_term(r, b.right, s, u, cost)
        case DefFn(sym, args):
            if sym != b.symbol or len(args) != len(b.args):
                return False
            return all(_replaceable_term(x, y, s, u, cost) for x, y in zip(args, b.args))
        case _:
            return False


def _match_eqsubst(f: Formula, cost: Cost) -> MatchResult:
    # s = u -> (A -> A'), A and A' atomic
    if not (isinstance(f, Implies) and isinstance(f.antecedent, Eq) and isinstance(f.consequent, Implies)):
        return _NO
    s, u = f.antecedent.left, f.antecedent.right
    a, b = f.consequent.antecedent, f.consequent.consequent
    if not (isinstance(a, Eq) and isinstance(b, Eq)):
        return _NO
    if _replaceable_term(a.left, b.left, s, u, cost) and _replaceable_term(a.right, b.right, s, u, cost):
        return MatchResult(True, {"s": s, "u": u, "A": a, "A'": b})
    return _NO


def _match_qax(f: Formula, cost: Cost, index: int | None = None) -> MatchResult:
    axioms = robinson_axioms()
    if index is not None:
        if 1 <= index <= len(axioms) and eq_formulas(f, axioms[index - 1], cost):
            return MatchResult(True, {"index": index})
        return _NO
    for i, ax in enumerate(axioms, start=1):
        if eq_formulas(f, ax, cost):
            return MatchResult(True, {"index": i})
    return _NO


def _match_ind(f: Formula, cost: Cost) -> MatchResult:
    # A[x:=0] -> (forall x (A -> A[x:=S(x)]) -> forall x A)
    if not (isinstance(f, Implies) and isinstance(f.consequent, Implies)):
        return _NO
    base = f.antecedent
    mid, tail = f.consequent.antecedent, f.consequent.consequent
    if not (isinstance(mid, ForAll) and isinstance(mid.body, Implies) and isinstance(tail, ForAll)):
        return _NO
    x = tail.var
    if mid.var != x:
        return _NO
    a = tail.body
    if not eq_formulas(mid.body.antecedent, a, cost):
        return _NO
    if not eq_formulas(base, substitute(a, x, ZERO), cost):
        return _NO
    if not eq_formulas(mid.body.consequent, substitute(a, x, Succ(Var(x))), cost):
        return _NO
    return MatchResult(True, {"x": x, "A": a})


def _match_compute(theory: TheorySpec, f: Formula, cost: Cost) -> MatchResult:
    if not isinstance(f, Eq):
        return _NO
    if free_variables(f):
        return _NO
    cost.symbol_comparisons += formula_size(f)
    try:
        lv = eval_term_in(theory, f.left)
        rv = eval_term_in(theory, f.right)
    except (EvalBudgetExceeded, KeyError, ValueError):
        return _NO
    if lv == rv:
        return MatchResult(True, {"value": lv})
    return _NO


def match_schema(
    theory: TheorySpec,
    schema: str,
    f: Formula,
    index: int | None = None,
    cost: Cost = _NULL_COST,
) -> MatchResult:
    """Does formula f instantiate the named schema (for this theory)?"""
    ensure_recursion_headroom()
    match schema:
        case "P1":
            return _match_p1(f, cost)
        case "P2":
            return _match_p2(f, cost)
        case "P3":
            return _match_p3(f, cost)
        case "Q1":
            return _match_q1(f, cost)
        case "Q2":
            return _match_q2(f, cost)
        case "BQ2A":
            return _match_bq2(f, cost, exists_form=False)
        case "BQ2E":
            return _match_bq2(f, cost, exists_form=True)
        case "BCONGA":
            return _match_bcong(f, cost, exists_form=False)
        case "BCONGE":
            return _match_bcong(f, cost, exists_form=True)
        case "EQREFL":
            return _match_eqrefl(f, cost)
        case "EQSUBST":
            return _match_eqsubst(f, cost)
        case "QAX":
            return _match_qax(f, cost, index)
        case "IND":
            if not theory.induction:
                return MatchResult(False, reason="induction not enabled for this theory")
            return _match_ind(f, cost)
        case "COMPUTE":
            return _match_compute(theory, f, cost)
    raise ValueError(f"unknown schema {schema!r}")


# fixed search order: cheap structural matchers first, COMPUTE last
SEARCH_ORDER = (
    "EQREFL",
    "P1",
    "P3",
    "P2",
    "Q1",
    "Q2",
    "BQ2A",
    "BQ2E",
    "BCONGA",
    "BCONGE",
    "EQSUBST",
    "QAX",
    "IND",
    "COMPUTE",
)


def find_axiom_justification(theory: TheorySpec, f: Formula, cost: Cost = _NULL_COST) -> Justification | None:
    """Search the schemata and the theory's extra axioms for a justification of f."""
    for name in SEARCH_ORDER:
        if name == "IND" and not theory.induction:
            continue
        res = match_schema(theory, name, f, cost=cost)
        if res.ok:
            if name == "QAX":
                return AxiomJust("QAX", index=res.bindings["index"])
            if name == "COMPUTE":
                return ComputeJust(value=res.bindings["value"])
            if name in ("Q1", "EQREFL"):
                return AxiomJust(name, term=res.bindings["t"])
            return AxiomJust(name)
    for i, ax in enumerate(theory.extra_axioms, start=1):
        if eq_formulas(f, ax, cost):
            return TheoryAxiomJust(i)
    return None


# ---------------------------------------------------------------------------
# Stored-justification checking
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LineCheck:
    ok: bool
    reason: str = ""


def check_line(theory: TheorySpec, proof: Proof, i: int, cost: Cost = _NULL_COST) -> LineCheck:
    """Validate line i of the proof against its *stored* justification.

    A None justification is rejected here (the search-based verifier in the
    verifier module accepts any line that could be justified somehow).
    """
    if not 0 <= i < len(proof.lines):
        return LineCheck(False, f"line index {i} out of range")
    line = proof.lines[i]
    f = line.formula
    j = line.justification
    match j:
        case None:
            return LineCheck(False, "no stored justification")
        case AxiomJust(schema, index, term):
            if schema == "Q1" and term is not None:
                if isinstance(f, Implies) and isinstance(f.antecedent, ForAll):
                    expected = substitute(f.antecedent.body, f.antecedent.var, term)
                    if eq_formulas(expected, f.consequent, cost):
                        return LineCheck(True)
                return LineCheck(False, "not the stated Q1 instance")
            if schema == "EQREFL" and term is not None:
                if isinstance(f, Eq) and eq_terms(f.left, term, cost) and eq_terms(f.right, term, cost):
                    return LineCheck(True)
                return LineCheck(False, "not the stated EQREFL instance")
            res = match_schema(theory, schema, f, index=index, cost=cost)
            return LineCheck(res.ok, "" if res.ok else res.reason or f"not an instance of {schema}")
        case TheoryAxiomJust(index):
            if 1 <= index <= len(theory.extra_axioms) and eq_formulas(f, theory.extra_axioms[index - 1], cost):
                return LineCheck(True)
            return LineCheck(False, f"not theory axiom {index}")
        case MPJust(imp, ant):
            if not (0 <= imp < i and 0 <= ant < i):
                return LineCheck(False, "modus ponens premises must precede the line")
            big = proof.lines[imp].formula
            if not isinstance(big, Implies):
                return LineCheck(False, f"line {imp + 1} is not an implication")
            if not eq_formulas(big.antecedent, proof.lines[ant].formula, cost):
                return LineCheck(False, "antecedent mismatch")
            if not eq_formulas(big.consequent, f, cost):
                return LineCheck(False, "consequent mismatch")
            return LineCheck(True)
        case GenJust(src, var):
            if not 0 <= src < i:
                return LineCheck(False, "generalization source must precede the line")
            if isinstance(f, ForAll) and f.var == var and eq_formulas(f.body, proof.lines[src].formula, cost):
                return LineCheck(True)
            return LineCheck(False, "not a generalization of the source line")
        case BGenJust(src, var, bound):
            if not 0 <= src < i:
                return LineCheck(False, "generalization source must precede the line")
            if (
                isinstance(f, BoundedForAll)
                and f.var == var
                and eq_terms(f.bound, bound, cost)
                and eq_formulas(f.body, proof.lines[src].formula, cost)
            ):
                return LineCheck(True)
            return LineCheck(False, "not a bounded generalization of the source line")
        case ComputeJust(value):
            res = _match_compute(theory, f, cost)
            if not res.ok:
                return LineCheck(False, "not a valid Compute step")
            if value is not None and res.bindings["value"] != value:
                return LineCheck(False, f"stored value {value} differs from computed {res.bindings['value']}")
            return LineCheck(True)
    return LineCheck(False, f"unknown justification {j!r}")


def check_stored_proof(theory: TheorySpec, proof: Proof) -> LineCheck:
    for i in range(len(proof.lines)):
        res = check_line(theory, proof, i)
        if not res.ok:
            return LineCheck(False, f"line {i + 1}: {res.reason}")
    if not proof.lines:
        return LineCheck(False, "empty proof")
    return LineCheck(True)


# ---------------------------------------------------------------------------
# Proof text format
# ---------------------------------------------------------------------------
#
#   <idx>. <formula> ; <justification>
#
# indices are 1-based; justifications:
#   P1 | P2 | P3 | Q2 | BQ2A | BQ2E | BCONGA | BCONGE | EQSUBST | IND
#   Q1[t=<term>] | EQREFL[t=<term>]
#   QAX <i> | THAX <i> | MP <i> <j> | GEN <i> <var> | BGEN <i> <var> <bound>
#   COMPUTE | COMPUTE[v=<int>]
# MP <i> <j>: line i is the implication, line j its antecedent.


_JUST_LINE_RE = re.compile(r"^(\d+)\.\s(.*)\s;\s(.*)$")


def _print_justification(j: Justification | None) -> str:
    match j:
        case None:
            return "?"
        case AxiomJust("QAX", index, _):
            return f"QAX {index}"
        case AxiomJust(schema, _, term) if term is not None and schema in ("Q1", "EQREFL"):
            return f"{schema}[t={print_term(term)}]"
        case AxiomJust(schema, _, _):
            return schema
        case TheoryAxiomJust(index):
            return f"THAX {index}"
        case MPJust(imp, ant):
            return f"MP {imp + 1} {ant + 1}"
        case GenJust(src, var):
            return f"GEN {src + 1} {var}"
        case BGenJust(src, var, bound):
            return f"BGEN {src + 1} {var} {print_term(bound)}"
        case ComputeJust(None):
            return "COMPUTE"
        case ComputeJust(value):
            return f"COMPUTE[v={value}]"
    raise ValueError(f"unprintable justification {j!r}")


def print_proof_text(proof: Proof) -> str:
    out = []
    for i, line in enumerate(proof.lines, start=1):
        out.append(f"{i}. {print_formula(line.formula)} ; {_print_justification(line.justification)}")
    return "\n".join(out) + "\n"


def _parse_justification(text: str, arities: dict[str, int] | None) -> Justification | None:
    text = text.strip()
    if text == "?":
        return None
    if text in ("P1", "P2", "P3", "Q2", "BQ2A", "BQ2E", "BCONGA", "BCONGE", "EQSUBST", "IND"):
        return AxiomJust(text)
    if text == "COMPUTE":
        return ComputeJust()
    m = re.fullmatch(r"COMPUTE\[v=(\d+)\]", text)
    if m:
        return ComputeJust(value=int(m.group(1)))
    m = re.fullmatch(r"(Q1|EQREFL)\[t=(.*)\]", text)
    if m:
        return AxiomJust(m.group(1), term=parse_term(m.group(2), arities))
    m = re.fullmatch(r"QAX (\d+)", text)
    if m:
        return AxiomJust("QAX", index=int(m.group(1)))
    m = re.fullmatch(r"THAX (\d+)", text)
    if m:
        return TheoryAxiomJust(int(m.group(1)))
    m = re.fullmatch(r"MP (\d+) (\d+)", text)
    if m:
        return MPJust(int(m.group(1)) - 1, int(m.group(2)) - 1)
    m = re.fullmatch(r"GEN (\d+) ([a-z][a-z0-9']*)", text)
    if m:
        return GenJust(int(m.group(1)) - 1, m.group(2))
    m = re.fullmatch(r"BGEN (\d+) ([a-z][a-z0-9']*) (.*)", text)
    if m:
        return BGenJust(int(m.group(1)) - 1, m.group(2), parse_term(m.group(3), arities))
    raise ValueError(f"unparsable justification {text!r}")


def parse_proof_text(text: str, deffn_arities: dict[str, int] | None = None) -> Proof:
    """Parse the proof text format; raises ValueError with the offending line."""
    lines: list[ProofLine] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        m = _JUST_LINE_RE.match(raw)
        if m is None:
            raise ValueError(f"proof line {lineno}: expected '<idx>. <formula> ; <justification>'")
        idx = int(m.group(1))
        if idx != len(lines) + 1:
            raise ValueError(f"proof line {lineno}: index {idx} out of order (expected {len(lines) + 1})")
        try:
            formula = parse_formula(m.group(2), deffn_arities)
            just = _parse_justification(m.group(3), deffn_arities)
        except ValueError as e:
            raise ValueError(f"proof line {lineno}: {e}") from e
        lines.append(ProofLine(formula, just))
    if not lines:
        raise ValueError("empty proof text")
    return Proof(tuple(lines))
