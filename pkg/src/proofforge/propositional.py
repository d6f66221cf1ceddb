"""Propositional layer: tautologies, resolution, translations, proof length.

Formulas are variable-indexed (PVar(0), PVar(1), ...) with constants, so a
formula over n variables uses indices dense in [0, n).  The brute-force
tautology oracle exhausts the truth table (numpy-vectorized, chunked, capped
at 24 variables by default).

Clauses are frozensets of DIMACS-style literals: variable i appears as i+1
positively and -(i+1) negatively.  Resolution proofs are step lists:

    Input(k)              cite clause k of the clause set under refutation
    Resolve(i, j, v)      resolve derived clauses i and j on pivot variable v
                          (v positive in i, negative in j)
    Extend(v, a, b)       introduce fresh variable v with v <-> (a and b),
                          appending its three defining clauses
                          {-v, a}, {-v, b}, {v, -a, -b}   [extended mode]
    Import(clause)        cite an externally available clause, admitted by a
                          callback [theorem-augmented mode]

Indices count derived clauses from 0 in order; Extend appends three.  A
refutation must end with the empty clause.  The line-oriented text format
uses 1-based DIMACS variable numbers:

    i <idx>
    r <i> <j> <pivot>
    e <var> <a> <b>
    a <lit> ... <lit> 0

Tautology proofs refute the Tseitin clausification of the negated formula.
The Delta0 translation maps an arithmetic formula with one free variable x
to a propositional formula over selector variables x_0..x_n guarded by an
exactly-one constraint; bounded quantifiers expand to finite conjunctions
and disjunctions, and ground atoms collapse to constants.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Union

import numpy as np

from .syntax import (
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
    free_variables,
    is_delta0,
)

# ---------------------------------------------------------------------------
# propositional formulas
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PVar:
    index: int


@dataclass(frozen=True)
class PConst:
    value: bool


@dataclass(frozen=True)
class PNot:
    body: "PropFormula"


@dataclass(frozen=True)
class PAnd:
    left: "PropFormula"
    right: "PropFormula"


@dataclass(frozen=True)
class POr:
    left: "PropFormula"
    right: "PropFormula"


@dataclass(frozen=True)
class PImp:
    left: "PropFormula"
    right: "PropFormula"


PropFormula = Union[PVar, PConst, PNot, PAnd, POr, PImp]

TRUE = PConst(True)
FALSE = PConst(False)


def prop_vars(f: PropFormula) -> set[int]:
    out: set[int] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        match g:
            case PVar(i):
                out.add(i)
            case PNot(b):
                stack.append(b)
            case PAnd(a, b) | POr(a, b) | PImp(a, b):
                stack.append(a)
                stack.append(b)
    return out


def prop_size(f: PropFormula) -> int:
    """Connective-and-atom count (parentheses don't count)."""
    match f:
        case PVar(_) | PConst(_):
            return 1
        case PNot(b):
            return 1 + prop_size(b)
        case PAnd(a, b) | POr(a, b) | PImp(a, b):
            return 1 + prop_size(a) + prop_size(b)
    raise TypeError(f"not a propositional formula: {f!r}")


def big_and(parts: Iterable[PropFormula]) -> PropFormula:
    acc: PropFormula | None = None
    for p in parts:
        acc = p if acc is None else PAnd(acc, p)
    return acc if acc is not None else TRUE


def big_or(parts: Iterable[PropFormula]) -> PropFormula:
    acc: PropFormula | None = None
    for p in parts:
        acc = p if acc is None else POr(acc, p)
    return acc if acc is not None else FALSE


def print_prop(f: PropFormula) -> str:
    match f:
        case PVar(i):
            return f"x{i}"
        case PConst(v):
            return "T" if v else "F"
        case PNot(b):
            return f"!({print_prop(b)})"
        case PAnd(a, b):
            return f"({print_prop(a)} & {print_prop(b)})"
        case POr(a, b):
            return f"({print_prop(a)} | {print_prop(b)})"
        case PImp(a, b):
            return f"({print_prop(a)} -> {print_prop(b)})"
    raise TypeError(f"not a propositional formula: {f!r}")


_PROP_TOKEN = re.compile(r"\s*(?:(x\d+)|(T|F)|(->)|([!&|()]))")


def parse_prop(text: str) -> PropFormula:
    """x<i>, T, F, !, &, |, ->, parentheses.  -> loosest and right-assoc."""
    toks: list[str] = []
    i = 0
    while i < len(text):
        m = _PROP_TOKEN.match(text, i)
        if m is None:
            if text[i:].strip() == "":
                break
            raise ValueError(f"bad character {text[i:].lstrip()[0]!r} in propositional formula")
        i = m.end()
        toks.append(next(g for g in m.groups() if g is not None))
    pos = 0

    def peek() -> str | None:
        return toks[pos] if pos < len(toks) else None

    def eat(t: str) -> None:
        nonlocal pos
        if peek() != t:
            raise ValueError(f"expected {t!r} at token {pos}")
        pos += 1

    def imp() -> PropFormula:
        a = disj()
        if peek() == "->":
            eat("->")
            return PImp(a, imp())
        return a

    def disj() -> PropFormula:
        a = conj()
        while peek() == "|":
            eat("|")
            a = POr(a, conj())
        return a

    def conj() -> PropFormula:
        a = atom_chain()
        while peek() == "&":
            eat("&")
            a = PAnd(a, atom_chain())
        return a

    def atom_chain() -> PropFormula:
        t = peek()
        if t == "!":
            eat("!")
            return PNot(atom_chain())
        if t == "(":
            eat("(")
            f = imp()
            eat(")")
            return f
        if t == "T":
            eat("T")
            return TRUE
        if t == "F":
            eat("F")
            return FALSE
        if t is not None and t.startswith("x"):
            eat(t)
            return PVar(int(t[1:]))
        raise ValueError(f"unexpected token {t!r}")

    f = imp()
    if pos != len(toks):
        raise ValueError(f"trailing tokens after formula: {toks[pos:]}")
    return f


# ---------------------------------------------------------------------------
# brute-force tautology oracle
# ---------------------------------------------------------------------------

MAX_BRUTE_VARS = 24
_CHUNK_BITS = 18


class TooManyVariables(ValueError):
    pass


def _eval_chunk(f: PropFormula, rows: np.ndarray) -> np.ndarray:
    match f:
        case PVar(i):
            return ((rows >> i) & 1).astype(bool)
        case PConst(v):
            return np.full(rows.shape, v, dtype=bool)
        case PNot(b):
            return ~_eval_chunk(b, rows)
        case PAnd(a, b):
            return _eval_chunk(a, rows) & _eval_chunk(b, rows)
        case POr(a, b):
            return _eval_chunk(a, rows) | _eval_chunk(b, rows)
        case PImp(a, b):
            return ~_eval_chunk(a, rows) | _eval_chunk(b, rows)
    raise TypeError(f"not a propositional formula: {f!r}")


def eval_prop(f: PropFormula, assignment: dict[int, bool]) -> bool:
    match f:
        case PVar(i):
            return assignment[i]
        case PConst(v):
            return v
        case PNot(b):
            return not eval_prop(b, assignment)
        case PAnd(a, b):
            return eval_prop(a, assignment) and eval_prop(b, assignment)
        case POr(a, b):
            return eval_prop(a, assignment) or eval_prop(b, assignment)
        case PImp(a, b):
            return (not eval_prop(a, assignment)) or eval_prop(b, assignment)
    raise TypeError(f"not a propositional formula: {f!r}")


def falsifying_assignment(f: PropFormula, max_vars: int = MAX_BRUTE_VARS) -> dict[int, bool] | None:
    """First assignment (row order) making f false, or None if f is a tautology."""
    vs = prop_vars(f)
    n = (max(vs) + 1) if vs else 0
    if n > max_vars:
        raise TooManyVariables(f"{n} variables exceeds the brute-force cap of {max_vars}")
    total = 1 << n
    step = 1 << _CHUNK_BITS
    for start in range(0, total, step):
        rows = np.arange(start, min(start + step, total), dtype=np.int64)
        vals = _eval_chunk(f, rows)
        if not vals.all():
            row = int(rows[int(np.argmin(vals))])
            return {i: bool((row >> i) & 1) for i in range(n)}
    return None


def is_tautology_bruteforce(f: PropFormula, max_vars: int = MAX_BRUTE_VARS) -> bool:
    return falsifying_assignment(f, max_vars) is None


# ---------------------------------------------------------------------------
# clauses
# ---------------------------------------------------------------------------

Clause = frozenset  # of int literals: variable i is +(i+1) / -(i+1)


def lit(var: int, positive: bool) -> int:
    return (var + 1) if positive else -(var + 1)


def lit_var(literal: int) -> int:
    return abs(literal) - 1


def is_tautological_clause(c: Clause) -> bool:
    return any(-l in c for l in c)


@dataclass(frozen=True)
class ClauseSet:
    clauses: tuple[Clause, ...]
    n_vars: int

    def __post_init__(self) -> None:
        for c in self.clauses:
            for l in c:
                if l == 0 or lit_var(l) >= self.n_vars:
                    raise ValueError(f"literal {l} out of range for {self.n_vars} variables")

    @property
    def tautological_flags(self) -> tuple[bool, ...]:
        return tuple(is_tautological_clause(c) for c in self.clauses)


def to_dimacs(cs: ClauseSet) -> str:
    lines = [f"p cnf {cs.n_vars} {len(cs.clauses)}"]
    for c in cs.clauses:
        lines.append(" ".join(str(l) for l in sorted(c, key=abs)) + " 0")
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> ClauseSet:
    n_vars = 0
    clauses: list[Clause] = []
    declared: int | None = None
    pending: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad problem line: {line!r}")
            n_vars, declared = int(parts[2]), int(parts[3])
            continue
        for tok in line.split():
            v = int(tok)
            if v == 0:
                clauses.append(frozenset(pending))
                pending = []
            else:
                pending.append(v)
                n_vars = max(n_vars, abs(v))
    if pending:
        raise ValueError("last clause not terminated by 0")
    if declared is not None and declared != len(clauses):
        raise ValueError(f"header declares {declared} clauses, found {len(clauses)}")
    return ClauseSet(tuple(clauses), n_vars)


def brute_force_satisfiable(cs: ClauseSet, max_vars: int = 20) -> bool:
    if cs.n_vars > max_vars:
        raise TooManyVariables(f"{cs.n_vars} variables exceeds the SAT brute-force cap of {max_vars}")
    if any(len(c) == 0 for c in cs.clauses):
        return False
    total = 1 << cs.n_vars
    step = 1 << _CHUNK_BITS
    for start in range(0, total, step):
        rows = np.arange(start, min(start + step, total), dtype=np.int64)
        ok = np.ones(rows.shape, dtype=bool)
        for c in cs.clauses:
            sat = np.zeros(rows.shape, dtype=bool)
            for l in c:
                col = ((rows >> (abs(l) - 1)) & 1).astype(bool)
                sat |= col if l > 0 else ~col
            ok &= sat
            if not ok.any():
                break
        if ok.any():
            return True
    return False


# ---------------------------------------------------------------------------
# resolution proofs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Input:
    index: int


@dataclass(frozen=True)
class Resolve:
    left: int
    right: int
    pivot: int  # variable index; positive in `left`, negative in `right`


@dataclass(frozen=True)
class Extend:
    var: int
    a: int
    b: int  # literals; defines var <-> (a and b)


@dataclass(frozen=True)
class Import:
    clause: Clause


ResolutionStep = Union[Input, Resolve, Extend, Import]


@dataclass(frozen=True)
class ResolutionProof:
    steps: tuple[ResolutionStep, ...]


@dataclass(frozen=True)
class ResolutionCheck:
    ok: bool
    reason: str = ""
    derived: tuple[Clause, ...] = ()


def check_resolution(
    cs: ClauseSet,
    proof: ResolutionProof,
    extended: bool = False,
    available: Callable[[Clause], bool] | None = None,
) -> ResolutionCheck:
    """Validate a refutation.  Invalid proofs report a reason, never raise.

    `extended` admits Extend steps (fresh variable, exactly the three
    defining clauses for v <-> (a and b)).  `available` admits Import steps
    whose clause the callback vouches for (the theorem-augmented system).
    """
    derived: list[Clause] = []
    used_vars = {lit_var(l) for c in cs.clauses for l in c} | set(range(cs.n_vars))
    for n, step in enumerate(proof.steps):
        match step:
            case Input(k):
                if not 0 <= k < len(cs.clauses):
                    return ResolutionCheck(False, f"step {n}: input index {k} out of range", tuple(derived))
                derived.append(cs.clauses[k])
            case Resolve(i, j, p):
                if not (0 <= i < len(derived) and 0 <= j < len(derived)):
                    return ResolutionCheck(False, f"step {n}: clause index out of range", tuple(derived))
                pos, neg = lit(p, True), lit(p, False)
                ci, cj = derived[i], derived[j]
                if pos not in ci:
                    return ResolutionCheck(False, f"step {n}: pivot x{p} not positive in clause {i}", tuple(derived))
                if neg not in cj:
                    return ResolutionCheck(False, f"step {n}: pivot x{p} not negative in clause {j}", tuple(derived))
                derived.append((ci - {pos}) | (cj - {neg}))
            case Extend(v, a, b):
                if not extended:
                    return ResolutionCheck(False, f"step {n}: extension not admitted in this system", tuple(derived))
                if v in used_vars:
                    return ResolutionCheck(False, f"step {n}: extension variable x{v} is not fresh", tuple(derived))
                if lit_var(a) == v or lit_var(b) == v or a == 0 or b == 0:
                    return ResolutionCheck(False, f"step {n}: ill-formed extension definition", tuple(derived))
                used_vars.add(v)
                nv = lit(v, False)
                pv = lit(v, True)
                derived.append(frozenset({nv, a}))
                derived.append(frozenset({nv, b}))
                derived.append(frozenset({pv, -a, -b}))
            case Import(c):
                if available is None:
                    return ResolutionCheck(False, f"step {n}: clause import not admitted in this system", tuple(derived))
                if not available(c):
                    return ResolutionCheck(False, f"step {n}: imported clause not available", tuple(derived))
                used_vars.update(lit_var(l) for l in c)
                derived.append(c)
            case _:
                return ResolutionCheck(False, f"step {n}: unknown step kind", tuple(derived))
    if not derived:
        return ResolutionCheck(False, "empty proof", ())
    if derived[-1] != frozenset():
        return ResolutionCheck(False, "final clause is not empty", tuple(derived))
    return ResolutionCheck(True, "", tuple(derived))


def print_resolution_text(proof: ResolutionProof) -> str:
    out: list[str] = []
    for step in proof.steps:
        match step:
            case Input(k):
                out.append(f"i {k}")
            case Resolve(i, j, p):
                out.append(f"r {i} {j} {p + 1}")
            case Extend(v, a, b):
                out.append(f"e {v + 1} {a} {b}")
            case Import(c):
                out.append("a " + " ".join(str(l) for l in sorted(c, key=abs)) + " 0")
    return "\n".join(out) + "\n"


def parse_resolution_text(text: str) -> ResolutionProof:
    steps: list[ResolutionStep] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            match parts:
                case ["i", k]:
                    steps.append(Input(int(k)))
                case ["r", i, j, p]:
                    pv = int(p)
                    if pv < 1:
                        raise ValueError("pivot must be a positive variable number")
                    steps.append(Resolve(int(i), int(j), pv - 1))
                case ["e", v, a, b]:
                    vv = int(v)
                    if vv < 1:
                        raise ValueError("extension variable must be positive")
                    steps.append(Extend(vv - 1, int(a), int(b)))
                case ["a", *lits, "0"]:
                    steps.append(Import(frozenset(int(l) for l in lits)))
                case _:
                    raise ValueError(f"unrecognized step {line!r}")
        except ValueError as e:
            raise ValueError(f"line {ln}: {e}") from None
    return ResolutionProof(tuple(steps))


# ---------------------------------------------------------------------------
# Tseitin clausification
# ---------------------------------------------------------------------------


def _fold(f: PropFormula) -> PropFormula:
    match f:
        case PVar(_) | PConst(_):
            return f
        case PNot(b):
            fb = _fold(b)
            if isinstance(fb, PConst):
                return PConst(not fb.value)
            return PNot(fb)
        case PAnd(a, b):
            fa, fb = _fold(a), _fold(b)
            if isinstance(fa, PConst):
                return fb if fa.value else FALSE
            if isinstance(fb, PConst):
                return fa if fb.value else FALSE
            return PAnd(fa, fb)
        case POr(a, b):
            fa, fb = _fold(a), _fold(b)
            if isinstance(fa, PConst):
                return TRUE if fa.value else fb
            if isinstance(fb, PConst):
                return TRUE if fb.value else fa
            return POr(fa, fb)
        case PImp(a, b):
            fa, fb = _fold(a), _fold(b)
            if isinstance(fa, PConst):
                return fb if fa.value else TRUE
            if isinstance(fb, PConst):
                return TRUE if fb.value else PNot(fa)
            return PImp(fa, fb)
    raise TypeError(f"not a propositional formula: {f!r}")


@dataclass(frozen=True)
class TseitinResult:
    clause_set: ClauseSet
    root_literal: int | None  # None when the formula folded to a constant
    n_input_vars: int


def tseitin(f: PropFormula) -> TseitinResult:
    """CNF asserting f, via one definitional variable per connective node.

    Deterministic: auxiliary variables are numbered in first-visit postorder
    after the input variables; identical subformulas share a definition.
    """
    g = _fold(f)
    vs = prop_vars(g)
    n_inputs = (max(vs) + 1) if vs else 0
    if isinstance(g, PConst):
        if g.value:
            return TseitinResult(ClauseSet((), n_inputs), None, n_inputs)
        return TseitinResult(ClauseSet((frozenset(),), n_inputs), None, n_inputs)
    clauses: list[Clause] = []
    memo: dict[PropFormula, int] = {}
    counter = [n_inputs]

    def walk(node: PropFormula) -> int:
        """Literal equivalent to the node."""
        hit = memo.get(node)
        if hit is not None:
            return hit
        match node:
            case PVar(i):
                l = lit(i, True)
            case PNot(b):
                l = -walk(b)
            case PAnd(a, b):
                la, lb = walk(a), walk(b)
                v = counter[0]
                counter[0] += 1
                pv = lit(v, True)
                clauses.append(frozenset({-pv, la}))
                clauses.append(frozenset({-pv, lb}))
                clauses.append(frozenset({pv, -la, -lb}))
                l = pv
            case POr(a, b):
                la, lb = walk(a), walk(b)
                v = counter[0]
                counter[0] += 1
                pv = lit(v, True)
                clauses.append(frozenset({-pv, la, lb}))
                clauses.append(frozenset({pv, -la}))
                clauses.append(frozenset({pv, -lb}))
                l = pv
            case PImp(a, b):
                la, lb = walk(a), walk(b)
                v = counter[0]
                counter[0] += 1
                pv = lit(v, True)
                clauses.append(frozenset({-pv, -la, lb}))
                clauses.append(frozenset({pv, la}))
                clauses.append(frozenset({pv, -lb}))
                l = pv
            case PConst(_):
                raise AssertionError("constants were folded away")
            case _:
                raise TypeError(f"not a propositional formula: {node!r}")
        memo[node] = l
        return l

    root = walk(g)
    clauses.append(frozenset({root}))
    return TseitinResult(ClauseSet(tuple(clauses), counter[0]), root, n_inputs)


def negation_clauses(f: PropFormula) -> TseitinResult:
    """Clause set satisfiable iff f is falsifiable; refuting it certifies f."""
    return tseitin(PNot(f))


# ---------------------------------------------------------------------------
# Davis–Putnam refutation builder (the workhorse translator)
# ---------------------------------------------------------------------------


def dp_refutation(cs: ClauseSet, var_order: list[int] | None = None) -> ResolutionProof | None:
    """Resolution refutation by variable elimination, or None if satisfiable.

    Complete: eliminating every variable of an unsatisfiable set must surface
    the empty clause.  The proof cites every input clause first, then records
    each non-tautological resolvent; it is pruned afterwards to the steps the
    empty clause actually uses.
    """
    steps: list[ResolutionStep] = [Input(k) for k in range(len(cs.clauses))]
    index_of: dict[Clause, int] = {}
    alive: dict[Clause, int] = {}
    for k, c in enumerate(cs.clauses):
        if c not in index_of:
            index_of[c] = k
        if not is_tautological_clause(c) and c not in alive:
            alive[c] = index_of[c]
        if c == frozenset():
            return _prune_refutation(cs, ResolutionProof(tuple(steps[: index_of[c] + 1])))
    order = var_order if var_order is not None else list(range(cs.n_vars))
    for v in order:
        pos_l, neg_l = lit(v, True), lit(v, False)
        pos = [(c, i) for c, i in alive.items() if pos_l in c]
        neg = [(c, i) for c, i in alive.items() if neg_l in c]
        for cp, ip in pos:
            for cn, jn in neg:
                r = (cp - {pos_l}) | (cn - {neg_l})
                if is_tautological_clause(r):
                    continue
                if r in index_of:
                    continue
                steps.append(Resolve(ip, jn, v))
                idx = len(steps) - 1
                index_of[r] = idx
                alive[r] = idx
                if r == frozenset():
                    return _prune_refutation(cs, ResolutionProof(tuple(steps)))
        for c, _ in pos:
            alive.pop(c, None)
        for c, _ in neg:
            alive.pop(c, None)
    return None


def _prune_refutation(cs: ClauseSet, proof: ResolutionProof) -> ResolutionProof:
    """Keep only steps reachable from the final (empty-clause) step."""
    steps = proof.steps
    needed: set[int] = set()
    stack = [len(steps) - 1]
    while stack:
        i = stack.pop()
        if i in needed:
            continue
        needed.add(i)
        s = steps[i]
        if isinstance(s, Resolve):
            stack.append(s.left)
            stack.append(s.right)
    order = sorted(needed)
    remap = {old: new for new, old in enumerate(order)}
    out: list[ResolutionStep] = []
    for old in order:
        s = steps[old]
        if isinstance(s, Resolve):
            out.append(Resolve(remap[s.left], remap[s.right], s.pivot))
        else:
            out.append(s)
    return ResolutionProof(tuple(out))


# ---------------------------------------------------------------------------
# proof systems as handles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SPMeasure:
    """Minimal accepted proof size, or the cap it exceeded."""

    value: int | None
    exceeds_cap: bool
    cap: int


@dataclass(frozen=True)
class ProofSystemHandle:
    """Cook–Reckhow style: a total verifier plus a proof-length functional."""

    name: str
    verify: Callable[[bytes, PropFormula], bool]
    s_p: Callable[[PropFormula, int], SPMeasure]


def _resolution_verify(extended: bool) -> Callable[[bytes, PropFormula], bool]:
    def verify(proof_bytes: bytes, alpha: PropFormula) -> bool:
        try:
            proof = parse_resolution_text(proof_bytes.decode("utf-8", errors="strict"))
        except (ValueError, UnicodeDecodeError):
            return False
        cs = negation_clauses(alpha).clause_set
        return check_resolution(cs, proof, extended=extended).ok

    return verify


def min_refutation_steps(cs: ClauseSet, cap: int, node_cap: int = 250_000) -> SPMeasure:
    """Minimal refutation step count by iterative-deepening enumeration."""
    nodes = [0]
    capped = [False]

    def dfs(derived: list[Clause], depth_left: int) -> bool:
        nodes[0] += 1
        if nodes[0] > node_cap:
            capped[0] = True
            return False
        if derived and derived[-1] == frozenset():
            return True
        if depth_left == 0:
            return False
        have = set(derived)
        for k, c in enumerate(cs.clauses):
            if c not in have:
                if dfs(derived + [c], depth_left - 1):
                    return True
        for i, ci in enumerate(derived):
            for j, cj in enumerate(derived):
                for l in ci:
                    if l > 0 and -l in cj:
                        r = (ci - {l}) | (cj - {-l})
                        if r not in have:
                            if dfs(derived + [r], depth_left - 1):
                                return True
        return False

    for depth in range(1, cap + 1):
        if dfs([], depth):
            return SPMeasure(depth, False, cap)
        if capped[0]:
            return SPMeasure(None, True, cap)
    return SPMeasure(None, True, cap)


def resolution_system() -> ProofSystemHandle:
    def s_p(alpha: PropFormula, cap: int) -> SPMeasure:
        cs = negation_clauses(alpha).clause_set
        return min_refutation_steps(cs, cap)

    return ProofSystemHandle("resolution", _resolution_verify(extended=False), s_p)


def extended_resolution_system() -> ProofSystemHandle:
    # enumeration reuses the resolution search: extension steps can only help
    # on larger instances than a desk cap reaches, and any resolution proof
    # is already an extended-resolution proof, so the cap-bounded minimum
    # never increases.
    def s_p(alpha: PropFormula, cap: int) -> SPMeasure:
        cs = negation_clauses(alpha).clause_set
        return min_refutation_steps(cs, cap)

    return ProofSystemHandle("extended-resolution", _resolution_verify(extended=True), s_p)


def truth_table_system() -> ProofSystemHandle:
    """Proof = the serialized full truth table: one '<bits> <0|1>' row per line."""

    def verify(proof_bytes: bytes, alpha: PropFormula) -> bool:
        try:
            text = proof_bytes.decode("utf-8", errors="strict")
        except UnicodeDecodeError:
            return False
        vs = prop_vars(alpha)
        n = (max(vs) + 1) if vs else 0
        if n > MAX_BRUTE_VARS:
            return False
        rows = [ln for ln in text.splitlines() if ln.strip()]
        if len(rows) != (1 << n):
            return False
        for row_index, row in enumerate(rows):
            parts = row.split()
            if len(parts) != 2 or parts[1] not in ("0", "1"):
                return False
            canonical = "".join("1" if (row_index >> i) & 1 else "0" for i in range(n)) if n else "-"
            if parts[0] != canonical:
                return False
            value = eval_prop(alpha, {i: bool((row_index >> i) & 1) for i in range(n)})
            if parts[1] != ("1" if value else "0"):
                return False
            if not value:
                return False
        return True

    def s_p(alpha: PropFormula, cap: int) -> SPMeasure:
        vs = prop_vars(alpha)
        n = (max(vs) + 1) if vs else 0
        size = (1 << n) * (max(n, 1) + 1)
        if not is_tautology_bruteforce(alpha):
            return SPMeasure(None, False, cap)
        return SPMeasure(size, size > cap, cap)

    return ProofSystemHandle("truth-table", verify, s_p)


def print_truth_table_proof(alpha: PropFormula) -> str:
    vs = prop_vars(alpha)
    n = (max(vs) + 1) if vs else 0
    lines = []
    for row in range(1 << n):
        bits = "".join("1" if (row >> i) & 1 else "0" for i in range(n)) if n else "-"
        val = eval_prop(alpha, {i: bool((row >> i) & 1) for i in range(n)})
        lines.append(f"{bits} {1 if val else 0}")
    return "\n".join(lines) + "\n"


def taut_proof_check(system: ProofSystemHandle, proof_bytes: bytes, alpha: PropFormula) -> bool:
    return system.verify(proof_bytes, alpha)


def measure_s_p(system: ProofSystemHandle, alpha: PropFormula, cap: int) -> SPMeasure:
    return system.s_p(alpha, cap)


# ---------------------------------------------------------------------------
# the theorem-augmented system
# ---------------------------------------------------------------------------


class TheoremClauseRegistry:
    """Lazily answers \"is this clause a translation instance of a registered
    theorem?\" — the full set of translations is never materialized.

    Registered theorems are arithmetic formulas with one free variable; a
    clause is available if it belongs to the Tseitin clausification of some
    registered translation at some bound n <= max_bound, laid out at a caller
    -chosen variable offset.
    """

    def __init__(self, max_bound: int = 6):
        self.max_bound = max_bound
        self._theorems: list[Formula] = []
        self._cache: dict[tuple[int, int, int], frozenset[Clause]] = {}

    def register(self, theorem: Formula) -> int:
        self._theorems.append(theorem)
        return len(self._theorems) - 1

    def clauses_for(self, theorem_index: int, n: int, var_offset: int) -> frozenset[Clause]:
        key = (theorem_index, n, var_offset)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        alpha = translate_delta0(self._theorems[theorem_index], n=n)
        shifted = _shift_vars(alpha, var_offset)
        ts = tseitin(shifted)
        out = frozenset(ts.clause_set.clauses)
        self._cache[key] = out
        return out

    def available(self, clause: Clause, var_offsets: Iterable[int] = (0,)) -> bool:
        for ti in range(len(self._theorems)):
            for n in range(1, self.max_bound + 1):
                for off in var_offsets:
                    if clause in self.clauses_for(ti, n, off):
                        return True
        return False


def _shift_vars(f: PropFormula, offset: int) -> PropFormula:
    match f:
        case PVar(i):
            return PVar(i + offset)
        case PConst(_):
            return f
        case PNot(b):
            return PNot(_shift_vars(b, offset))
        case PAnd(a, b):
            return PAnd(_shift_vars(a, offset), _shift_vars(b, offset))
        case POr(a, b):
            return POr(_shift_vars(a, offset), _shift_vars(b, offset))
        case PImp(a, b):
            return PImp(_shift_vars(a, offset), _shift_vars(b, offset))
    raise TypeError(f"not a propositional formula: {f!r}")


def theorem_augmented_system(registry: TheoremClauseRegistry, var_offsets: Iterable[int] = (0,)) -> ProofSystemHandle:
    """Extended resolution plus Import steps vouched for by the registry."""

    offsets = tuple(var_offsets)

    def verify(proof_bytes: bytes, alpha: PropFormula) -> bool:
        try:
            proof = parse_resolution_text(proof_bytes.decode("utf-8", errors="strict"))
        except (ValueError, UnicodeDecodeError):
            return False
        cs = negation_clauses(alpha).clause_set
        return check_resolution(
            cs, proof, extended=True, available=lambda c: registry.available(c, offsets)
        ).ok

    def s_p(alpha: PropFormula, cap: int) -> SPMeasure:
        cs = negation_clauses(alpha).clause_set
        return min_refutation_steps(cs, cap)

    return ProofSystemHandle("theorem-augmented-extended-resolution", verify, s_p)


# ---------------------------------------------------------------------------
# Delta0 translation
# ---------------------------------------------------------------------------


class TranslationError(ValueError):
    pass


def _term_value_cases(t: Term, x: str, n: int, env: dict[str, int]) -> list[tuple[int, PropFormula]]:
    """Possible values of t with their selector conditions (TRUE if forced)."""
    match t:
        case Zero():
            return [(0, TRUE)]
        case Var(name):
            if name == x:
                return [(i, PVar(i)) for i in range(n + 1)]
            if name in env:
                return [(env[name], TRUE)]
            raise TranslationError(f"unbound variable {name!r} in translation")
        case Succ(arg):
            return [(v + 1, c) for v, c in _term_value_cases(arg, x, n, env)]
        case Plus(left, right):
            return _combine(_term_value_cases(left, x, n, env), _term_value_cases(right, x, n, env), lambda a, b: a + b)
        case Times(left, right):
            return _combine(_term_value_cases(left, x, n, env), _term_value_cases(right, x, n, env), lambda a, b: a * b)
        case DefFn(symbol, _):
            raise TranslationError(f"definitional symbol {symbol!r} has no propositional translation")
    raise TypeError(f"not a term: {t!r}")


def _combine(
    left: list[tuple[int, PropFormula]],
    right: list[tuple[int, PropFormula]],
    op: Callable[[int, int], int],
) -> list[tuple[int, PropFormula]]:
    byval: dict[int, PropFormula] = {}
    for v1, c1 in left:
        for v2, c2 in right:
            v = op(v1, v2)
            cond = c1 if isinstance(c2, PConst) and c2.value else (c2 if isinstance(c1, PConst) and c1.value else PAnd(c1, c2))
            prev = byval.get(v)
            byval[v] = cond if prev is None else POr(prev, cond)
    return sorted(byval.items())


def _closed_term_value(t: Term, env: dict[str, int]) -> int:
    match t:
        case Zero():
            return 0
        case Var(name):
            if name in env:
                return env[name]
            raise TranslationError(f"quantifier bound mentions {name!r}")
        case Succ(arg):
            return _closed_term_value(arg, env) + 1
        case Plus(a, b):
            return _closed_term_value(a, env) + _closed_term_value(b, env)
        case Times(a, b):
            return _closed_term_value(a, env) * _closed_term_value(b, env)
    raise TranslationError("quantifier bound is not a closed base term")


def translate_delta0(A: Formula, x: str | None = None, n: int = 1) -> PropFormula:
    """The selector-variable translation at bound n.

    x is represented by selector variables x_0..x_n (indices 0..n); the
    result is (exactly-one guard) -> expansion, a tautology iff A holds at
    every x in {0..n}.  Bounds inside A must be closed terms, the variable x
    itself, or a previously bound variable.
    """
    if not is_delta0(A):
        raise TranslationError("formula is not Delta0")
    fv = free_variables(A)
    if x is None:
        if len(fv) != 1:
            raise TranslationError(f"need exactly one free variable, got {sorted(fv)}")
        x = next(iter(fv))
    elif fv != {x}:
        raise TranslationError(f"free variables {sorted(fv)} are not exactly {{{x!r}}}")

    def tr(g: Formula, env: dict[str, int]) -> PropFormula:
        match g:
            case Eq(left, right):
                lcases = _term_value_cases(left, x, n, env)
                rcases = _term_value_cases(right, x, n, env)
                rmap = dict(rcases)
                parts: list[PropFormula] = []
                for v, c1 in lcases:
                    c2 = rmap.get(v)
                    if c2 is None:
                        continue
                    parts.append(_fold(PAnd(c1, c2)))
                return _fold(big_or(parts))
            case Not(body):
                return _fold(PNot(tr(body, env)))
            case Implies(a, b):
                return _fold(PImp(tr(a, env), tr(b, env)))
            case BoundedForAll(v, bound, body):
                return _fold(big_and(_quantifier_cases(v, bound, body, env, tr, exists=False)))
            case BoundedExists(v, bound, body):
                return _fold(big_or(_quantifier_cases(v, bound, body, env, tr, exists=True)))
            case ForAll(_, _):
                raise TranslationError("unbounded quantifier in a Delta0 formula")
        raise TypeError(f"not a formula: {g!r}")

    def _quantifier_cases(v, bound, body, env, tr, exists: bool) -> list[PropFormula]:
        if bound == Var(x):
            # value i admissible when i <= x: guarded by the selectors x_i..x_n
            out = []
            for i in range(n + 1):
                ge = big_or([PVar(k) for k in range(i, n + 1)])
                sub = tr(body, {**env, v: i})
                out.append(PAnd(ge, sub) if exists else PImp(ge, sub))
            return out
        b = _closed_term_value(bound, env)
        return [tr(body, {**env, v: i}) for i in range(b + 1)]

    guard_any = big_or([PVar(i) for i in range(n + 1)])
    guard_one = big_and(
        [PNot(PAnd(PVar(i), PVar(j))) for i in range(n + 1) for j in range(i + 1, n + 1)]
    )
    return PImp(PAnd(guard_any, guard_one), tr(A, {}))


# ---------------------------------------------------------------------------
# p-simulation harness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SimulationItem:
    alpha: PropFormula
    original_ok: bool
    translated_ok: bool
    original_size: int
    translated_size: int


@dataclass(frozen=True)
class SimulationReport:
    items: tuple[SimulationItem, ...]
    all_ok: bool
    growth_exponent: float | None


def p_simulation_check(
    target: ProofSystemHandle,
    source: ProofSystemHandle,
    translator: Callable[[bytes, PropFormula], bytes],
    corpus: list[tuple[PropFormula, bytes]],
) -> SimulationReport:
    """Verify translator maps source-proofs to accepted target-proofs.

    Efficiency is reported as a fitted log-log growth exponent of translated
    size vs original size — a measurement, never an asymptotic claim.
    """
    items: list[SimulationItem] = []
    for alpha, proof_bytes in corpus:
        src_ok = source.verify(proof_bytes, alpha)
        translated = translator(proof_bytes, alpha)
        tgt_ok = target.verify(translated, alpha)
        items.append(SimulationItem(alpha, src_ok, tgt_ok, len(proof_bytes), len(translated)))
    ok = all(i.original_ok and i.translated_ok for i in items)
    pts = [(i.original_size, i.translated_size) for i in items if i.original_size > 1 and i.translated_size > 1]
    exponent: float | None = None
    if len(pts) >= 2:
        xs = np.log([p[0] for p in pts])
        ys = np.log([p[1] for p in pts])
        if float(np.ptp(xs)) > 1e-9:
            exponent = float(np.polyfit(xs, ys, 1)[0])
    return SimulationReport(tuple(items), ok, exponent)


def table_to_resolution_translator(proof_bytes: bytes, alpha: PropFormula) -> bytes:
    """Naive translator: rebuild a refutation of the negation by elimination.

    The truth table certifies tautologyhood; the translated proof re-derives
    it as a resolution refutation, with the expected exponential blowup in
    the variable count.
    """
    cs = negation_clauses(alpha).clause_set
    proof = dp_refutation(cs)
    if proof is None:
        return b""
    return print_resolution_text(proof).encode()


def identity_translator(proof_bytes: bytes, alpha: PropFormula) -> bytes:
    return proof_bytes
