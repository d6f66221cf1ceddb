"""Exhaustive proof search at desk scale, and the language levels it decides.

A proof here is a sequence of formulas, each an axiom instance or obtained
from earlier lines by modus ponens or (bounded) generalization, with total
size = sum of line sizes plus one separator between lines.  `enumerate_proofs`
runs a depth-first search over all such sequences ending in a target formula,
within a total-size budget, and reports one of three outcomes:

  found             -- a proof within budget was constructed (definitive yes);
  none              -- the search space was covered completely (definitive no);
  budget_exhausted  -- an internal cap was hit, so absence proves nothing.

Definitive "none" claims are what make the miniature language levels
L_k = {phi : some proof of phi has size <= size(phi)^k} decidable at small
sizes, so the engine is deliberately conservative about them.  Candidate
lines are drawn from complete pools of axiom instances -- every formula of
each admissible size is generated and filtered through the axiom matchers --
plus the closure of existing lines under the inference rules.  When a pool
would exceed its cap the outcome degrades to budget_exhausted rather than
silently narrowing the space.  Two further soundness notes:

  * Variables range over the fixed 16-name pool (no primes).  Any proof
    within budget B uses fewer than B distinct variables, and renaming its
    variables injectively into the pool (fixing the target's variables)
    preserves validity line by line, so the restriction loses nothing as
    long as prefix budget + target variables <= 16.  The guard below
    downgrades "none" to budget_exhausted outside that regime.
  * Relevance heuristics (axiom instances assembled from the target's own
    subformulas and subterms) are added to speed up "found"; they never
    shrink the exhaustive pools, so they cannot corrupt a "none".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .calculus import (
    AxiomJust,
    BGenJust,
    GenJust,
    Justification,
    MPJust,
    Proof,
    ProofLine,
    TheorySpec,
    find_axiom_justification,
    proof_size,
)
from .goedel import DEFFN_ARITIES, VAR_POOL
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
    formula_size,
    free_variables,
    print_formula,
    substitute,
    subterms,
    term_size,
)

FOUND = "found"
NONE = "none"
BUDGET_EXHAUSTED = "budget_exhausted"

_UNARY_FNS = tuple(s for s, a in DEFFN_ARITIES.items() if a == 1)
_BINARY_FNS = tuple(s for s, a in DEFFN_ARITIES.items() if a == 2)


class PoolCapExceeded(Exception):
    pass


@dataclass(frozen=True)
class SearchLimits:
    """Caps that bound the work; hitting one degrades the outcome honestly."""

    pool_cap: int = 600_000
    node_cap: int = 300_000
    max_pool_line_size: int = 6


@dataclass(frozen=True)
class SearchReport:
    outcome: str
    proof: Proof | None
    budget: int
    nodes: int
    definitive: bool

    @property
    def found(self) -> bool:
        return self.outcome == FOUND


# ---------------------------------------------------------------------------
# canonical enumeration of terms and formulas by exact token size
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def terms_of_size(size: int, cap: int = 600_000) -> tuple[Term, ...]:
    """Every term of exactly `size` tokens over the 16-variable pool."""
    if size < 1:
        return ()
    out: list[Term] = []
    if size == 1:
        out.append(ZERO)
        out.extend(Var(v) for v in VAR_POOL)
        return tuple(out)
    for inner in terms_of_size(size - 1, cap):
        out.append(Succ(inner))
        for sym in _UNARY_FNS:
            out.append(DefFn(sym, (inner,)))
    for left_size in range(1, size - 1):
        lefts = terms_of_size(left_size, cap)
        rights = terms_of_size(size - 1 - left_size, cap)
        if len(out) + len(lefts) * len(rights) * (2 + len(_BINARY_FNS)) > cap:
            raise PoolCapExceeded(f"term pool at size {size}")
        for a in lefts:
            for b in rights:
                out.append(Plus(a, b))
                out.append(Times(a, b))
                for sym in _BINARY_FNS:
                    out.append(DefFn(sym, (a, b)))
    if len(out) > cap:
        raise PoolCapExceeded(f"term pool at size {size}")
    return tuple(out)


@lru_cache(maxsize=None)
def formulas_of_size(size: int, cap: int = 600_000) -> tuple[Formula, ...]:
    """Every formula of exactly `size` tokens over the 16-variable pool."""
    if size < 3:
        return ()
    out: list[Formula] = []
    for left_size in range(1, size - 1):
        lefts = terms_of_size(left_size, cap)
        rights = terms_of_size(size - 1 - left_size, cap)
        if len(out) + len(lefts) * len(rights) > cap:
            raise PoolCapExceeded(f"formula pool at size {size}")
        for a in lefts:
            for b in rights:
                out.append(Eq(a, b))
    for body in formulas_of_size(size - 1, cap):
        out.append(Not(body))
    for a_size in range(3, size - 3):
        for a in formulas_of_size(a_size, cap):
            for b in formulas_of_size(size - 1 - a_size, cap):
                out.append(Implies(a, b))
                if len(out) > cap:
                    raise PoolCapExceeded(f"formula pool at size {size}")
    for body in formulas_of_size(size - 2, cap):
        for v in VAR_POOL:
            out.append(ForAll(v, body))
    for bound_size in range(1, size - 4):
        bounds = terms_of_size(bound_size, cap)
        for body in formulas_of_size(size - 2 - bound_size, cap):
            for v in VAR_POOL:
                for bt in bounds:
                    out.append(BoundedForAll(v, bt, body))
                    out.append(BoundedExists(v, bt, body))
                    if len(out) > cap:
                        raise PoolCapExceeded(f"formula pool at size {size}")
    if len(out) > cap:
        raise PoolCapExceeded(f"formula pool at size {size}")
    return tuple(out)


_AXIOM_POOLS: dict[tuple[str, int, int], tuple[tuple[Formula, Justification], ...]] = {}


def axiom_pool(theory: TheorySpec, size: int, cap: int) -> tuple[tuple[Formula, Justification], ...]:
    """All axiom lines of exactly `size` tokens (schema instances + theory axioms)."""
    key = (theory.name, size, cap)
    hit = _AXIOM_POOLS.get(key)
    if hit is not None:
        return hit
    pool: list[tuple[Formula, Justification]] = []
    for f in formulas_of_size(size, cap):
        j = find_axiom_justification(theory, f)
        if j is not None:
            pool.append((f, j))
    result = tuple(pool)
    _AXIOM_POOLS[key] = result
    return result


# ---------------------------------------------------------------------------
# relevance heuristics: instances assembled from the target's own material
# ---------------------------------------------------------------------------


def _subformulas(f: Formula) -> set[Formula]:
    out: set[Formula] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if g in out:
            continue
        out.add(g)
        match g:
            case Not(body):
                stack.append(body)
            case Implies(a, b):
                stack.append(a)
                stack.append(b)
            case ForAll(_, body):
                stack.append(body)
            case BoundedForAll(_, _, body) | BoundedExists(_, _, body):
                stack.append(body)
    return out


def _relevance_instances(theory: TheorySpec, target: Formula, max_size: int) -> list[tuple[Formula, Justification]]:
    subf = sorted(_subformulas(target), key=print_formula)
    subt: set[Term] = set()
    for g in subf:
        match g:
            case Eq(a, b):
                subt.update(subterms(a))
                subt.update(subterms(b))
            case BoundedForAll(_, bt, _) | BoundedExists(_, bt, _):
                subt.update(subterms(bt))
    terms = sorted(subt, key=lambda t: (term_size(t), str(t)))
    cands: list[Formula] = []
    for t in terms:
        cands.append(Eq(t, t))
    for a in subf:
        for b in subf:
            cands.append(Implies(a, Implies(b, a)))
            na, nb = Not(a), Not(b)
            cands.append(Implies(Implies(na, nb), Implies(b, a)))
            for c in subf:
                cands.append(
                    Implies(Implies(a, Implies(b, c)), Implies(Implies(a, b), Implies(a, c)))
                )
    for g in subf:
        if isinstance(g, ForAll):
            for t in terms:
                cands.append(Implies(g, substitute(g.body, g.var, t)))
    out: list[tuple[Formula, Justification]] = []
    seen: set[Formula] = set()
    for f in cands:
        if f in seen or formula_size(f) > max_size:
            continue
        seen.add(f)
        j = find_axiom_justification(theory, f)
        if j is not None:
            out.append((f, j))
    return out


# ---------------------------------------------------------------------------
# the search itself
# ---------------------------------------------------------------------------


class _NodeCapHit(Exception):
    pass


def _justify_from(theory: TheorySpec, f: Formula, lines: list[tuple[Formula, Justification]]) -> Justification | None:
    j = find_axiom_justification(theory, f)
    if j is not None:
        return j
    for i, (g, _) in enumerate(lines):
        if isinstance(g, Implies) and g.consequent == f:
            for k, (h, _) in enumerate(lines):
                if h == g.antecedent:
                    return MPJust(i, k)
    match f:
        case ForAll(v, body):
            for i, (g, _) in enumerate(lines):
                if g == body:
                    return GenJust(i, v)
        case BoundedForAll(v, bt, body):
            for i, (g, _) in enumerate(lines):
                if g == body:
                    return BGenJust(i, v, bt)
    return None


def enumerate_proofs(
    theory: TheorySpec,
    target: Formula,
    size_budget: int,
    limits: SearchLimits | None = None,
    relevance: bool = True,
) -> SearchReport:
    """Search every proof of `target` with total size <= size_budget."""
    limits = limits or SearchLimits()
    tsize = formula_size(target)
    state = {"nodes": 0, "capped": False}

    if tsize > size_budget:
        return SearchReport(NONE, None, size_budget, 0, True)

    max_prefix_line = size_budget - tsize - 1
    # complete axiom pools, one per admissible prefix-line size
    pools: dict[int, tuple[tuple[Formula, Justification], ...]] = {}
    for s in range(3, max_prefix_line + 1):
        if s > limits.max_pool_line_size:
            state["capped"] = True
            continue
        try:
            pools[s] = axiom_pool(theory, s, limits.pool_cap)
        except PoolCapExceeded:
            state["capped"] = True

    rel = _relevance_instances(theory, target, max_prefix_line) if relevance else []

    def closures(lines: list[tuple[Formula, Justification]], max_size: int):
        for i, (g, _) in enumerate(lines):
            if isinstance(g, Implies) and formula_size(g.consequent) <= max_size:
                for k, (h, _) in enumerate(lines):
                    if h == g.antecedent:
                        yield g.consequent, MPJust(i, k)
        for i, (g, _) in enumerate(lines):
            gsize = formula_size(g)
            if gsize + 2 > max_size:
                continue
            for v in VAR_POOL:
                yield ForAll(v, g), GenJust(i, v)
            room = max_size - gsize - 2
            for bsize in range(1, room + 1):
                try:
                    bts = terms_of_size(bsize, limits.pool_cap)
                except PoolCapExceeded:
                    state["capped"] = True
                    continue
                for bt in bts:
                    for v in VAR_POOL:
                        yield BoundedForAll(v, bt, g), BGenJust(i, v, bt)

    found: list[Proof] = []

    def dfs(lines: list[tuple[Formula, Justification]], used: int) -> bool:
        state["nodes"] += 1
        if state["nodes"] > limits.node_cap:
            raise _NodeCapHit
        sep = 1 if lines else 0
        if used + sep + tsize <= size_budget:
            j = _justify_from(theory, target, lines)
            if j is not None:
                all_lines = tuple(ProofLine(f, jj) for f, jj in lines) + (ProofLine(target, j),)
                found.append(Proof(all_lines))
                return True
        room = size_budget - used - sep - (tsize + 1)
        if room < 3:
            return False

        def candidates():
            # cheap, targeted material first so a "found" surfaces quickly;
            # closure lines last (they fan out widest).  Order never affects
            # the definitive outcomes, only how fast a witness is reached.
            for f, j in rel:
                if formula_size(f) <= room:
                    yield f, j
            for s in range(3, room + 1):
                yield from pools.get(s, ())
            yield from closures(lines, room)

        seen: set[Formula] = {f for f, _ in lines}
        for f, j in candidates():
            if f in seen:
                continue
            seen.add(f)
            if dfs(lines + [(f, j)], used + sep + formula_size(f)):
                return True
        return False

    try:
        ok = dfs([], 0)
    except _NodeCapHit:
        ok = False
        state["capped"] = True

    if ok:
        return SearchReport(FOUND, found[0], size_budget, state["nodes"], True)
    if state["capped"]:
        return SearchReport(BUDGET_EXHAUSTED, None, size_budget, state["nodes"], False)
    # variable-pool guard: renaming into 16 names must be possible
    if max_prefix_line + len(free_variables(target)) > len(VAR_POOL):
        return SearchReport(BUDGET_EXHAUSTED, None, size_budget, state["nodes"], False)
    return SearchReport(NONE, None, size_budget, state["nodes"], True)


# ---------------------------------------------------------------------------
# language levels and shortest proofs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MembershipReport:
    """Decision for `phi in L_k` (proof of size <= size(phi)^k exists)."""

    member: bool | None
    definitive: bool
    outcome: str
    bound: int
    effective_bound: int
    proof: Proof | None = None


def l_k_membership(
    theory: TheorySpec,
    phi: Formula,
    k: int,
    desk_cap: int = 24,
    limits: SearchLimits | None = None,
) -> MembershipReport:
    """Decide phi in L_k, honestly degrading when the bound exceeds the desk cap.

    found            -> member True (a witness proof is returned)
    none at full bound -> member False
    anything else    -> member None (the desk could not decide)
    """
    if k < 1:
        raise ValueError("level must be >= 1")
    bound = formula_size(phi) ** k
    effective = min(bound, desk_cap)
    r = enumerate_proofs(theory, phi, effective, limits=limits)
    if r.outcome == FOUND:
        return MembershipReport(True, True, r.outcome, bound, effective, r.proof)
    if r.outcome == NONE and effective == bound:
        return MembershipReport(False, True, r.outcome, bound, effective)
    return MembershipReport(None, False, r.outcome, bound, effective)


def shortest_proof_length(
    theory: TheorySpec,
    phi: Formula,
    max_budget: int,
    limits: SearchLimits | None = None,
) -> tuple[int | None, bool]:
    """(length of a shortest proof within max_budget or None, definitive flag).

    Iterative deepening: budgets below a found proof that all came back
    `none` make the length exact; any budget_exhausted along the way keeps
    the result honest but non-definitive.
    """
    definitive = True
    for budget in range(formula_size(phi), max_budget + 1):
        r = enumerate_proofs(theory, phi, budget, limits=limits)
        if r.outcome == FOUND:
            assert r.proof is not None
            return proof_size(r.proof), definitive
        if r.outcome == BUDGET_EXHAUSTED:
            definitive = False
    return None, definitive


# ---------------------------------------------------------------------------
# consistency regeneration chain
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChainLevel:
    theory_name: str
    con_sentence: Formula
    con_code: int
    con_size: int
    next_level_one_line_ok: bool
    self_search: SearchReport


def regeneration_chain(depth: int = 3, m: int = 8, margin: int = 6, limits: SearchLimits | None = None) -> list[ChainLevel]:
    """Climb depth levels: T_{i+1} = T_i + Con_{T_i}(m), with receipts.

    At each level: the consistency sentence for the current theory (its own
    provability symbol), a one-line proof of it accepted at the next level,
    and an exhaustive search showing the current level has no proof of its
    own sentence within size(con) + margin.
    """
    from .calculus import TheoryAxiomJust, check_stored_proof
    from .goedel import PROVER_CHAIN, con_bounded, encode_formula, extend_with_axiom, standard_theory
    from .verifier import proof_of

    if not 1 <= depth < len(PROVER_CHAIN):
        raise ValueError(f"depth must be in 1..{len(PROVER_CHAIN) - 1}")
    levels: list[ChainLevel] = []
    theory = standard_theory()
    for i in range(depth):
        sym = PROVER_CHAIN[i]
        con = con_bounded(theory, m, symbol=sym)
        csize = formula_size(con)
        self_search = enumerate_proofs(theory, con, csize + margin, limits=limits)
        nxt = extend_with_axiom(theory, con, PROVER_CHAIN[i + 1], name=f"{theory.name}+c{i + 1}")
        one_line = Proof((ProofLine(con, TheoryAxiomJust(len(nxt.extra_axioms))),))
        ok = proof_of(nxt, one_line, con) and check_stored_proof(nxt, one_line).ok
        levels.append(ChainLevel(theory.name, con, encode_formula(con), csize, ok, self_search))
        theory = nxt
    return levels
