"""Arithmetization: numeric codes for formulas and proofs, self-reference.

Coding scheme
-------------
Every term and formula is serialized to a Polish (prefix) token sequence and
read as a base-44 positional number, most significant token first.  The token
alphabet has exactly 43 symbols (ids 1..43, below); since 0 is never a digit,
distinct token strings get distinct codes, the code of an n-token string has
exactly n base-44 digits, and `bnd(m) = 44**m - 1` is the largest code of any
string of at most m tokens.  Consequently the in-theory length function `len`
(digit count) agrees exactly with the token-count size measure used for
proofs, and a single bounded quantifier  exists<= p bnd(m) ...  ranges over
every proof of size at most m.

Proofs are coded as the lines' formula token sequences joined by a separator
token.  A proof code is accepted by `prft` when the decoded line sequence
verifies under the standard search-based checker and its last line is the
target formula.

Numerals
--------
Unary numerals S(S(...S(0))) for a code would be astronomically large, so
code-valued arguments always use binary numerals built from the definitional
symbols dbl(t) = 2*t and dbl1(t) = 2*t + 1; the numeral for n has about
log2(n) tokens.  `binary_numeral` builds them, and the `numeral_mode`
arguments below choose the spelling of small ordinal bounds only.

Self-reference
--------------
`diag(c)` evaluates to the code of decode(c)[v := binary_numeral(c)] where v
is the unique free variable.  `diagonalize` applies the classical fixed-point
construction to any formula psi(x) and returns the fixed point delta together
with a checkable derivation of  delta <-> psi(code of delta),  built by
lifting the computed equation  diag(numeral) = numeral  through psi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import syntax
from .calculus import (
    DefExtension,
    EvalBudget,
    Proof,
    ProofLine,
    TheorySpec,
    eval_term_in,
)
from .derivations import equivalence_proof
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
    ensure_recursion_headroom,
    free_variables,
    numeral,
    print_formula,
    substitute,
)
from .verifier import verify

BASE = 44

# Frozen token alphabet.  Ids are load-bearing: codes, the bnd() arithmetic
# and every pinned constant in the tests depend on this exact assignment.
_STRUCTURAL = {
    "0": 1,
    "S": 2,
    "+": 3,
    "*": 4,
    "=": 5,
    "!": 6,
    "->": 7,
    "forall": 8,
    "forall<=": 9,
    "exists<=": 10,
}
SEP_ID = 11
PRIME_ID = 12
VAR_POOL = ("x", "y", "z", "u", "v", "w", "p", "q", "a", "b", "c", "d", "e", "f", "m", "n")
_VAR_IDS = {name: 13 + i for i, name in enumerate(VAR_POOL)}
_DEFFN_NAMES = ("sub", "diag", "len", "le", "bnd", "dbl", "dbl1", "pair", "fst", "snd", "prft", "prft1", "prft2", "prft3", "prft4")
_DEFFN_IDS = {name: 29 + i for i, name in enumerate(_DEFFN_NAMES)}

TOKEN_IDS: dict[str, int] = {**_STRUCTURAL, ";": SEP_ID, "'": PRIME_ID, **_VAR_IDS, **_DEFFN_IDS}
ID_TOKENS: dict[int, str] = {i: t for t, i in TOKEN_IDS.items()}
assert len(TOKEN_IDS) == BASE - 1

DEFFN_ARITIES: dict[str, int] = {
    "sub": 2,
    "diag": 1,
    "len": 1,
    "le": 2,
    "bnd": 1,
    "dbl": 1,
    "dbl1": 1,
    "pair": 2,
    "fst": 1,
    "snd": 1,
    "prft": 2,
    "prft1": 2,
    "prft2": 2,
    "prft3": 2,
    "prft4": 2,
}

# Make the text parser accept applications of the registered symbols.
syntax.set_default_arities(DEFFN_ARITIES)


class CodingError(ValueError):
    pass


# ---------------------------------------------------------------------------
# tokenization
# ---------------------------------------------------------------------------


def _var_tokens(name: str) -> list[str]:
    base = name.rstrip("'")
    if base not in _VAR_IDS:
        raise CodingError(f"variable {name!r} is outside the codable pool")
    return [base] + ["'"] * (len(name) - len(base))


def term_tokens(t: Term) -> list[str]:
    out: list[str] = []
    stack: list[Term] = [t]
    while stack:
        node = stack.pop()
        match node:
            case syntax.Zero():
                out.append("0")
            case Succ(arg):
                out.append("S")
                stack.append(arg)
            case Plus(left, right):
                out.append("+")
                stack.append(right)
                stack.append(left)
            case Times(left, right):
                out.append("*")
                stack.append(right)
                stack.append(left)
            case Var(name):
                out.extend(_var_tokens(name))
            case DefFn(symbol, args):
                if symbol not in _DEFFN_IDS:
                    raise CodingError(f"function symbol {symbol!r} is not in the token alphabet")
                if len(args) != DEFFN_ARITIES[symbol]:
                    raise CodingError(f"{symbol!r} applied to {len(args)} arguments")
                out.append(symbol)
                stack.extend(reversed(args))
            case _:
                raise CodingError(f"not a term: {node!r}")
    return out


def formula_tokens(f: Formula) -> list[str]:
    match f:
        case Eq(left, right):
            return ["="] + term_tokens(left) + term_tokens(right)
        case Not(body):
            return ["!"] + formula_tokens(body)
        case Implies(a, b):
            return ["->"] + formula_tokens(a) + formula_tokens(b)
        case ForAll(var, body):
            return ["forall"] + _var_tokens(var) + formula_tokens(body)
        case BoundedForAll(var, bound, body):
            return ["forall<="] + _var_tokens(var) + term_tokens(bound) + formula_tokens(body)
        case BoundedExists(var, bound, body):
            return ["exists<="] + _var_tokens(var) + term_tokens(bound) + formula_tokens(body)
    raise CodingError(f"not a formula: {f!r}")


def tokens_to_code(tokens: list[str]) -> int:
    code = 0
    for tok in tokens:
        tid = TOKEN_IDS.get(tok)
        if tid is None:
            raise CodingError(f"unknown token {tok!r}")
        code = code * BASE + tid
    return code


def _digits(n: int) -> list[int] | None:
    """Base-44 digits of n, most significant first; None if any digit is 0."""
    if n <= 0:
        return None
    out: list[int] = []
    while n:
        n, d = divmod(n, BASE)
        if d == 0:
            return None
        out.append(d)
    out.reverse()
    return out


@lru_cache(maxsize=4096)
def _cached_digits(n: int) -> tuple[int, ...] | None:
    d = _digits(n)
    return None if d is None else tuple(d)


def code_to_tokens(code: int) -> list[str]:
    d = _digits(code)
    if d is None:
        raise CodingError(f"{code} is not the code of a token string")
    return [ID_TOKENS[x] for x in d]


# ---------------------------------------------------------------------------
# Polish parsing (decode side)
# ---------------------------------------------------------------------------


class _TokenReader:
    __slots__ = ("tokens", "pos")

    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def next(self) -> str:
        if self.pos >= len(self.tokens):
            raise CodingError("truncated token string")
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def read_var(self) -> str:
        tok = self.next()
        if tok not in _VAR_IDS:
            raise CodingError(f"expected a variable token, got {tok!r}")
        primes = 0
        while self.pos < len(self.tokens) and self.tokens[self.pos] == "'":
            primes += 1
            self.pos += 1
        return tok + "'" * primes

    def read_term(self) -> Term:
        tok = self.next()
        if tok == "0":
            return ZERO
        if tok == "S":
            # unroll S-chains iteratively to keep huge numerals cheap
            depth = 1
            while self.pos < len(self.tokens) and self.tokens[self.pos] == "S":
                depth += 1
                self.pos += 1
            core = self.read_term()
            for _ in range(depth):
                core = Succ(core)
            return core
        if tok == "+":
            left = self.read_term()
            return Plus(left, self.read_term())
        if tok == "*":
            left = self.read_term()
            return Times(left, self.read_term())
        if tok in _VAR_IDS:
            self.pos -= 1
            return Var(self.read_var())
        if tok in _DEFFN_IDS:
            args = tuple(self.read_term() for _ in range(DEFFN_ARITIES[tok]))
            return DefFn(tok, args)
        raise CodingError(f"token {tok!r} cannot start a term")

    def read_formula(self) -> Formula:
        tok = self.next()
        if tok == "=":
            left = self.read_term()
            return Eq(left, self.read_term())
        if tok == "!":
            return Not(self.read_formula())
        if tok == "->":
            a = self.read_formula()
            return Implies(a, self.read_formula())
        if tok == "forall":
            v = self.read_var()
            return ForAll(v, self.read_formula())
        if tok == "forall<=":
            v = self.read_var()
            bound = self.read_term()
            return BoundedForAll(v, bound, self.read_formula())
        if tok == "exists<=":
            v = self.read_var()
            bound = self.read_term()
            return BoundedExists(v, bound, self.read_formula())
        raise CodingError(f"token {tok!r} cannot start a formula")

    def expect_end(self) -> None:
        if self.pos != len(self.tokens):
            raise CodingError(f"trailing tokens at position {self.pos}")


def encode_term(t: Term) -> int:
    return tokens_to_code(term_tokens(t))


def encode_formula(f: Formula) -> int:
    return tokens_to_code(formula_tokens(f))


def decode_term(code: int) -> Term:
    ensure_recursion_headroom()
    r = _TokenReader(code_to_tokens(code))
    t = r.read_term()
    r.expect_end()
    return t


def decode_formula(code: int) -> Formula:
    ensure_recursion_headroom()
    r = _TokenReader(code_to_tokens(code))
    f = r.read_formula()
    r.expect_end()
    return f


def encode_proof(proof: Proof) -> int:
    toks: list[str] = []
    for i, line in enumerate(proof.lines):
        if i:
            toks.append(";")
        toks.extend(formula_tokens(line.formula))
    return tokens_to_code(toks)


def decode_proof(code: int) -> Proof:
    """Inverse of encode_proof; justifications come back empty (search-checked)."""
    ensure_recursion_headroom()
    d = _digits(code)
    if d is None:
        raise CodingError(f"{code} is not the code of a proof")
    lines: list[ProofLine] = []
    start = 0
    boundaries = [i for i, x in enumerate(d) if x == SEP_ID] + [len(d)]
    for end in boundaries:
        seg = d[start:end]
        if not seg:
            raise CodingError("empty proof line segment")
        r = _TokenReader([ID_TOKENS[x] for x in seg])
        f = r.read_formula()
        r.expect_end()
        lines.append(ProofLine(f))
        start = end + 1
    return Proof(tuple(lines))


# ---------------------------------------------------------------------------
# binary numerals
# ---------------------------------------------------------------------------


def binary_numeral(n: int) -> Term:
    """Closed term of ~log2(n) tokens denoting n, via dbl/dbl1 over 0."""
    if n < 0:
        raise ValueError("numerals denote natural numbers")
    if n == 0:
        return ZERO
    t: Term = ZERO
    for bit in bin(n)[2:]:
        t = DefFn("dbl1" if bit == "1" else "dbl", (t,))
    return t


def make_numeral(n: int, mode: str = "binary") -> Term:
    if mode == "binary":
        return binary_numeral(n)
    if mode == "unary":
        return numeral(n)
    raise ValueError(f"unknown numeral mode {mode!r}")


# ---------------------------------------------------------------------------
# definitional evaluators (all total; 0 is the rejection value)
# ---------------------------------------------------------------------------


def _ev_dbl(a: int, *, budget: EvalBudget) -> int:
    budget.charge()
    return 2 * a


def _ev_dbl1(a: int, *, budget: EvalBudget) -> int:
    budget.charge()
    return 2 * a + 1


def _ev_pair(a: int, b: int, *, budget: EvalBudget) -> int:
    budget.charge()
    s = a + b
    return s * (s + 1) // 2 + b


def _ev_fst(z: int, *, budget: EvalBudget) -> int:
    budget.charge()
    w = (math.isqrt(8 * z + 1) - 1) // 2
    return w - (z - w * (w + 1) // 2)


def _ev_snd(z: int, *, budget: EvalBudget) -> int:
    budget.charge()
    w = (math.isqrt(8 * z + 1) - 1) // 2
    return z - w * (w + 1) // 2


def _ev_le(a: int, b: int, *, budget: EvalBudget) -> int:
    budget.charge()
    return 1 if a <= b else 0


def _ev_len(p: int, *, budget: EvalBudget) -> int:
    count = 0
    while p:
        p //= BASE
        count += 1
    budget.charge(count + 1)
    return count


def _ev_bnd(m: int, *, budget: EvalBudget) -> int:
    budget.charge(m + 1)
    return BASE**m - 1


def _substituted_code(c: int, d: int, budget: EvalBudget) -> int:
    """Code of decode(c)[v := binary numeral of d], 0 if c is malformed."""
    digs = _digits(c)
    if digs is None or SEP_ID in digs:
        return 0
    budget.charge(4 * len(digs))
    try:
        f = decode_formula(c)
    except CodingError:
        return 0
    fv = free_variables(f)
    if len(fv) != 1:
        return 0
    result = substitute(f, next(iter(fv)), binary_numeral(d))
    budget.charge(4 * len(digs) + d.bit_length())
    return encode_formula(result)


def _ev_sub(c: int, d: int, *, budget: EvalBudget) -> int:
    return _substituted_code(c, d, budget)


def _ev_diag(c: int, *, budget: EvalBudget) -> int:
    return _substituted_code(c, c, budget)


def _make_prft(cell: dict) -> object:
    """Evaluator for `p codes a proof of the formula coded by c` in cell["theory"]."""

    def prover(p: int, c: int, *, budget: EvalBudget) -> int:
        budget.charge(2)
        target = _cached_digits(c)
        if target is None or SEP_ID in target:
            return 0
        pd = _digits(p)
        if pd is None:
            return 0
        budget.charge(len(pd))
        # cheap filter: the digits after the last separator must be the target
        last_sep = -1
        for i, x in enumerate(pd):
            if x == SEP_ID:
                last_sep = i
        if tuple(pd[last_sep + 1 :]) != target:
            return 0
        theory = cell.get("theory")
        if theory is None:
            raise RuntimeError("provability evaluator used before its theory was built")
        budget.charge(8 * len(pd))
        try:
            proof = decode_proof(p)
        except CodingError:
            return 0
        return 1 if verify(theory, proof) else 0

    return prover


def base_registry() -> dict[str, DefExtension]:
    """The definitional symbols shared by every theory (no provability)."""
    return {
        "dbl": DefExtension("dbl", 1, _ev_dbl, "dbl(t) = 2*t"),
        "dbl1": DefExtension("dbl1", 1, _ev_dbl1, "dbl1(t) = 2*t + 1"),
        "pair": DefExtension("pair", 2, _ev_pair, "Cantor pairing"),
        "fst": DefExtension("fst", 1, _ev_fst, "left inverse of pair"),
        "snd": DefExtension("snd", 1, _ev_snd, "right inverse of pair"),
        "le": DefExtension("le", 2, _ev_le, "le(a,b) = 1 if a <= b else 0"),
        "len": DefExtension("len", 1, _ev_len, "base-44 digit count = token length"),
        "bnd": DefExtension("bnd", 1, _ev_bnd, "bnd(m) = 44**m - 1, the largest m-token code"),
        "sub": DefExtension("sub", 2, _ev_sub, "code of decode(c) with its free variable set to the numeral of d"),
        "diag": DefExtension("diag", 1, _ev_diag, "sub(c, c): the diagonal substitution"),
    }


def _theory_with_prover(name: str, symbol: str, *, extra_axioms: tuple = (), base: TheorySpec | None = None, induction: bool = False) -> TheorySpec:
    """Build a theory whose `symbol` tests provability in the theory itself."""
    cell: dict = {}
    exts = dict(base.def_extensions) if base is not None else base_registry()
    exts[symbol] = DefExtension(symbol, 2, _make_prft(cell), f"{symbol}(p,c) = 1 if p codes a proof of the formula coded by c")
    spec = TheorySpec(
        name=name,
        extra_axioms=(base.extra_axioms if base is not None else ()) + extra_axioms,
        def_extensions=exts,
        induction=induction if base is None else base.induction,
    )
    cell["theory"] = spec
    return spec


@lru_cache(maxsize=None)
def standard_theory() -> TheorySpec:
    """Robinson arithmetic plus the coding registry; `prft` is its own provability."""
    return _theory_with_prover("Q", "prft")


@lru_cache(maxsize=None)
def induction_theory() -> TheorySpec:
    """Same registry with the induction schema switched on."""
    return _theory_with_prover("PA", "prft", induction=True)


PROVER_CHAIN = ("prft", "prft1", "prft2", "prft3", "prft4")


def extend_with_axiom(theory: TheorySpec, axiom: Formula, symbol: str, name: str | None = None) -> TheorySpec:
    """theory + axiom, with fresh provability symbol `symbol` for the new theory."""
    if symbol not in _DEFFN_IDS:
        raise CodingError(f"{symbol!r} is not in the token alphabet")
    return _theory_with_prover(
        name or f"{theory.name}+1",
        symbol,
        extra_axioms=(axiom,),
        base=theory,
    )


# ---------------------------------------------------------------------------
# bounded evaluation of Delta0 sentences
# ---------------------------------------------------------------------------


def _as_budget(budget: EvalBudget | int | None) -> EvalBudget:
    if budget is None:
        return EvalBudget()
    if isinstance(budget, int):
        return EvalBudget(budget)
    return budget


def eval_delta0(
    theory: TheorySpec,
    f: Formula,
    env: dict[str, int] | None = None,
    budget: EvalBudget | int | None = None,
) -> bool:
    """Truth value of a bounded formula in N (env supplies free variables).

    Unbounded quantifiers raise ValueError.  Closed subterms are evaluated
    once and cached for the duration of the call, so sweeping a bounded
    quantifier over a large range stays close to the cost of the varying
    parts.  Budget limits total work; EvalBudgetExceeded propagates.
    """
    ensure_recursion_headroom()
    b = _as_budget(budget)
    scope: dict[str, int] = dict(env) if env else {}
    missing = free_variables(f) - scope.keys()
    if missing:
        raise ValueError(f"free variables {sorted(missing)} have no value")

    closed: dict[int, bool] = {}
    values: dict[int, int] = {}

    def is_closed(t: Term) -> bool:
        r = closed.get(id(t))
        if r is not None:
            return r
        match t:
            case Var(_):
                r = False
            case syntax.Zero():
                r = True
            case Succ(arg):
                r = is_closed(arg)
            case Plus(left, right) | Times(left, right):
                r = is_closed(left) and is_closed(right)
            case DefFn(_, args):
                r = all(is_closed(a) for a in args)
            case _:
                raise TypeError(f"not a term: {t!r}")
        closed[id(t)] = r
        return r

    def ev_term(t: Term) -> int:
        b.charge()
        if is_closed(t):
            v = values.get(id(t))
            if v is None:
                v = eval_term_in(theory, t, budget=b)
                values[id(t)] = v
            return v
        match t:
            case Var(name):
                return scope[name]
            case Succ(arg):
                n = 1
                inner = arg
                while isinstance(inner, Succ):
                    n += 1
                    inner = inner.arg
                b.charge(n)
                return n + ev_term(inner)
            case Plus(left, right):
                return ev_term(left) + ev_term(right)
            case Times(left, right):
                return ev_term(left) * ev_term(right)
            case DefFn(symbol, args):
                ext = theory.def_extensions.get(symbol)
                if ext is None:
                    raise KeyError(f"function symbol {symbol!r} not registered in theory {theory.name!r}")
                vals = [ev_term(a) for a in args]
                b.charge(4)
                return ext.evaluator(*vals, budget=b)
        raise TypeError(f"not a term: {t!r}")

    def ev(g: Formula) -> bool:
        b.charge()
        match g:
            case Eq(left, right):
                return ev_term(left) == ev_term(right)
            case Not(body):
                return not ev(body)
            case Implies(a, c):
                return (not ev(a)) or ev(c)
            case BoundedForAll(var, bound, body):
                n = ev_term(bound)
                saved = scope.get(var)
                try:
                    for i in range(n + 1):
                        b.charge()
                        scope[var] = i
                        if not ev(body):
                            return False
                    return True
                finally:
                    if saved is None:
                        scope.pop(var, None)
                    else:
                        scope[var] = saved
            case BoundedExists(var, bound, body):
                n = ev_term(bound)
                saved = scope.get(var)
                try:
                    for i in range(n + 1):
                        b.charge()
                        scope[var] = i
                        if ev(body):
                            return True
                    return False
                finally:
                    if saved is None:
                        scope.pop(var, None)
                    else:
                        scope[var] = saved
            case ForAll(_, _):
                raise ValueError(f"not a bounded formula: {print_formula(g)}")
        raise TypeError(f"not a formula: {g!r}")

    return ev(f)


# ---------------------------------------------------------------------------
# provability predicates and consistency sentences
# ---------------------------------------------------------------------------


def provability_formula(
    theory: TheorySpec,
    m: int,
    var: str = "x",
    numeral_mode: str = "binary",
    symbol: str = "prft",
) -> Formula:
    """exists<= p bnd(m) (symbol(p, var) = S(0)): a proof of <= m tokens exists.

    The bound does all the work: codes of at most m tokens are exactly the
    numbers up to bnd(m).  `symbol` selects which theory's provability is
    meant (see PROVER_CHAIN); it must be registered in `theory`.
    """
    if symbol not in theory.def_extensions:
        raise CodingError(f"{symbol!r} is not registered in theory {theory.name!r}")
    if m < 1:
        raise ValueError("the proof-size bound must be positive")
    pvar = "p" if var != "p" else "q"
    bound = DefFn("bnd", (make_numeral(m, numeral_mode),))
    return BoundedExists(pvar, bound, Eq(DefFn(symbol, (Var(pvar), Var(var))), Succ(ZERO)))


def refutation_target() -> Formula:
    return Not(Eq(ZERO, ZERO))


def con_bounded(
    theory: TheorySpec,
    m: int,
    numeral_mode: str = "binary",
    symbol: str = "prft",
) -> Formula:
    """No proof of !(0 = 0) with at most m tokens exists."""
    pr = provability_formula(theory, m, var="x", numeral_mode=numeral_mode, symbol=symbol)
    c = encode_formula(refutation_target())
    return Not(substitute(pr, "x", binary_numeral(c)))


def provability_formula_unbounded(theory: TheorySpec, var: str = "x", symbol: str = "prft") -> Formula:
    """Ordinary (unbounded) provability; not Delta0, offered for completeness."""
    if symbol not in theory.def_extensions:
        raise CodingError(f"{symbol!r} is not registered in theory {theory.name!r}")
    pvar = "p" if var != "p" else "q"
    return syntax.exists(pvar, Eq(DefFn(symbol, (Var(pvar), Var(var))), Succ(ZERO)))


# ---------------------------------------------------------------------------
# diagonalization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiagonalResult:
    """Fixed point of psi: sentence <-> psi(code of sentence), with receipts."""

    sentence: Formula
    code: int
    psi_at_code: Formula
    equivalence: Proof

    @property
    def biconditional(self) -> Formula:
        return syntax.iff(self.sentence, self.psi_at_code)


def diagonalize(theory: TheorySpec, psi: Formula, var: str | None = None) -> DiagonalResult:
    """Construct delta with  |- delta <-> psi(numeral of code(delta)).

    psi must have exactly one free variable (or name it with `var`).  The
    equivalence proof lifts the computed equation
        diag(numeral of code(theta)) = numeral of code(delta)
    through psi, so every quantifier bound inside psi that mentions the free
    variable may mention nothing else.
    """
    fv = free_variables(psi)
    if var is None:
        if len(fv) != 1:
            raise ValueError(f"need exactly one free variable, got {sorted(fv)}")
        var = next(iter(fv))
    elif fv != {var}:
        raise ValueError(f"free variables {sorted(fv)} are not exactly {{{var!r}}}")

    theta = substitute(psi, var, DefFn("diag", (Var(var),)))
    c_theta = encode_formula(theta)
    n_theta = binary_numeral(c_theta)
    delta = substitute(theta, var, n_theta)
    c_delta = encode_formula(delta)

    s = DefFn("diag", (n_theta,))
    u = binary_numeral(c_delta)
    computed = eval_term_in(theory, s, budget=EvalBudget(100_000_000))
    if computed != c_delta:
        raise RuntimeError(f"diagonal evaluator disagrees with construction: {computed} != {c_delta}")

    psi_at_code = substitute(psi, var, u)
    eqv = equivalence_proof(theory, psi, var, s, u)
    return DiagonalResult(delta, c_delta, psi_at_code, eqv)


def goedel_sentence_bounded(theory: TheorySpec, m: int, numeral_mode: str = "binary", symbol: str = "prft") -> DiagonalResult:
    """Fixed point of 'no proof of x with at most m tokens exists'."""
    psi = Not(provability_formula(theory, m, var="x", numeral_mode=numeral_mode, symbol=symbol))
    return diagonalize(theory, psi, "x")
