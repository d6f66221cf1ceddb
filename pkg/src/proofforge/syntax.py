"""First-order arithmetic syntax: terms, formulas, parsing, printing, substitution.

The language is that of Robinson arithmetic plus registered definitional
function symbols:

    terms     t ::= 0 | x | S(t) | t + t | t * t | f(t, ..., t)
    formulas  A ::= t = t | !A | A -> A | forall x A
                  | forall<= x b A | exists<= x b A

Bounded quantifiers are primitive constructors (a formula is Delta0 iff it
contains no unbounded forall).  Conjunction, disjunction, biconditional and
unbounded exists are accepted by the parser as abbreviations and expanded
immediately:

    A & B   ==  !(A -> !B)
    A | B   ==  !A -> B
    A <-> B ==  (A -> B) & (B -> A)
    exists x A  ==  !forall x !A

Canonical printing puts single spaces around binary operators, always
parenthesizes negation bodies and quantifier bodies, and never emits the
abbreviations.  The size of a formula is the number of tokens in the
canonical print, *not counting* parentheses and commas — equivalently, the
length of the prefix (Polish) token sequence the encoder uses.  Examples:
size("0 = 0") = 3, size(S(S(0))) = 3, size(!A) = size(A) + 1.

Operator binding, loosest to tightest:  ->  (right associative), then
| then & (parse-time sugar, left associative), then ! / quantifiers,
then atoms.  In terms, * binds tighter than +; both are left associative.
"""

from __future__ import annotations

import re
import sys
from dataclasses import dataclass
from typing import Iterator, Union

# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Succ:
    arg: "Term"


@dataclass(frozen=True)
class Plus:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Times:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class DefFn:
    """Application of a registered definitional function symbol."""

    symbol: str
    args: tuple["Term", ...]


Term = Union[Var, Zero, Succ, Plus, Times, DefFn]


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class Implies:
    antecedent: "Formula"
    consequent: "Formula"


@dataclass(frozen=True)
class ForAll:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class BoundedForAll:
    """forall<= var bound body — var ranges over 0..bound inclusive.

    The bound is evaluated in the enclosing scope: occurrences of `var`
    inside `bound` are rejected by the parser and by well-formedness checks.
    """

    var: str
    bound: Term
    body: "Formula"


@dataclass(frozen=True)
class BoundedExists:
    var: str
    bound: Term
    body: "Formula"


Formula = Union[Eq, Not, Implies, ForAll, BoundedForAll, BoundedExists]

ZERO = Zero()

# Deep formulas (binary numerals of large codes) exceed CPython's default
# recursion limit; every public recursive entry point calls this first.
_RECURSION_HEADROOM = 100_000


def ensure_recursion_headroom() -> None:
    if sys.getrecursionlimit() < _RECURSION_HEADROOM:
        sys.setrecursionlimit(_RECURSION_HEADROOM)


class SyntaxErrorWithPos(ValueError):
    """Parse error carrying a character offset into the source text."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at offset {pos})")
        self.pos = pos


# ---------------------------------------------------------------------------
# Numerals
# ---------------------------------------------------------------------------


def numeral(n: int) -> Term:
    """The unary numeral S(S(...S(0)...)) with n applications of S."""
    if n < 0:
        raise ValueError("numeral of a negative integer")
    t: Term = ZERO
    for _ in range(n):
        t = Succ(t)
    return t


def numeral_value(t: Term) -> int | None:
    """Inverse of numeral(); None if t is not a pure S-chain over 0."""
    n = 0
    while isinstance(t, Succ):
        n += 1
        t = t.arg
    return n if isinstance(t, Zero) else None


# ---------------------------------------------------------------------------
# Free variables and substitution
# ---------------------------------------------------------------------------


def term_variables(t: Term) -> frozenset[str]:
    match t:
        case Var(name):
            return frozenset((name,))
        case Zero():
            return frozenset()
        case Succ(arg):
            return term_variables(arg)
        case Plus(a, b) | Times(a, b):
            return term_variables(a) | term_variables(b)
        case DefFn(_, args):
            out: frozenset[str] = frozenset()
            for a in args:
                out |= term_variables(a)
            return out
    raise TypeError(f"not a term: {t!r}")


def free_variables(f: Formula) -> frozenset[str]:
    ensure_recursion_headroom()
    return _free_variables(f)


def _free_variables(f: Formula) -> frozenset[str]:
    match f:
        case Eq(a, b):
            return term_variables(a) | term_variables(b)
        case Not(body):
            return _free_variables(body)
        case Implies(a, b):
            return _free_variables(a) | _free_variables(b)
        case ForAll(v, body):
            return _free_variables(body) - {v}
        case BoundedForAll(v, bound, body) | BoundedExists(v, bound, body):
            return term_variables(bound) | (_free_variables(body) - {v})
    raise TypeError(f"not a formula: {f!r}")


def is_sentence(f: Formula) -> bool:
    return not free_variables(f)


def is_delta0(f: Formula) -> bool:
    """True iff f contains no unbounded quantifier."""
    match f:
        case Eq(_, _):
            return True
        case Not(body):
            return is_delta0(body)
        case Implies(a, b):
            return is_delta0(a) and is_delta0(b)
        case ForAll(_, _):
            return False
        case BoundedForAll(_, _, body) | BoundedExists(_, _, body):
            return is_delta0(body)
    raise TypeError(f"not a formula: {f!r}")


def fresh_variable(base: str, taken: frozenset[str] | set[str]) -> str:
    """base with the minimal number of primes appended that avoids `taken`."""
    name = base
    while name in taken:
        name += "'"
    return name


def substitute_term(t: Term, var: str, replacement: Term) -> Term:
    match t:
        case Var(name):
            return replacement if name == var else t
        case Zero():
            return t
        case Succ(arg):
            return Succ(substitute_term(arg, var, replacement))
        case Plus(a, b):
            return Plus(substitute_term(a, var, replacement), substitute_term(b, var, replacement))
        case Times(a, b):
            return Times(substitute_term(a, var, replacement), substitute_term(b, var, replacement))
        case DefFn(sym, args):
            return DefFn(sym, tuple(substitute_term(a, var, replacement) for a in args))
    raise TypeError(f"not a term: {t!r}")


def substitute(f: Formula, var: str, replacement: Term) -> Formula:
    """Capture-avoiding substitution f[var := replacement].

    Bound variables that would capture a free variable of the replacement
    are renamed deterministically (minimal prime count), e.g.
    substitute(forall y (x = y), x, y) = forall y' (y = y').
    """
    ensure_recursion_headroom()
    return _subst(f, var, replacement, term_variables(replacement))


def _subst(f: Formula, var: str, rep: Term, rep_vars: frozenset[str]) -> Formula:
    match f:
        case Eq(a, b):
            return Eq(substitute_term(a, var, rep), substitute_term(b, var, rep))
        case Not(body):
            return Not(_subst(body, var, rep, rep_vars))
        case Implies(a, b):
            return Implies(_subst(a, var, rep, rep_vars), _subst(b, var, rep, rep_vars))
        case ForAll(v, body):
            if v == var:
                return f
            if v in rep_vars and var in _free_variables(body):
                v2 = fresh_variable(v, rep_vars | _free_variables(body) | {var})
                body = _subst(body, v, Var(v2), frozenset((v2,)))
                return ForAll(v2, _subst(body, var, rep, rep_vars))
            return ForAll(v, _subst(body, var, rep, rep_vars))
        case BoundedForAll(v, bound, body) | BoundedExists(v, bound, body):
            ctor = BoundedForAll if isinstance(f, BoundedForAll) else BoundedExists
            new_bound = substitute_term(bound, var, rep)
            if v == var:
                return ctor(v, new_bound, body)
            if v in rep_vars and var in _free_variables(body):
                v2 = fresh_variable(v, rep_vars | _free_variables(body) | {var})
                body = _subst(body, v, Var(v2), frozenset((v2,)))
                return ctor(v2, new_bound, _subst(body, var, rep, rep_vars))
            return ctor(v, new_bound, _subst(body, var, rep, rep_vars))
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# Canonical printing
# ---------------------------------------------------------------------------


def print_term(t: Term) -> str:
    ensure_recursion_headroom()
    return _print_term(t)


def _print_term(t: Term) -> str:
    # precedence: atom > * > +
    match t:
        case Var(name):
            return name
        case Zero():
            return "0"
        case Succ(_):
            # unroll S-chains iteratively; numerals can be large
            depth = 0
            inner: Term = t
            while isinstance(inner, Succ):
                depth += 1
                inner = inner.arg
            return "S(" * depth + _print_term(inner) + ")" * depth
        case Plus(a, b):
            return f"{_print_addend(a)} + {_print_factor_or_atom(b, allow_times=True)}"
        case Times(a, b):
            return f"{_print_times_left(a)} * {_print_atom(b)}"
        case DefFn(sym, args):
            return f"{sym}({', '.join(_print_term(a) for a in args)})"
    raise TypeError(f"not a term: {t!r}")


def _print_addend(t: Term) -> str:
    # left child of +: + is left associative, so nested + needs no parens
    return _print_term(t) if isinstance(t, (Plus, Times)) else _print_atom(t)


def _print_factor_or_atom(t: Term, allow_times: bool) -> str:
    if isinstance(t, Plus):
        return f"({_print_term(t)})"
    if isinstance(t, Times):
        return _print_term(t) if allow_times else f"({_print_term(t)})"
    return _print_atom(t)


def _print_times_left(t: Term) -> str:
    if isinstance(t, Plus):
        return f"({_print_term(t)})"
    if isinstance(t, Times):
        return _print_term(t)
    return _print_atom(t)


def _print_atom(t: Term) -> str:
    if isinstance(t, (Plus, Times)):
        return f"({_print_term(t)})"
    return _print_term(t)


def print_formula(f: Formula) -> str:
    ensure_recursion_headroom()
    return _print_formula(f)


def _print_formula(f: Formula) -> str:
    match f:
        case Eq(a, b):
            return f"{_print_term(a)} = {_print_term(b)}"
        case Not(body):
            return f"!({_print_formula(body)})"
        case Implies(a, b):
            left = _print_formula(a)
            if isinstance(a, Implies):
                left = f"({left})"
            return f"{left} -> {_print_formula(b)}"
        case ForAll(v, body):
            return f"forall {v} ({_print_formula(body)})"
        case BoundedForAll(v, bound, body):
            return f"forall<= {v} {_print_atom(bound)} ({_print_formula(body)})"
        case BoundedExists(v, bound, body):
            return f"exists<= {v} {_print_atom(bound)} ({_print_formula(body)})"
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# Size metric
# ---------------------------------------------------------------------------


def term_size(t: Term) -> int:
    match t:
        case Var(name):
            return 1 + name.count("'")
        case Zero():
            return 1
        case Succ(_):
            n = 0
            while isinstance(t, Succ):
                n += 1
                t = t.arg
            return n + term_size(t)
        case Plus(a, b) | Times(a, b):
            return term_size(a) + term_size(b) + 1
        case DefFn(_, args):
            return 1 + sum(term_size(a) for a in args)
    raise TypeError(f"not a term: {t!r}")


def formula_size(f: Formula) -> int:
    """Number of symbols in the canonical print, parentheses/commas excluded."""
    ensure_recursion_headroom()
    return _formula_size(f)


def _formula_size(f: Formula) -> int:
    match f:
        case Eq(a, b):
            return term_size(a) + term_size(b) + 1
        case Not(body):
            return _formula_size(body) + 1
        case Implies(a, b):
            return _formula_size(a) + _formula_size(b) + 1
        case ForAll(v, body):
            return _formula_size(body) + 2 + v.count("'")
        case BoundedForAll(v, bound, body) | BoundedExists(v, bound, body):
            return _formula_size(body) + term_size(bound) + 2 + v.count("'")
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# Derived connectives (expanded at parse time, usable programmatically)
# ---------------------------------------------------------------------------


def conj(a: Formula, b: Formula) -> Formula:
    return Not(Implies(a, Not(b)))


def disj(a: Formula, b: Formula) -> Formula:
    return Implies(Not(a), b)


def iff(a: Formula, b: Formula) -> Formula:
    return conj(Implies(a, b), Implies(b, a))


def exists(var: str, body: Formula) -> Formula:
    return Not(ForAll(var, Not(body)))


# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<arrow>->)|(?P<iff><->)|(?P<le><=)|(?P<ident>[a-z][a-z0-9']*)"
    r"|(?P<S>S)|(?P<zero>0)|(?P<ch>[()+*=!&|,]))"
)

_KEYWORDS = {"forall", "exists"}


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    i = 0
    n = len(text)
    while i < n:
        m = _TOKEN_RE.match(text, i)
        if m is None:
            if text[i:].strip() == "":
                break
            raise SyntaxErrorWithPos(f"unexpected character {text[i:].lstrip()[0]!r}", i)
        i = m.end()
        kind = m.lastgroup or ""
        val = m.group(kind)
        pos = m.start(kind)
        if kind == "ident" and val in _KEYWORDS:
            kind = val
        toks.append(_Tok(kind, val, pos))
    toks.append(_Tok("eof", "", n))
    return toks


# ---------------------------------------------------------------------------
# Parser (recursive descent)
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, toks: list[_Tok], deffn_arities: dict[str, int] | None):
        self.toks = toks
        self.i = 0
        self.arities = deffn_arities

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str, what: str) -> _Tok:
        t = self.next()
        if t.kind != kind:
            raise SyntaxErrorWithPos(f"expected {what}, found {t.text or 'end of input'!r}", t.pos)
        return t

    def fail(self, msg: str) -> SyntaxErrorWithPos:
        return SyntaxErrorWithPos(msg, self.peek().pos)

    # -- formulas, loosest first

    def formula(self) -> Formula:
        a = self.implication()
        if self.peek().kind == "iff":
            self.next()
            b = self.formula()
            return iff(a, b)
        return a

    def implication(self) -> Formula:
        a = self.disjunct()
        if self.peek().kind == "arrow":
            self.next()
            return Implies(a, self.implication())
        return a

    def disjunct(self) -> Formula:
        a = self.conjunct()
        while self.peek().kind == "ch" and self.peek().text == "|":
            self.next()
            a = disj(a, self.conjunct())
        return a

    def conjunct(self) -> Formula:
        a = self.unary()
        while self.peek().kind == "ch" and self.peek().text == "&":
            self.next()
            a = conj(a, self.unary())
        return a

    def unary(self) -> Formula:
        t = self.peek()
        if t.kind == "ch" and t.text == "!":
            self.next()
            return Not(self.unary())
        if t.kind == "forall":
            self.next()
            if self.peek().kind == "le":
                self.next()
                return self.bounded(BoundedForAll)
            v = self.expect("ident", "a variable").text
            return ForAll(v, self.unary())
        if t.kind == "exists":
            self.next()
            if self.peek().kind == "le":
                self.next()
                return self.bounded(BoundedExists)
            v = self.expect("ident", "a variable").text
            return exists(v, self.unary())
        return self.atom_or_group()

    def bounded(self, ctor) -> Formula:
        v = self.expect("ident", "a variable").text
        bound = self.bound_term()
        if v in term_variables(bound):
            raise SyntaxErrorWithPos(f"bound of {ctor.__name__} mentions its own variable {v!r}", self.peek().pos)
        body = self.unary()
        return ctor(v, bound, body)

    def atom_or_group(self) -> Formula:
        # "(" may open a parenthesized formula or a parenthesized term of an
        # atom; try the formula reading first and backtrack on failure.
        t = self.peek()
        if t.kind == "ch" and t.text == "(":
            save = self.i
            self.next()
            try:
                f = self.formula()
            except SyntaxErrorWithPos:
                self.i = save
            else:
                nxt = self.peek()
                if nxt.kind == "ch" and nxt.text == ")":
                    self.next()
                    after = self.peek()
                    if after.kind == "ch" and after.text == "=":
                        self.i = save  # "(t1) = t2": reparse as a term atom
                    else:
                        return f
                else:
                    self.i = save
        left = self.term()
        self.expect_eq()
        return Eq(left, self.term())

    def expect_eq(self) -> None:
        t = self.next()
        if not (t.kind == "ch" and t.text == "="):
            raise SyntaxErrorWithPos(f"expected '=', found {t.text or 'end of input'!r}", t.pos)

    # -- terms

    def term(self) -> Term:
        a = self.term_mul()
        while self.peek().kind == "ch" and self.peek().text == "+":
            self.next()
            a = Plus(a, self.term_mul())
        return a

    def term_mul(self) -> Term:
        a = self.term_primary()
        while self.peek().kind == "ch" and self.peek().text == "*":
            self.next()
            a = Times(a, self.term_primary())
        return a

    def bound_term(self) -> Term:
        # A quantifier bound is immediately followed by the body, so a bare
        # identifier before "(" is the bound variable's limit, not a function
        # application — unless the name is a registered function symbol.
        t = self.peek()
        if t.kind == "ident" and not (self.arities is not None and t.text in self.arities):
            self.next()
            return Var(t.text)
        return self.term_primary()

    def term_primary(self) -> Term:
        t = self.next()
        if t.kind == "zero":
            return ZERO
        if t.kind == "S":
            self.open_paren()
            arg = self.term()
            self.close_paren()
            return Succ(arg)
        if t.kind == "ident":
            if self.peek().kind == "ch" and self.peek().text == "(":
                self.next()
                args = [self.term()]
                while self.peek().kind == "ch" and self.peek().text == ",":
                    self.next()
                    args.append(self.term())
                self.close_paren()
                if self.arities is not None:
                    if t.text not in self.arities:
                        raise SyntaxErrorWithPos(f"unknown function symbol {t.text!r}", t.pos)
                    if self.arities[t.text] != len(args):
                        raise SyntaxErrorWithPos(
                            f"{t.text!r} expects {self.arities[t.text]} arguments, got {len(args)}", t.pos
                        )
                return DefFn(t.text, tuple(args))
            if self.arities is not None and t.text in self.arities:
                raise SyntaxErrorWithPos(f"{t.text!r} is a function symbol, not a variable", t.pos)
            return Var(t.text)
        if t.kind == "ch" and t.text == "(":
            inner = self.term()
            self.close_paren()
            return inner
        raise SyntaxErrorWithPos(f"expected a term, found {t.text or 'end of input'!r}", t.pos)

    def open_paren(self) -> None:
        t = self.next()
        if not (t.kind == "ch" and t.text == "("):
            raise SyntaxErrorWithPos("expected '('", t.pos)

    def close_paren(self) -> None:
        t = self.next()
        if not (t.kind == "ch" and t.text == ")"):
            raise SyntaxErrorWithPos("expected ')'", t.pos)


# The formula/term grammar is fixed; DefFn arity checking is optional and
# defaults to the standard registry's table (set lazily to avoid a cycle).
_DEFAULT_ARITIES: dict[str, int] | None = None


def set_default_arities(arities: dict[str, int]) -> None:
    global _DEFAULT_ARITIES
    _DEFAULT_ARITIES = dict(arities)


def _resolve_arities(deffn_arities: dict[str, int] | None) -> dict[str, int] | None:
    if deffn_arities is not None:
        return deffn_arities
    return _DEFAULT_ARITIES


def parse_formula(text: str, deffn_arities: dict[str, int] | None = None) -> Formula:
    """Parse a formula; raises SyntaxErrorWithPos with an offset on bad input."""
    ensure_recursion_headroom()
    p = _Parser(_tokenize(text), _resolve_arities(deffn_arities))
    f = p.formula()
    t = p.peek()
    if t.kind != "eof":
        raise SyntaxErrorWithPos(f"trailing input {t.text!r}", t.pos)
    return f


def parse_term(text: str, deffn_arities: dict[str, int] | None = None) -> Term:
    ensure_recursion_headroom()
    p = _Parser(_tokenize(text), _resolve_arities(deffn_arities))
    t = p.term()
    tok = p.peek()
    if tok.kind != "eof":
        raise SyntaxErrorWithPos(f"trailing input {tok.text!r}", tok.pos)
    return t


# ---------------------------------------------------------------------------
# Structural iteration helper (used by matchers and generators)
# ---------------------------------------------------------------------------


def subterms(t: Term) -> Iterator[Term]:
    stack = [t]
    while stack:
        cur = stack.pop()
        yield cur
        match cur:
            case Succ(arg):
                stack.append(arg)
            case Plus(a, b) | Times(a, b):
                stack.append(b)
                stack.append(a)
            case DefFn(_, args):
                stack.extend(reversed(args))
            case _:
                pass
