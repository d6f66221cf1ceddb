"""Terms and formulas: printing, parsing, substitution, and the size metric."""

import random

import pytest

from proofforge.syntax import (
    BoundedExists,
    BoundedForAll,
    Eq,
    ForAll,
    Implies,
    Not,
    Plus,
    Succ,
    SyntaxErrorWithPos,
    Times,
    Var,
    ZERO,
    formula_size,
    free_variables,
    is_delta0,
    is_sentence,
    numeral,
    numeral_value,
    parse_formula,
    parse_term,
    print_formula,
    print_term,
    substitute,
    term_size,
    term_variables,
)

VARS = ("x", "y", "z", "u", "v")


def random_term(rng: random.Random, depth: int) -> object:
    if depth == 0:
        return rng.choice([ZERO, Var(rng.choice(VARS)), numeral(rng.randrange(4))])
    match rng.randrange(4):
        case 0:
            return Succ(random_term(rng, depth - 1))
        case 1:
            return Plus(random_term(rng, depth - 1), random_term(rng, depth - 1))
        case 2:
            return Times(random_term(rng, depth - 1), random_term(rng, depth - 1))
        case _:
            return rng.choice([ZERO, Var(rng.choice(VARS))])


def random_formula(rng: random.Random, depth: int) -> object:
    """Full grammar, unbounded quantifiers included."""
    if depth == 0:
        return Eq(random_term(rng, 1), random_term(rng, 1))
    match rng.randrange(6):
        case 0:
            return Not(random_formula(rng, depth - 1))
        case 1:
            return Implies(random_formula(rng, depth - 1), random_formula(rng, depth - 1))
        case 2:
            return ForAll(rng.choice(VARS), random_formula(rng, depth - 1))
        case 3:
            bound = random_term(rng, 1)
            v = rng.choice([w for w in VARS if w not in term_variables(bound)])
            return BoundedForAll(v, bound, random_formula(rng, depth - 1))
        case 4:
            bound = random_term(rng, 1)
            v = rng.choice([w for w in VARS if w not in term_variables(bound)])
            return BoundedExists(v, bound, random_formula(rng, depth - 1))
        case _:
            return Eq(random_term(rng, depth - 1), random_term(rng, depth - 1))


def test_print_parse_round_trip_bulk():
    rng = random.Random(1187)
    for i in range(10_000):
        f = random_formula(rng, rng.randrange(1, 5))
        text = print_formula(f)
        assert parse_formula(text) == f, f"iteration {i}: {text}"


def test_term_print_parse_round_trip_bulk():
    rng = random.Random(3319)
    for _ in range(5_000):
        t = random_term(rng, rng.randrange(1, 5))
        assert parse_term(print_term(t)) == t


@pytest.mark.parametrize(
    "text",
    [
        "0 = 0",
        "!(0 = 0)",
        "S(0) + S(S(0)) = S(S(S(0)))",
        "forall x (x = x)",
        "forall<= y x (y = y)",
        "exists<= p S(S(0)) (p = 0)",
        "x * (y + S(0)) = y -> y = x",
        "forall x (forall<= y x (exists<= z y (z + y = x)))",
    ],
    ids=lambda s: s.replace(" ", ""),
)
def test_round_trip_pinned_shapes(text):
    f = parse_formula(text)
    assert parse_formula(print_formula(f)) == f


@pytest.mark.parametrize(
    "text, size",
    [
        ("0 = 0", 3),
        ("S(S(0))", 3),
        ("!(0 = 0)", 4),
        ("0 + S(0) = S(0)", 7),
        ("forall x (x = x)", 5),
        ("forall<= y x (y = y)", 6),
    ],
)
def test_size_metric_pins(text, size):
    try:
        obj = parse_formula(text)
        assert formula_size(obj) == size
    except SyntaxErrorWithPos:
        assert term_size(parse_term(text)) == size


def test_numeral_round_trip():
    for n in range(0, 40):
        t = numeral(n)
        assert numeral_value(t) == n
        assert term_size(t) == n + 1
    assert numeral_value(Plus(ZERO, ZERO)) is None


def naive_substitute(f, var, rep):
    """Blind textual substitution — correct only when no capture can happen."""
    match f:
        case Eq(a, b):
            return Eq(naive_substitute_term(a, var, rep), naive_substitute_term(b, var, rep))
        case Not(a):
            return Not(naive_substitute(a, var, rep))
        case Implies(a, b):
            return Implies(naive_substitute(a, var, rep), naive_substitute(b, var, rep))
        case ForAll(v, body):
            return f if v == var else ForAll(v, naive_substitute(body, var, rep))
        case BoundedForAll(v, bound, body):
            nb = naive_substitute_term(bound, var, rep)
            return BoundedForAll(v, nb, body if v == var else naive_substitute(body, var, rep))
        case BoundedExists(v, bound, body):
            nb = naive_substitute_term(bound, var, rep)
            return BoundedExists(v, nb, body if v == var else naive_substitute(body, var, rep))
    raise AssertionError(f)


def naive_substitute_term(t, var, rep):
    match t:
        case Var(name):
            return rep if name == var else t
        case Succ(a):
            return Succ(naive_substitute_term(a, var, rep))
        case Plus(a, b):
            return Plus(naive_substitute_term(a, var, rep), naive_substitute_term(b, var, rep))
        case Times(a, b):
            return Times(naive_substitute_term(a, var, rep), naive_substitute_term(b, var, rep))
    return t


def test_substitution_matches_naive_oracle_when_capture_free():
    # closed replacements can never be captured, so the naive recursion is a
    # sound oracle there
    rng = random.Random(94321)
    for _ in range(2_000):
        f = random_formula(rng, rng.randrange(1, 4))
        rep = numeral(rng.randrange(5))
        var = rng.choice(VARS)
        assert substitute(f, var, rep) == naive_substitute(f, var, rep)


def test_substitution_avoids_capture():
    # [x := y] under a binder for y must rename the binder, not capture
    f = ForAll("y", Eq(Var("x"), Var("y")))
    g = substitute(f, "x", Var("y"))
    assert isinstance(g, ForAll)
    assert g.var != "y"
    assert free_variables(g) == frozenset({"y"})


def test_substitution_no_free_occurrence_is_identity():
    f = parse_formula("forall x (x = x)")
    assert substitute(f, "x", numeral(3)) == f


def test_free_variables_and_sentences():
    assert free_variables(parse_formula("x + y = z")) == frozenset({"x", "y", "z"})
    assert free_variables(parse_formula("forall x (x = y)")) == frozenset({"y"})
    # a bound term contributes its variables even though the body binds v
    assert free_variables(parse_formula("forall<= v x (v = v)")) == frozenset({"x"})
    assert is_sentence(parse_formula("forall x (x = x)"))
    assert not is_sentence(parse_formula("x = x"))


@pytest.mark.parametrize(
    "text, verdict",
    [
        ("0 = 0", True),
        ("forall<= y S(S(0)) (y = y)", True),
        ("forall x (x = x)", False),
        ("exists<= y x (forall z (z = y))", False),
    ],
)
def test_is_delta0(text, verdict):
    assert is_delta0(parse_formula(text)) is verdict


@pytest.mark.parametrize("bad", ["", "0 =", "forall (x = x)", "S(0", "x = y ->", "= 0"])
def test_parse_errors_carry_position(bad):
    with pytest.raises(SyntaxErrorWithPos):
        parse_formula(bad)


def test_term_variables():
    assert term_variables(parse_term("x + S(y) * 0")) == frozenset({"x", "y"})
    assert term_variables(numeral(7)) == frozenset()
