"""Exhaustive proof search, language membership, and the regeneration chain."""

import random

import pytest

from proofforge.bounded import (
    SearchLimits,
    enumerate_proofs,
    formulas_of_size,
    l_k_membership,
    regeneration_chain,
    shortest_proof_length,
    terms_of_size,
)
from proofforge.corpus import membership_formula_corpus
from proofforge.goedel import eval_delta0, standard_theory
from proofforge.syntax import formula_size, is_delta0, is_sentence, parse_formula, print_formula, term_size
from proofforge.verifier import check_witness, proof_of

Q = standard_theory()
DESK_LIMITS = SearchLimits(node_cap=4_000)


@pytest.mark.parametrize("size, count", [(1, 17), (2, 136), (3, 3978), (4, 78064)])
def test_term_pool_counts_are_pinned(size, count):
    pool = terms_of_size(size)
    assert len(pool) == count
    assert len(set(pool)) == count


@pytest.mark.parametrize("size, count", [(3, 289), (4, 4913), (5, 163285)])
def test_formula_pool_counts_are_pinned(size, count):
    pool = formulas_of_size(size)
    assert len(pool) == count
    assert len(set(pool)) == count


def test_pools_contain_exactly_the_declared_size():
    for size in (1, 2, 3):
        assert all(term_size(t) == size for t in terms_of_size(size))
    for size in (3, 4):
        assert all(formula_size(f) == size for f in formulas_of_size(size))


def test_enumeration_finds_the_three_symbol_proof_of_reflexivity():
    r = enumerate_proofs(Q, parse_formula("0 = 0"), 3)
    assert r.outcome == "found"
    assert r.proof is not None and proof_of(Q, r.proof, parse_formula("0 = 0"))
    from proofforge.calculus import proof_size

    assert proof_size(r.proof) == 3


def test_enumeration_definitive_negative_below_minimum():
    for budget in (1, 2):
        r = enumerate_proofs(Q, parse_formula("0 = 0"), budget)
        assert r.outcome == "none"
        assert r.definitive


def test_enumeration_never_finds_a_false_sentence():
    # sweep every searched formula of size <= 5 that is closed bounded
    # arithmetic: anything the search proves must evaluate true
    found_false = []
    for size in (3, 4, 5):
        for f in formulas_of_size(size):
            if not (is_sentence(f) and is_delta0(f)):
                continue
            r = enumerate_proofs(Q, f, 7, limits=DESK_LIMITS)
            if r.outcome == "found" and not eval_delta0(Q, f):
                found_false.append(print_formula(f))
    assert found_false == []


def test_shortest_proof_length_pins():
    assert shortest_proof_length(Q, parse_formula("0 = 0"), 6) == (3, True)
    # the implication needs the detachment dance: EQREFL + P1 + MP is 23
    # symbols, and the node-capped sweep below that is honest about having
    # stopped early, so the length comes back non-definitive
    length, definitive = shortest_proof_length(Q, parse_formula("0 = 0 -> 0 = 0"), 24, limits=DESK_LIMITS)
    assert length == 23
    assert definitive is False


def test_membership_pins_for_the_reference_witness():
    phi = parse_formula("0 = 0 -> 0 = 0")
    out = l_k_membership(Q, phi, 1, limits=DESK_LIMITS)
    assert out.member is False and out.definitive
    inn = l_k_membership(Q, phi, 2, limits=DESK_LIMITS)
    assert inn.member is True and inn.proof is not None
    assert check_witness(Q, phi, inn.proof, 2)


def test_membership_agrees_with_direct_search_on_corpus():
    rng = random.Random(60089)
    checked = 0
    for phi in membership_formula_corpus(rng, 40):
        for k in (1, 2):
            rep = l_k_membership(Q, phi, k, limits=DESK_LIMITS)
            if not rep.definitive:
                continue
            direct = enumerate_proofs(Q, phi, rep.effective_bound, limits=DESK_LIMITS)
            checked += 1
            if direct.outcome == "found":
                assert rep.member is True
            elif direct.outcome == "none" and direct.definitive:
                assert rep.member is False
    assert checked >= 30


def test_membership_bound_is_size_power_k():
    phi = parse_formula("0 = 0 -> 0 = 0")  # size 7
    rep = l_k_membership(Q, phi, 2, desk_cap=60, limits=DESK_LIMITS)
    assert rep.bound == formula_size(phi) ** 2


def test_found_witnesses_satisfy_the_np_relation():
    rng = random.Random(60090)
    hits = 0
    for phi in membership_formula_corpus(rng, 60):
        rep = l_k_membership(Q, phi, 2, limits=DESK_LIMITS)
        if rep.member and rep.proof is not None:
            hits += 1
            assert check_witness(Q, phi, rep.proof, 2)
    assert hits >= 10


def test_regeneration_chain_climbs_with_receipts():
    levels = regeneration_chain(depth=2, m=8)
    assert len(levels) == 2
    codes = {lvl.con_code for lvl in levels}
    assert len(codes) == 2  # pairwise distinct consistency statements
    for lvl in levels:
        assert lvl.next_level_one_line_ok
        assert lvl.self_search.outcome == "none"
        assert lvl.self_search.definitive


def test_regeneration_depth_is_limited_by_the_symbol_pool():
    with pytest.raises(ValueError):
        regeneration_chain(depth=99)
