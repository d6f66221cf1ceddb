"""The acceptance suite: nine measured criteria, one report.

Each criterion is a standalone callable returning a CriterionResult whose
details record the actual numbers (counts, slopes, sizes, runtimes).  The
JSON report is schema-versioned and canonically ordered so identical
configurations produce identical bytes (modulo wall-clock fields, which the
deterministic flag zeroes).
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, field

from . import config as cfgmod
from .bench import chain_slopes, run_chain_bench
from .bounded import (
    SearchLimits,
    enumerate_proofs,
    l_k_membership,
    regeneration_chain,
)
from .calculus import TheorySpec
from .corpus import (
    derived_theorem_corpus,
    diagonal_shapes,
    membership_formula_corpus,
    mutate_resolution_proof,
    random_clause_set,
    random_delta0_sentence,
    random_delta0_single_var,
)
from .goedel import (
    con_bounded,
    diagonalize,
    eval_delta0,
    induction_theory,
    refutation_target,
    standard_theory,
)
from .propositional import (
    Clause,
    ClauseSet,
    Extend,
    Input,
    Resolve,
    ResolutionProof,
    brute_force_satisfiable,
    check_resolution,
    dp_refutation,
    eval_prop,
    is_tautology_bruteforce,
    lit,
    lit_var,
    prop_vars,
    translate_delta0,
)
from .reference import sentence_truth
from .syntax import formula_size, parse_formula, print_formula
from .verifier import check_witness, proof_of, verify

SCHEMA = "forge-report/1"


@dataclass(frozen=True)
class CriterionResult:
    cid: int
    name: str
    passed: bool
    details: dict

    def line(self) -> str:
        return f"criterion {self.cid} ({self.name}): {'PASS' if self.passed else 'FAIL'}"


def _theory(cfg: cfgmod.RunConfig) -> TheorySpec:
    return induction_theory() if cfg.theory == "pa" else standard_theory()


# -- 1: checker cost scaling ------------------------------------------------


def criterion_1_verifier_scaling(cfg: cfgmod.RunConfig) -> CriterionResult:
    t0 = time.monotonic()
    ks = cfgmod.parse_points(cfg.bench_k, cfgmod.K_LADDER)
    ms = cfgmod.parse_points(cfg.bench_m, cfgmod.M_LADDER)
    k_points, m_points = run_chain_bench(_theory(cfg), ks, ms, fixed_k=cfg.fixed_k, fixed_m=cfg.fixed_m)
    slope_k, slope_m = chain_slopes(k_points, m_points)
    elapsed = time.monotonic() - t0
    passed = slope_k <= 2.2 and slope_m <= 1.3 and elapsed < 120
    return CriterionResult(
        1,
        "checker cost scaling",
        passed,
        {
            "slope_vs_k": round(slope_k, 4),
            "slope_vs_m": round(slope_m, 4),
            "slope_k_limit": 2.2,
            "slope_m_limit": 1.3,
            "k_points": [[p.k, p.cost.symbol_comparisons] for p in k_points],
            "m_points": [[p.m, p.cost.symbol_comparisons] for p in m_points],
            "seconds": 0.0 if cfg.deterministic else round(elapsed, 2),
        },
    )


# -- 2: size-class membership vs raw search --------------------------------


def criterion_2_membership_agreement(cfg: cfgmod.RunConfig) -> CriterionResult:
    th = _theory(cfg)
    rng = random.Random(cfg.seed)
    formulas = membership_formula_corpus(rng, 200)
    limits = SearchLimits(pool_cap=cfg.pool_cap, node_cap=min(cfg.node_cap, 4000))
    total = definitive = disagreements = 0
    for phi in formulas:
        for k in (1, 2, 3):
            total += 1
            mem = l_k_membership(th, phi, k, desk_cap=cfg.desk_cap, limits=limits)
            bound = formula_size(phi) ** k
            r = enumerate_proofs(th, phi, min(bound, cfg.desk_cap), limits=limits)
            if not (mem.definitive and r.definitive):
                continue
            definitive += 1
            if r.found:
                witness_ok = r.proof is not None and check_witness(th, phi, r.proof, k)
                if not (mem.member is True and witness_ok):
                    disagreements += 1
            else:
                if mem.member is not False:
                    disagreements += 1
    passed = disagreements == 0 and definitive > 0
    return CriterionResult(
        2,
        "membership agreement",
        passed,
        {"queries": total, "definitive": definitive, "disagreements": disagreements},
    )


# -- 3: soundness of accepted proofs ----------------------------------------


def criterion_3_soundness(cfg: cfgmod.RunConfig) -> CriterionResult:
    th = _theory(cfg)
    rng = random.Random(cfg.seed + 1)
    samples = derived_theorem_corpus(th, rng, 1000)
    accepted = true_conclusions = 0
    for s in samples:
        if verify(th, s.proof):
            accepted += 1
            if eval_delta0(th, s.formula):
                true_conclusions += 1
    eval_disagreements = 0
    for _ in range(10_000):
        sent = random_delta0_sentence(rng, depth=3, bound_cap=3)
        if eval_delta0(th, sent) != sentence_truth(sent):
            eval_disagreements += 1
    passed = accepted == len(samples) and true_conclusions == accepted and eval_disagreements == 0
    return CriterionResult(
        3,
        "soundness of accepted proofs",
        passed,
        {
            "proofs": len(samples),
            "accepted": accepted,
            "true_conclusions": true_conclusions,
            "evaluator_cross_checks": 10_000,
            "evaluator_disagreements": eval_disagreements,
        },
    )


# -- 4: fixed-point certificates ---------------------------------------------


def criterion_4_fixed_point(cfg: cfgmod.RunConfig) -> CriterionResult:
    th = _theory(cfg)
    shapes = diagonal_shapes(th)
    sizes: list[list[int]] = []
    accepted = 0
    for psi in shapes:
        result = diagonalize(th, psi)
        if proof_of(th, result.equivalence, result.biconditional):
            accepted += 1
        sizes.append(
            [formula_size(psi), formula_size(result.sentence), len(result.equivalence.lines)]
        )
    passed = accepted == len(shapes) and len(shapes) >= 20
    return CriterionResult(
        4,
        "fixed-point certificates",
        passed,
        {
            "shapes": len(shapes),
            "accepted": accepted,
            "sizes": sizes,  # [psi size, fixed-point size, equivalence proof lines]
        },
    )


# -- 5: bounded consistency ---------------------------------------------------


def criterion_5_bounded_consistency(cfg: cfgmod.RunConfig) -> CriterionResult:
    th = _theory(cfg)
    enum_budget = 10
    refutation = enumerate_proofs(th, refutation_target(), enum_budget)
    enum_ok = refutation.outcome == "none" and refutation.definitive
    eval_cap = 4
    # the m=4 point sweeps every candidate code below bnd(4); give the
    # evaluator room for all ~3.7M of them
    truths = {
        m: bool(eval_delta0(th, con_bounded(th, m, numeral_mode=cfg.numeral_mode), budget=10**10))
        for m in range(1, eval_cap + 1)
    }
    all_true = all(truths.values())
    # downward monotonicity: consistency at m forces consistency below m
    monotone = all(truths[m] or not truths[m + 1] for m in range(1, eval_cap))
    sizes = {m: formula_size(con_bounded(th, m, numeral_mode="binary")) for m in (2, 4, 8, 16, 32, 64, 128, 256, 512, 1024)}
    c, c0 = 1.0, 31.0
    growth_ok = all(sizes[m] <= c * math.log2(m) + c0 for m in sizes)
    passed = enum_ok and all_true and monotone and growth_ok
    return CriterionResult(
        5,
        "bounded consistency",
        passed,
        {
            "enumeration_budget": enum_budget,
            "enumeration_outcome": refutation.outcome,
            "enumeration_nodes": refutation.nodes,
            "evaluated": {str(m): truths[m] for m in truths},
            "monotone": monotone,
            "sizes": {str(m): sizes[m] for m in sizes},
            "growth_bound": f"size <= {c}*log2(m) + {c0}",
        },
    )


# -- 6: regeneration chain -----------------------------------------------------


def criterion_6_regeneration(cfg: cfgmod.RunConfig) -> CriterionResult:
    levels = regeneration_chain(depth=3, m=8)
    codes = [lv.con_code for lv in levels]
    distinct = len(set(codes)) == len(codes) == 3
    one_line = all(lv.next_level_one_line_ok for lv in levels)
    no_self = all(
        lv.self_search.outcome == "none" and lv.self_search.definitive for lv in levels
    )
    passed = distinct and one_line and no_self
    return CriterionResult(
        6,
        "regeneration chain",
        passed,
        {
            "levels": [lv.theory_name for lv in levels],
            "con_sizes": [lv.con_size for lv in levels],
            "pairwise_distinct": distinct,
            "one_line_accepted": one_line,
            "self_proof_outcomes": [lv.self_search.outcome for lv in levels],
        },
    )


# -- 7: resolution layer -------------------------------------------------------


def _replay_resolution(cs: ClauseSet, proof: ResolutionProof, extended: bool) -> bool:
    """Independent little replay used to classify fuzz mutants."""
    derived: list[frozenset] = []
    used = set(range(cs.n_vars)) | {lit_var(l) for c in cs.clauses for l in c}
    for s in proof.steps:
        if isinstance(s, Input):
            if not 0 <= s.index < len(cs.clauses):
                return False
            derived.append(cs.clauses[s.index])
        elif isinstance(s, Resolve):
            if not (0 <= s.left < len(derived) and 0 <= s.right < len(derived)):
                return False
            p, n = lit(s.pivot, True), lit(s.pivot, False)
            if p not in derived[s.left] or n not in derived[s.right]:
                return False
            derived.append((derived[s.left] - {p}) | (derived[s.right] - {n}))
        elif isinstance(s, Extend):
            if not extended or s.var in used or lit_var(s.a) == s.var or lit_var(s.b) == s.var:
                return False
            used.add(s.var)
            derived.extend(
                [
                    frozenset({lit(s.var, False), s.a}),
                    frozenset({lit(s.var, False), s.b}),
                    frozenset({lit(s.var, True), -s.a, -s.b}),
                ]
            )
        else:
            return False
    return bool(derived) and derived[-1] == frozenset()


def criterion_7_resolution(cfg: cfgmod.RunConfig) -> CriterionResult:
    rng = random.Random(cfg.seed + 2)
    canonical_cs = ClauseSet((frozenset({1}), frozenset({-1})), 1)
    canonical = ResolutionProof((Input(0), Input(1), Resolve(0, 1, 0)))
    php_cs = ClauseSet((frozenset({1}), frozenset({2}), frozenset({-1, -2})), 2)
    php = ResolutionProof((Input(0), Input(1), Input(2), Resolve(0, 2, 0), Resolve(1, 3, 1)))
    hand_ok = check_resolution(canonical_cs, canonical).ok and check_resolution(php_cs, php).ok

    invalid_seen = false_accepts = 0
    bases = [(canonical_cs, canonical), (php_cs, php)]
    while invalid_seen < 500:
        cs, base = bases[invalid_seen % len(bases)]
        mutant = mutate_resolution_proof(rng, base)
        ext = rng.random() < 0.5
        if _replay_resolution(cs, mutant, ext):
            continue  # mutation happened to stay valid; not an invalid sample
        invalid_seen += 1
        if check_resolution(cs, mutant, extended=ext).ok:
            false_accepts += 1

    violations = 0
    sets_checked = 0
    for _ in range(60):
        cs = random_clause_set(rng, max_vars=6, max_clauses=8)
        if cs.n_vars > 20:
            continue
        sets_checked += 1
        proof = dp_refutation(cs)
        sat = brute_force_satisfiable(cs)
        if proof is None:
            if not sat:
                violations += 1
        else:
            if not check_resolution(cs, proof).ok or sat:
                violations += 1
    passed = hand_ok and false_accepts == 0 and violations == 0
    return CriterionResult(
        7,
        "resolution layer",
        passed,
        {
            "hand_built_accepted": hand_ok,
            "invalid_fuzzed": invalid_seen,
            "false_accepts": false_accepts,
            "clause_sets_cross_checked": sets_checked,
            "unsat_cross_check_violations": violations,
        },
    )


# -- 8: translation adequacy -----------------------------------------------------


def criterion_8_translation(cfg: cfgmod.RunConfig) -> CriterionResult:
    th = _theory(cfg)
    rng = random.Random(cfg.seed + 3)
    t0 = time.monotonic()
    formulas = [random_delta0_single_var(rng) for _ in range(200)]
    checks = disagreements = 0
    for A in formulas:
        for n in range(1, 7):
            checks += 1
            taut = is_tautology_bruteforce(translate_delta0(A, "x", n))
            holds = all(eval_delta0(th, A, env={"x": i}) for i in range(n + 1))
            if taut != holds:
                disagreements += 1
    elapsed = time.monotonic() - t0
    passed = disagreements == 0 and elapsed < 300
    return CriterionResult(
        8,
        "translation adequacy",
        passed,
        {
            "formulas": len(formulas),
            "checks": checks,
            "disagreements": disagreements,
            "seconds": 0.0 if cfg.deterministic else round(elapsed, 2),
        },
    )


# -- 9: true but not cheaply provable ----------------------------------------------


def criterion_9_witness(cfg: cfgmod.RunConfig) -> CriterionResult:
    th = _theory(cfg)
    phi = parse_formula("0 = 0 -> 0 = 0")
    truth = eval_delta0(th, phi)
    m1 = l_k_membership(th, phi, 1, desk_cap=cfg.desk_cap)
    out_of_l1 = m1.member is False and m1.definitive
    in_level = None
    witness_lines = None
    for k in (2, 3):
        mk = l_k_membership(th, phi, k, desk_cap=cfg.desk_cap)
        if mk.member is True:
            in_level = k
            witness_lines = len(mk.proof.lines) if mk.proof is not None else None
            break
    passed = truth and out_of_l1 and in_level is not None
    return CriterionResult(
        9,
        "true but not cheaply provable",
        passed,
        {
            "sentence": print_formula(phi),
            "eval_true": truth,
            "level_1": {"member": m1.member, "definitive": m1.definitive, "outcome": m1.outcome},
            "member_at_level": in_level,
            "witness_proof_lines": witness_lines,
        },
    )


ALL_CRITERIA = (
    criterion_1_verifier_scaling,
    criterion_2_membership_agreement,
    criterion_3_soundness,
    criterion_4_fixed_point,
    criterion_5_bounded_consistency,
    criterion_6_regeneration,
    criterion_7_resolution,
    criterion_8_translation,
    criterion_9_witness,
)


def run_suite(cfg: cfgmod.RunConfig | None = None, echo=print, threads: int = 1) -> dict:
    """Run every criterion; report order is canonical regardless of scheduling."""
    cfg = cfg or cfgmod.RunConfig()
    cfg.validate()
    results = []
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            # map() yields in submission order, so the report stays canonical.
            for r in pool.map(lambda fn: fn(cfg), ALL_CRITERIA):
                if echo is not None:
                    echo(r.line())
                results.append(r)
    else:
        for fn in ALL_CRITERIA:
            r = fn(cfg)
            if echo is not None:
                echo(r.line())
            results.append(r)
    return {
        "schema": SCHEMA,
        "config": {k: v for k, v in sorted(vars(cfg).items())},
        "passed": all(r.passed for r in results),
        "criteria": [
            {"id": r.cid, "name": r.name, "passed": r.passed, "details": r.details} for r in results
        ],
    }


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
