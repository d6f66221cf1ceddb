"""Checker-cost measurement on synthetic proof families.

The workhorse family is the detachment chain: k lines alternating
implication axioms and detachments, with every formula padded to roughly m
symbols.  Cost counters come from the checker itself (symbol comparisons,
lines scanned, pair searches); fits are ordinary least squares on log-log
points, reported as measured exponents — measurements, not asymptotic
claims.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .calculus import TheorySpec
from .derivations import Builder
from .goedel import standard_theory
from .syntax import Eq, Formula, Implies, Plus, Succ, Term, Times, ZERO, formula_size
from .verifier import CostReport, Proof, proof_of_with_cost


def _operator_chains(size: int, limit: int) -> list[Term]:
    """Zero-valued left-folded chains 0 op 0 op ... op 0 (op in {+, *}) of the
    given odd size; 2^(links) distinct shapes, emitted in mask order."""
    if size % 2 == 0 or size < 1:
        return []
    links = (size - 1) // 2
    out: list[Term] = []
    for mask in range(min(1 << links, limit)):
        t: Term = ZERO
        for bit in range(links):
            t = Plus(t, ZERO) if (mask >> bit) & 1 else Times(t, ZERO)
        out.append(t)
    return out


def _equal_value_atoms(m: int, count: int) -> list[Eq]:
    """Pairwise-distinct true closed equations of size close to m.

    Both sides evaluate to 0, so every atom is a computation axiom; distinct
    shapes keep the checker's scan from short-circuiting on repeats."""
    atoms: list[Eq] = []
    seen: set[Eq] = set()

    def emit(a: Eq) -> bool:
        if a not in seen:
            seen.add(a)
            atoms.append(a)
        return len(atoms) >= count

    top = m if m % 2 else m - 1
    for eq_size in range(top, 4, -2):
        total = eq_size - 1
        # zero = zero over operator chains (odd/odd split)
        for lsize in range(total - 1, 0, -2):
            for t in _operator_chains(lsize, count + 1):
                for u in _operator_chains(total - lsize, count + 1):
                    if emit(Eq(t, u)):
                        return atoms
        # S(zero) = S(zero) (even/even split)
        for lsize in range(total - 2, 1, -2):
            for t in _operator_chains(lsize - 1, count + 1):
                for u in _operator_chains(total - lsize - 1, count + 1):
                    if emit(Eq(Succ(t), Succ(u))):
                        return atoms
    # degenerate m: cycle what exists rather than fail
    while atoms and len(atoms) < count:
        atoms.append(atoms[len(atoms) % len(seen)])
    return atoms


def mp_chain(theory: TheorySpec, k: int, m: int) -> tuple[Proof, Formula]:
    """~k-line detachment chain with every atom of size ~m.

    Unit i contributes three lines: the atom A_i (a computation axiom), the
    padding axiom A_i -> (A_{i-1} -> A_i), and the detachment A_{i-1} -> A_i.
    Atoms are pairwise distinct, so justifying detachment line i scans the
    whole prefix — the quadratic pair search this family is built to expose."""
    b = Builder(theory)
    units = max(1, (k - 1) // 3)
    atoms = _equal_value_atoms(m, units + 1)
    prev = b.compute(atoms[0])
    cur = prev
    for i in range(1, units + 1):
        e = b.compute(atoms[i])
        pad = b.axiom("P1", Implies(atoms[i], Implies(atoms[i - 1], atoms[i])))
        cur = b.mp(pad, e)
    proof = b.proof(cur)
    return proof, b.formula_at(cur)


@dataclass(frozen=True)
class BenchPoint:
    k: int
    m: int
    lines: int
    target_size: int
    cost: CostReport


def run_chain_bench(
    theory: TheorySpec | None = None,
    k_values: list[int] | None = None,
    m_values: list[int] | None = None,
    fixed_k: int = 50,
    fixed_m: int = 16,
) -> tuple[list[BenchPoint], list[BenchPoint]]:
    """Two sweeps: cost vs k at fixed m, and cost vs m at fixed k."""
    th = theory if theory is not None else standard_theory()
    ks = k_values if k_values is not None else [10, 20, 40, 70, 100, 140, 200]
    ms = m_values if m_values is not None else [8, 16, 32, 64, 128, 256]
    k_points: list[BenchPoint] = []
    for k in ks:
        proof, phi = mp_chain(th, k, fixed_m)
        ok, cost = proof_of_with_cost(th, proof, phi)
        assert ok
        k_points.append(BenchPoint(k, fixed_m, len(proof.lines), formula_size(phi), cost))
    m_points: list[BenchPoint] = []
    for m in ms:
        proof, phi = mp_chain(th, fixed_k, m)
        ok, cost = proof_of_with_cost(th, proof, phi)
        assert ok
        m_points.append(BenchPoint(fixed_k, m, len(proof.lines), formula_size(phi), cost))
    return k_points, m_points


def loglog_slope(xs: list[int], ys: list[int]) -> float:
    """Least-squares slope of log(y) vs log(x)."""
    lx = np.log(np.asarray(xs, dtype=float))
    ly = np.log(np.maximum(np.asarray(ys, dtype=float), 1.0))
    return float(np.polyfit(lx, ly, 1)[0])


def chain_slopes(k_points: list[BenchPoint], m_points: list[BenchPoint]) -> tuple[float, float]:
    slope_k = loglog_slope([p.k for p in k_points], [p.cost.symbol_comparisons for p in k_points])
    slope_m = loglog_slope([p.m for p in m_points], [p.cost.symbol_comparisons for p in m_points])
    return slope_k, slope_m


def points_to_csv(points: list[BenchPoint], deterministic: bool = False) -> str:
    """CSV with one row per measurement; deterministic mode zeroes wall time
    so repeated runs of the same configuration are byte-identical."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "m", "lines", "target_size", "symbol_comparisons", "lines_scanned", "pair_searches", "wall_ns"])
    for p in points:
        w.writerow(
            [
                p.k,
                p.m,
                p.lines,
                p.target_size,
                p.cost.symbol_comparisons,
                p.cost.lines_scanned,
                p.cost.pair_searches,
                0 if deterministic else p.cost.wall_ns,
            ]
        )
    return buf.getvalue()
