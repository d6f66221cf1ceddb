"""Search-based proof verification and the NP witness-checking relation.

`proof_of` treats a proof as a bare sequence of formulas: a line is good if
*some* justification exists for it — an axiom-schema instance, a theory
axiom, modus ponens from two earlier lines, or (bounded) generalization of
an earlier line.  No annotations are consulted, so any stored-justification
valid proof is automatically search-valid (the converse direction of the
fast path in calculus.check_line).

Per line the search tries each schema matcher (linear in the line size) and
then scans preceding lines and pairs of preceding lines with early-exit
structural comparison.  `proof_of_with_cost` reports the deterministic work
counters; wall time is measured separately and carries no determinism
guarantee.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .calculus import (
    BGenJust,
    Cost,
    GenJust,
    Justification,
    MPJust,
    Proof,
    TheorySpec,
    eq_formulas,
    find_axiom_justification,
    proof_size,
)
from .syntax import (
    BoundedForAll,
    ForAll,
    Formula,
    Implies,
    ensure_recursion_headroom,
    formula_size,
)


@dataclass(frozen=True)
class CostReport:
    lines: int
    symbol_comparisons: int
    lines_scanned: int
    pair_searches: int
    wall_ns: int

    def as_dict(self) -> dict:
        return {
            "lines": self.lines,
            "symbol_comparisons": self.symbol_comparisons,
            "lines_scanned": self.lines_scanned,
            "pair_searches": self.pair_searches,
            "wall_ns": self.wall_ns,
        }


def _justify_line(
    theory: TheorySpec,
    lines: tuple,
    i: int,
    cost: Cost,
) -> Justification | None:
    """Find any justification for line i given lines[0..i-1]."""
    f = lines[i].formula

    just = find_axiom_justification(theory, f, cost)
    if just is not None:
        return just

    # modus ponens: an earlier implication with consequent f, whose
    # antecedent also appears earlier
    for j in range(i):
        cost.lines_scanned += 1
        big = lines[j].formula
        if isinstance(big, Implies) and eq_formulas(big.consequent, f, cost):
            for k in range(i):
                cost.pair_searches += 1
                if eq_formulas(lines[k].formula, big.antecedent, cost):
                    return MPJust(j, k)

    # generalization of an earlier line
    if isinstance(f, ForAll):
        for j in range(i):
            cost.lines_scanned += 1
            if eq_formulas(lines[j].formula, f.body, cost):
                return GenJust(j, f.var)
    if isinstance(f, BoundedForAll):
        for j in range(i):
            cost.lines_scanned += 1
            if eq_formulas(lines[j].formula, f.body, cost):
                return BGenJust(j, f.var, f.bound)

    return None


def verify(
    theory: TheorySpec,
    proof: Proof,
    cost: Cost | None = None,
    diagnostics: list[str] | None = None,
) -> bool:
    """Every line justifiable by search?  Empty proofs are rejected."""
    ensure_recursion_headroom()
    if cost is None:
        cost = Cost()
    if not proof.lines:
        if diagnostics is not None:
            diagnostics.append("empty proof")
        return False
    for i in range(len(proof.lines)):
        just = _justify_line(theory, proof.lines, i, cost)
        if just is None:
            if diagnostics is not None:
                diagnostics.append(f"line {i + 1}: no justification found")
            return False
    return True


def proof_of(
    theory: TheorySpec,
    proof: Proof,
    phi: Formula,
    diagnostics: list[str] | None = None,
) -> bool:
    """The checking relation: proof is valid under theory and concludes phi."""
    if not proof.lines:
        if diagnostics is not None:
            diagnostics.append("empty proof")
        return False
    if not eq_formulas(proof.conclusion, phi):
        if diagnostics is not None:
            diagnostics.append("conclusion differs from the target formula")
        return False
    return verify(theory, proof, diagnostics=diagnostics)


def proof_of_with_cost(theory: TheorySpec, proof: Proof, phi: Formula) -> tuple[bool, CostReport]:
    cost = Cost()
    t0 = time.perf_counter_ns()
    ok = bool(proof.lines) and eq_formulas(proof.conclusion, phi, cost) and verify(theory, proof, cost)
    wall = time.perf_counter_ns() - t0
    return ok, CostReport(
        lines=len(proof.lines),
        symbol_comparisons=cost.symbol_comparisons,
        lines_scanned=cost.lines_scanned,
        pair_searches=cost.pair_searches,
        wall_ns=wall,
    )


def check_witness(theory: TheorySpec, phi: Formula, proof: Proof, k: int) -> bool:
    """The NP relation behind the size-bounded provability language:

    accept iff size(proof) <= size(phi)**k and proof_of(theory, proof, phi).
    """
    if k < 1:
        raise ValueError("the polynomial exponent k must be >= 1")
    if proof_size(proof) > formula_size(phi) ** k:
        return False
    return proof_of(theory, proof, phi)


@dataclass
class RejectLog:
    """Cumulative diagnostics channel for repeated verification calls."""

    entries: list[tuple[str, str]] = field(default_factory=list)

    def note(self, target: str, reason: str) -> None:
        self.entries.append((target, reason))
