"""Exact decision procedures for satisfiability and covering existence.

Every positive result carries a witness that is re-checked before it is
returned. Enumeration order is fixed (leftmost pair/variable most
significant, first component / value 1 tried first), so witnesses are
deterministic and the exhaustive and pruned procedures return the same one.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .core import CnfFormula, Decomposition, Selection, infer_forced, is_covering

MAX_EXHAUSTIVE_N = 20


class GuardLimitError(ValueError):
    """Instance too large for an exponential procedure."""


@dataclass(frozen=True)
class SolveResult:
    problem: str  # "sat" or "cover"
    positive: bool
    witness: Optional[Selection] = None
    nodes: int = 0
    inferences: int = 0
    witness_pair: Optional[int] = None

    @property
    def verdict(self) -> str:
        if self.problem == "sat":
            return "SAT" if self.positive else "UNSAT"
        return "COVER" if self.positive else "NO-COVERING"

    def line(self) -> str:
        if self.positive:
            return f"{self.verdict} {','.join(map(str, self.witness))}"
        return self.verdict


def _guard(n: int):
    if n > MAX_EXHAUSTIVE_N:
        raise GuardLimitError(f"n={n} exceeds the exhaustive-search limit of {MAX_EXHAUSTIVE_N}")


def _selection(k: int, n: int) -> Selection:
    return tuple(1 - ((k >> (n - 1 - i)) & 1) for i in range(n))


def _certify_sat(f: CnfFormula, result: SolveResult) -> SolveResult:
    if result.positive and not f.evaluate(result.witness):
        raise RuntimeError(f"solver returned a non-satisfying assignment {result.witness}")
    return result


def _certify_cover(d: Decomposition, result: SolveResult) -> SolveResult:
    if result.positive and not is_covering(d, result.witness):
        raise RuntimeError(f"solver returned a non-covering selection {result.witness}")
    return result


def clause_masks(f: CnfFormula) -> tuple[np.ndarray, np.ndarray]:
    """Positive/negative variable masks per clause, variable i at bit ``n-i``."""
    pos = np.zeros(f.m, dtype=np.int64)
    neg = np.zeros(f.m, dtype=np.int64)
    for c, clause in enumerate(f.clauses):
        for lit in clause:
            bit = 1 << (f.n - abs(lit))
            if lit > 0:
                pos[c] |= bit
            else:
                neg[c] |= bit
    return pos, neg


def component_masks(d: Decomposition) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """uint64 word masks ``(first, second, full)`` over the ground set in ascending order."""
    position = {e: k for k, e in enumerate(d.ground)}
    words = (d.m + 63) // 64

    def pack(members) -> list[int]:
        value = 0
        for e in members:
            value |= 1 << position[e]
        return [(value >> (64 * j)) & 0xFFFFFFFFFFFFFFFF for j in range(words)]

    first = np.array([pack(p.first) for p in d.pairs], dtype=np.uint64).reshape(d.n, words)
    second = np.array([pack(p.second) for p in d.pairs], dtype=np.uint64).reshape(d.n, words)
    full = np.array(pack(d.ground), dtype=np.uint64)
    return first, second, full


def sat_truthtable(f: CnfFormula) -> SolveResult:
    _guard(f.n)
    pos, neg = clause_masks(f)
    k = _kernels.first_satisfying(pos, neg, f.n)
    if k < 0:
        return SolveResult("sat", False, nodes=1 << f.n)
    return _certify_sat(f, SolveResult("sat", True, _selection(k, f.n), nodes=k + 1))


def cover_bruteforce(d: Decomposition) -> SolveResult:
    _guard(d.n)
    first, second, full = component_masks(d)
    k = _kernels.first_covering(first, second, full)
    if k < 0:
        return SolveResult("cover", False, nodes=1 << d.n)
    return _certify_cover(d, SolveResult("cover", True, _selection(k, d.n), nodes=k + 1))


def cover_inferred(d: Decomposition) -> SolveResult:
    """Covering search seeded by forced-component inference.

    An infeasibility certificate answers immediately. Otherwise a depth-first
    search fixes forced pairs and abandons any prefix whose remaining pairs
    cannot reach the uncovered elements.
    """
    _guard(d.n)
    outcome = infer_forced(d)
    if outcome.infeasible:
        return SolveResult("cover", False, inferences=len(outcome.forced), witness_pair=outcome.witness)
    forced = outcome.forced_map()

    position = {e: k for k, e in enumerate(d.ground)}
    masks = []
    for p in d.pairs:
        masks.append(
            (sum(1 << position[e] for e in p.second), sum(1 << position[e] for e in p.first))
        )
    full = (1 << d.m) - 1
    n = d.n
    reach = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        reach[i] = reach[i + 1] | masks[i][0] | masks[i][1]
    options = [(forced[i],) if i in forced else (1, 0) for i in range(n)]

    choice = [0] * n
    nodes = 0

    def search(i: int, covered: int) -> bool:
        nonlocal nodes
        nodes += 1
        if i == n:
            return covered == full
        if covered | reach[i] != full:
            return False
        for bit in options[i]:
            choice[i] = bit
            if search(i + 1, covered | masks[i][bit]):
                return True
        return False

    found = search(0, 0)
    result = SolveResult(
        "cover", found, tuple(choice) if found else None, nodes=nodes, inferences=len(forced)
    )
    return _certify_cover(d, result)


def _assign(clauses: list[frozenset[int]], lit: int) -> Optional[list[frozenset[int]]]:
    out = []
    for c in clauses:
        if lit in c:
            continue
        if -lit in c:
            c = c - {-lit}
            if not c:
                return None
        out.append(c)
    return out


def sat_dpll(f: CnfFormula) -> SolveResult:
    """DPLL with unit propagation and pure-literal elimination.

    Branches on the smallest unassigned variable, trying true first.
    Variables left open once every clause is satisfied are set to 1.
    """
    nodes = 0
    inferences = 0

    def dpll(clauses: list[frozenset[int]], model: dict[int, int]) -> Optional[dict[int, int]]:
        nonlocal nodes, inferences
        nodes += 1
        model = dict(model)
        while True:
            unit = next((c for c in clauses if len(c) == 1), None)
            if unit is not None:
                (lit,) = unit
            else:
                lits = {l for c in clauses for l in c}
                pure = [l for l in lits if -l not in lits]
                if not pure:
                    break
                lit = min(pure, key=lambda l: (abs(l), -l))
            model[abs(lit)] = 1 if lit > 0 else 0
            inferences += 1
            clauses = _assign(clauses, lit)
            if clauses is None:
                return None
        if not clauses:
            return model
        var = min(abs(l) for c in clauses for l in c)
        for lit in (var, -var):
            reduced = _assign(clauses, lit)
            if reduced is None:
                continue
            model[var] = 1 if lit > 0 else 0
            found = dpll(reduced, model)
            if found is not None:
                return found
        return None

    model = dpll([frozenset(c) for c in f.clauses], {})
    if model is None:
        return SolveResult("sat", False, nodes=nodes, inferences=inferences)
    witness = tuple(model.get(v, 1) for v in range(1, f.n + 1))
    return _certify_sat(f, SolveResult("sat", True, witness, nodes=nodes, inferences=inferences))


def covering_to_assignment(s: Sequence[int]) -> Selection:
    """Read a covering of the forward image as a variable assignment.

    With pair i laid out as (positive occurrences, negative occurrences),
    picking the first component is exactly x_i = 1, so this is the identity.
    """
    return tuple(int(b) for b in s)


SAT_ENGINES = {"truthtable": sat_truthtable, "dpll": sat_dpll}
COVER_ENGINES = {"brute": cover_bruteforce, "inferred": cover_inferred}
