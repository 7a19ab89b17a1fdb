"""Randomized check that both reductions preserve the yes/no answer.

For each of ``count`` seeded instances per direction the harness checks
that the reduced string is accepted by the target recognizer, that the
decision is the same on both sides, that each side's witness carries over
to the other, and that the two reductions invert each other.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .codec import parse_cnf, parse_decomp, serialize_cnf, serialize_decomp
from .core import BlockPair, CnfFormula, Decomposition, is_covering
from .generate import random_cnf, random_decomposition, random_shape
from .reduce import t1_forward, t2_backward
from .solve import MAX_EXHAUSTIVE_N, GuardLimitError, cover_inferred, covering_to_assignment, sat_dpll

Forward = Callable[[CnfFormula], Decomposition]
Backward = Callable[[Decomposition], CnfFormula]


@dataclass
class VerifyReport:
    count: int
    forward: int = 0
    backward: int = 0
    roundtrip: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        c = self.count
        return f"{self.forward}/{c} forward, {self.backward}/{c} backward, {self.roundtrip}/{c} roundtrip"


def _forward_problem(f: CnfFormula, forward: Forward) -> Optional[str]:
    d = forward(f)
    if parse_decomp(serialize_decomp(d)) != d:
        return "image does not round-trip through the decomposition recognizer"
    sat = sat_dpll(f)
    cov = cover_inferred(d)
    if sat.positive != cov.positive:
        return f"{sat.verdict} but {cov.verdict}"
    if sat.positive and not is_covering(d, sat.witness):
        return f"satisfying assignment {sat.witness} does not cover the image"
    if cov.positive and not f.evaluate(covering_to_assignment(cov.witness)):
        return f"covering {cov.witness} does not satisfy the formula"
    return None


def _backward_problem(d: Decomposition, backward: Backward) -> Optional[str]:
    g = backward(d)
    if parse_cnf(serialize_cnf(g)) != g:
        return "image does not round-trip through the formula recognizer"
    cov = cover_inferred(d)
    sat = sat_dpll(g)
    if sat.positive != cov.positive:
        return f"{cov.verdict} but {sat.verdict}"
    if cov.positive and not g.evaluate(cov.witness):
        return f"covering {cov.witness} does not satisfy the image"
    if sat.positive and not is_covering(d, sat.witness):
        return f"satisfying assignment {sat.witness} does not cover the decomposition"
    return None


def _roundtrip_problem(f: CnfFormula, d: Decomposition, forward: Forward, backward: Backward) -> Optional[str]:
    if backward(forward(f)) != f:
        return f"formula {serialize_cnf(f)} changes after forward then backward"
    if forward(backward(d)) != d:
        return f"decomposition {serialize_decomp(d)} changes after backward then forward"
    return None


def _guarded(check, *args) -> Optional[str]:
    try:
        return check(*args)
    except Exception as exc:  # a broken reduction may produce invalid values
        return f"{type(exc).__name__}: {exc}"


def run_verify(
    count: int,
    seed: int,
    n_max: int = 8,
    m_max: int = 12,
    forward: Forward = t1_forward,
    backward: Backward = t2_backward,
) -> VerifyReport:
    if n_max > MAX_EXHAUSTIVE_N:
        raise GuardLimitError(f"n-max={n_max} exceeds the exhaustive-search limit of {MAX_EXHAUSTIVE_N}")
    if n_max < 1 or m_max < 1:
        raise ValueError("n-max and m-max must be at least 1")
    report = VerifyReport(count)
    for i in range(count):
        rng = random.Random(f"{seed}:{i}")
        f = random_cnf(rng, *random_shape(rng, n_max, m_max))
        d = random_decomposition(rng, *random_shape(rng, n_max, m_max))

        problem = _guarded(_forward_problem, f, forward)
        if problem is None:
            report.forward += 1
        else:
            report.failures.append(f"forward {serialize_cnf(f)} : {problem}")

        problem = _guarded(_backward_problem, d, backward)
        if problem is None:
            report.backward += 1
        else:
            report.failures.append(f"backward {serialize_decomp(d)} : {problem}")

        problem = _guarded(_roundtrip_problem, f, d, forward, backward)
        if problem is None:
            report.roundtrip += 1
        else:
            report.failures.append(f"roundtrip {serialize_cnf(f)} {serialize_decomp(d)} : {problem}")
    return report


def _drop_negative(f: CnfFormula) -> Decomposition:
    d = t1_forward(f)
    return Decomposition(tuple(BlockPair(p.first, frozenset()) if p.first else p for p in d.pairs), d.ground)


def _flip_first_clause(d: Decomposition) -> CnfFormula:
    f = t2_backward(d)
    return CnfFormula((tuple(-l for l in f.clauses[0]),) + f.clauses[1:], f.n)


# deliberately broken reductions for exercising the harness itself
FAULTS: dict[str, tuple[Forward, Backward]] = {
    "none": (t1_forward, t2_backward),
    "forward-drop-negative": (_drop_negative, t2_backward),
    "backward-flip-clause": (t1_forward, _flip_first_clause),
}
