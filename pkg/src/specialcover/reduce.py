"""Reductions between formulas and decompositions.

Forward: clause j becomes element j, and variable i becomes the pair
(clauses containing x_i, clauses containing not-x_i). Backward: each ground
element, in ascending index order, becomes one clause holding x_j when the
element lies in the first component of pair j and not-x_j when it lies in
the second. A selection bit of 1 therefore reads directly as "x_i is true".
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .codec import SENTINEL, ParseError, Text, parse_cnf, parse_decomp, serialize_cnf, serialize_decomp
from .core import BlockPair, CnfFormula, Decomposition


def t1_forward(f: CnfFormula) -> Decomposition:
    positive: list[set[int]] = [set() for _ in range(f.n)]
    negative: list[set[int]] = [set() for _ in range(f.n)]
    for j, clause in enumerate(f.clauses, start=1):
        for lit in clause:
            (positive if lit > 0 else negative)[abs(lit) - 1].add(j)
    missing = [i + 1 for i in range(f.n) if not positive[i] and not negative[i]]
    if missing:
        raise ValueError(f"variable x{missing[0]} occurs in no clause")
    pairs = tuple(BlockPair(frozenset(p), frozenset(q)) for p, q in zip(positive, negative))
    return Decomposition(pairs, tuple(range(1, f.m + 1)))


def t2_backward(d: Decomposition) -> CnfFormula:
    position = {e: k for k, e in enumerate(d.ground)}
    clauses: list[list[int]] = [[] for _ in d.ground]
    for j, pair in enumerate(d.pairs, start=1):
        for e in pair.first:
            clauses[position[e]].append(j)
        for e in pair.second:
            clauses[position[e]].append(-j)
    return CnfFormula(tuple(tuple(c) for c in clauses), d.n)


@dataclass(frozen=True)
class ReductionOutput:
    """Result of a total string-level reduction.

    When the input is rejected, ``sentinel`` is true, ``value`` is ``None``
    and ``text`` is ``"~#~"``; ``error`` then holds the recognizer's reason.
    """

    value: Optional[Union[Decomposition, CnfFormula]]
    sentinel: bool
    text: str
    error: Optional[ParseError] = None


def r1_total(text: Text) -> ReductionOutput:
    try:
        f = parse_cnf(text)
    except ParseError as exc:
        return ReductionOutput(None, True, SENTINEL, exc)
    d = t1_forward(f)
    return ReductionOutput(d, False, serialize_decomp(d))


def r2_total(text: Text) -> ReductionOutput:
    try:
        d = parse_decomp(text)
    except ParseError as exc:
        return ReductionOutput(None, True, SENTINEL, exc)
    f = t2_backward(d)
    return ReductionOutput(f, False, serialize_cnf(f))
