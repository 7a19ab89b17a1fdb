"""Seeded random instances for fuzzing.

Generators are constructive: every variable index 1..n and every pair is
placed first, then random extra literals/memberships are layered on top, so
no retry loop is needed to meet the occurrence constraints.
"""
from __future__ import annotations

import random
from typing import Optional, Union

from .core import BlockPair, CnfFormula, Decomposition

Seed = Union[int, str, random.Random]


def _rng(seed: Seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _check(n: int, m: int):
    if n < 1 or m < 1:
        raise ValueError(f"need n >= 1 and m >= 1, got n={n}, m={m}")


def random_cnf(seed: Seed, n: int, m: int, max_width: Optional[int] = 3) -> CnfFormula:
    """A formula with exactly ``m`` clauses in which each of x_1..x_n occurs.

    Clause widths are drawn from 1..max_width (capped at n); clauses that
    receive more forced variables than that simply grow wider.
    """
    _check(n, m)
    rng = _rng(seed)
    width_cap = min(n, max_width or n)
    clauses: list[dict[int, int]] = [{} for _ in range(m)]
    for v in rng.sample(range(1, n + 1), n):
        clauses[rng.randrange(m)][v] = rng.randrange(2)
    for clause in clauses:
        target = rng.randint(1, width_cap)
        free = [v for v in range(1, n + 1) if v not in clause]
        for v in rng.sample(free, max(0, min(len(free), target - len(clause)))):
            clause[v] = rng.randrange(2)
    return CnfFormula(tuple(tuple(v if s else -v for v, s in c.items()) for c in clauses), n)


def random_decomposition(seed: Seed, n: int, m: int, density: float = 0.25) -> Decomposition:
    """A decomposition of ``{1..m}`` into ``n`` nonempty pairs.

    Each pair gets one guaranteed element, each element one guaranteed pair,
    then every remaining (pair, element) slot is filled with probability
    ``density``. The side of each membership is a fair coin.
    """
    _check(n, m)
    rng = _rng(seed)
    slots: list[dict[int, int]] = [{} for _ in range(n)]
    for i in range(n):
        slots[i][rng.randint(1, m)] = rng.randrange(2)
    for e in range(1, m + 1):
        if not any(e in s for s in slots):
            slots[rng.randrange(n)][e] = rng.randrange(2)
    for i in range(n):
        for e in range(1, m + 1):
            if e not in slots[i] and rng.random() < density:
                slots[i][e] = rng.randrange(2)
    pairs = tuple(
        BlockPair(
            frozenset(e for e, side in s.items() if side),
            frozenset(e for e, side in s.items() if not side),
        )
        for s in slots
    )
    return Decomposition(pairs, tuple(range(1, m + 1)))


def random_shape(rng: random.Random, n_max: int, m_max: int) -> tuple[int, int]:
    return rng.randint(1, n_max), rng.randint(1, m_max)
