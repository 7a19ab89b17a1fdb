"""Sets, paired decompositions and coverings.

Elements are positive integers. A decomposition is an ordered tuple of
:class:`BlockPair` over a ground set; a selection is a tuple of bits, one
per pair, where ``1`` picks the pair's first component and ``0`` its second.
Pair indices in the API are 0-based; human-readable messages are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

FIRST = 1
SECOND = 0

Selection = tuple[int, ...]


class DecompositionError(ValueError):
    """Raised when block pairs do not form a valid decomposition."""

    def __init__(self, violation: "Violation"):
        super().__init__(violation.message)
        self.violation = violation


class FormulaError(ValueError):
    def __init__(self, rule: str, message: str, clause: Optional[int] = None):
        super().__init__(message)
        self.rule = rule
        self.clause = clause


@dataclass(frozen=True)
class Violation:
    """First violated decomposition condition.

    ``clause`` is one of ``"d1.i"`` (overlapping components), ``"d1.ii"``
    (both components empty), ``"d1.iii"`` (union differs from the ground
    set) or ``"empty"`` (no pairs, or an empty ground set).
    """

    clause: str
    pair: Optional[int]
    element: Optional[int]
    message: str


@dataclass(frozen=True)
class BlockPair:
    first: frozenset[int]
    second: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "first", frozenset(self.first))
        object.__setattr__(self, "second", frozenset(self.second))

    def component(self, bit: int) -> frozenset[int]:
        return self.first if bit else self.second

    def swapped(self) -> "BlockPair":
        return BlockPair(self.second, self.first)

    @property
    def members(self) -> frozenset[int]:
        return self.first | self.second


def _as_pair(p) -> BlockPair:
    if isinstance(p, BlockPair):
        return p
    first, second = p
    return BlockPair(frozenset(first), frozenset(second))


def find_violation(pairs: Iterable, ground: Iterable[int]) -> Optional[Violation]:
    """Return the first violated condition, or ``None`` if the input is valid.

    Pairs are scanned in order, checking disjointness then non-emptiness for
    each; the union/coverage condition comes after all per-pair checks.
    """
    pairs = [_as_pair(p) for p in pairs]
    ground = list(ground)
    for i, p in enumerate(pairs):
        shared = p.first & p.second
        if shared:
            e = min(shared)
            return Violation("d1.i", i, e, f"pair {i + 1}: components not disjoint (shared e{e})")
        if not p.first and not p.second:
            return Violation("d1.ii", i, None, f"pair {i + 1}: both components empty")
    ground_set = set(ground)
    if len(ground_set) != len(ground):
        dup = next(e for e in ground if ground.count(e) > 1)
        return Violation("d1.iii", None, dup, f"ground set lists e{dup} more than once")
    bad = [e for e in ground_set if not isinstance(e, int) or e < 1]
    if bad:
        return Violation("d1.iii", None, None, f"element indices must be positive integers, got {bad[0]!r}")
    for i, p in enumerate(pairs):
        outside = p.members - ground_set
        if outside:
            e = min(outside)
            return Violation("d1.iii", i, e, f"pair {i + 1}: e{e} is not in the ground set")
    covered = set().union(*(p.members for p in pairs)) if pairs else set()
    gap = ground_set - covered
    if gap:
        e = min(gap)
        return Violation("d1.iii", None, e, f"e{e} is not covered by any pair")
    if not pairs:
        return Violation("empty", None, None, "decomposition has no pairs")
    if not ground_set:
        return Violation("empty", None, None, "ground set is empty")
    return None


@dataclass(frozen=True)
class Decomposition:
    """Validated ordered list of block pairs.

    ``ground`` is kept sorted ascending, so two decompositions compare equal
    iff their pair sequences and ground sets are equal.
    """

    pairs: tuple[BlockPair, ...]
    ground: tuple[int, ...]

    def __post_init__(self):
        pairs = tuple(_as_pair(p) for p in self.pairs)
        ground = list(self.ground)
        v = find_violation(pairs, ground)
        if v is not None:
            raise DecompositionError(v)
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "ground", tuple(sorted(ground)))

    @classmethod
    def from_pairs(cls, pairs: Iterable) -> "Decomposition":
        """Build a decomposition whose ground set is the union of all components."""
        pairs = tuple(_as_pair(p) for p in pairs)
        ground = set().union(*(p.members for p in pairs)) if pairs else set()
        return cls(pairs, tuple(ground))

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def m(self) -> int:
        return len(self.ground)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self) -> Iterator[BlockPair]:
        return iter(self.pairs)


def validate_decomposition(pairs: Iterable, ground: Iterable[int]) -> Decomposition:
    pairs, ground = list(pairs), list(ground)
    v = find_violation(pairs, ground)
    if v is not None:
        raise DecompositionError(v)
    return Decomposition(tuple(pairs), tuple(ground))


def _check_length(d: Decomposition, s: Sequence[int]):
    if len(s) != d.n:
        raise ValueError(f"selection has {len(s)} choices, decomposition has {d.n} pairs")


def selected_union(d: Decomposition, s: Sequence[int]) -> frozenset[int]:
    _check_length(d, s)
    return frozenset().union(*(p.component(b) for p, b in zip(d.pairs, s)))


def is_covering(d: Decomposition, s: Sequence[int]) -> bool:
    return selected_union(d, s) == frozenset(d.ground)


def check_p1(d: Decomposition, s: Sequence[int]) -> bool:
    """Covering test phrased on unselected components.

    Every element of each unselected component must be found in the selected
    component of some other pair.
    """
    _check_length(d, s)
    chosen = [p.component(b) for p, b in zip(d.pairs, s)]
    for i, (p, b) in enumerate(zip(d.pairs, s)):
        for e in p.component(1 - b):
            if not any(e in c for j, c in enumerate(chosen) if j != i):
                return False
    return True


@dataclass(frozen=True)
class InferenceOutcome:
    forced: tuple[tuple[int, int], ...] = ()
    infeasible: bool = False
    witness: Optional[int] = None

    def forced_map(self) -> dict[int, int]:
        return dict(self.forced)


def private_elements(d: Decomposition) -> dict[int, tuple[int, int]]:
    """Map each element occurring in exactly one component to its (pair, bit)."""
    seen: dict[int, list[tuple[int, int]]] = {}
    for i, p in enumerate(d.pairs):
        for bit in (FIRST, SECOND):
            for e in p.component(bit):
                seen.setdefault(e, []).append((i, bit))
    return {e: where[0] for e, where in seen.items() if len(where) == 1}


def infer_forced(d: Decomposition) -> InferenceOutcome:
    """Single pass of the private-element rule.

    A component holding an element that appears in no other pair must be
    selected by every covering. If both components of a pair are forced,
    no covering exists and that pair is the witness.
    """
    marks: dict[int, set[int]] = {}
    for i, bit in private_elements(d).values():
        marks.setdefault(i, set()).add(bit)
    forced = []
    witness = None
    for i in sorted(marks):
        for bit in (FIRST, SECOND):
            if bit in marks[i]:
                forced.append((i, bit))
        if len(marks[i]) == 2 and witness is None:
            witness = i
    return InferenceOutcome(tuple(forced), witness is not None, witness)


def p_transform(d: Decomposition, perm: Sequence[int]) -> Decomposition:
    """Reorder pairs: position ``k`` of the result holds pair ``perm[k]``."""
    perm = list(perm)
    if sorted(perm) != list(range(d.n)):
        raise ValueError(f"not a permutation of 0..{d.n - 1}: {perm}")
    return Decomposition(tuple(d.pairs[i] for i in perm), d.ground)


def i_transform(d: Decomposition, flips: Iterable[int]) -> Decomposition:
    """Swap the two components of every pair whose index is in ``flips``."""
    flips = set(flips)
    if any(not 0 <= i < d.n for i in flips):
        raise ValueError(f"flip indices must lie in 0..{d.n - 1}: {sorted(flips)}")
    return Decomposition(
        tuple(p.swapped() if i in flips else p for i, p in enumerate(d.pairs)), d.ground
    )


def normalize_to_alpha(d: Decomposition, s: Sequence[int]) -> tuple[Decomposition, Selection]:
    """Flip every pair where ``s`` picks the second component.

    The returned selection picks the first component everywhere and still
    covers the flipped decomposition.
    """
    if not is_covering(d, s):
        raise ValueError("selection is not a covering")
    flips = [i for i, b in enumerate(s) if b == SECOND]
    return i_transform(d, flips), (FIRST,) * d.n


def all_selections(n: int) -> Iterator[Selection]:
    """Every selection of length ``n``, first components preferred, leftmost pair most significant."""
    return product((FIRST, SECOND), repeat=n)


def literal_var(lit: int) -> int:
    return abs(lit)


def literal_polarity(lit: int) -> int:
    return 1 if lit > 0 else 0


def make_literal(var: int, polarity: int) -> int:
    return var if polarity else -var


@dataclass(frozen=True)
class CnfFormula:
    """Ordered clauses of signed-integer literals (``+i`` is x_i, ``-i`` its negation).

    Literals inside a clause are kept sorted by variable index. ``n`` defaults
    to the largest variable index; a larger ``n`` declares variables that may
    not occur in any clause.
    """

    clauses: tuple[tuple[int, ...], ...]
    n: int = field(default=0)

    def __post_init__(self):
        clauses = tuple(tuple(sorted(c, key=abs)) for c in self.clauses)
        if not clauses:
            raise FormulaError("empty-formula", "formula has no clauses")
        top = 0
        for j, c in enumerate(clauses):
            if not c:
                raise FormulaError("empty-clause", f"clause {j + 1} is empty", j)
            for a, b in zip(c, c[1:]):
                if a == b:
                    raise FormulaError("duplicate-literal", f"clause {j + 1} repeats literal {a}", j)
                if a == -b:
                    raise FormulaError(
                        "complementary-literals", f"clause {j + 1} contains x{abs(a)} and its negation", j
                    )
            if c[0] == 0:
                raise FormulaError("index-range", f"clause {j + 1} uses variable 0", j)
            top = max(top, abs(c[-1]))
        n = self.n or top
        if top > n:
            raise FormulaError("index-range", f"variable {top} exceeds declared n={n}")
        object.__setattr__(self, "clauses", clauses)
        object.__setattr__(self, "n", n)

    @property
    def m(self) -> int:
        return len(self.clauses)

    def occurring(self) -> set[int]:
        return {abs(l) for c in self.clauses for l in c}

    def all_variables_occur(self) -> bool:
        return len(self.occurring()) == self.n

    def evaluate(self, assignment: Sequence[int]) -> bool:
        """Value of the formula under ``assignment[i-1]`` for variable i."""
        if len(assignment) != self.n:
            raise ValueError(f"assignment has {len(assignment)} values, formula has {self.n} variables")
        return all(any((assignment[abs(l) - 1] == 1) == (l > 0) for l in c) for c in self.clauses)
