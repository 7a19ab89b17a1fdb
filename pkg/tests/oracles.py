"""Independent reference checks.

These re-derive language membership and decisions straight from the
definitions using regexes, ``str.split`` and plain set algebra. They share
no code with the package's tokenizer, recognizers, kernels or search.
"""
import random
import re
from itertools import product

_LIT = re.compile(r"x([01])\.(1[01]*)")
_EL = re.compile(r"e\.(1[01]*)")


def slow_cnf(text):
    """Clauses as lists of signed ints if ``text`` is a valid formula string, else None."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError:
            return None
    clauses = []
    used = set()
    for chunk in text.split("*"):
        if chunk == "":
            return None
        clause = []
        for item in chunk.split(","):
            mt = _LIT.fullmatch(item)
            if mt is None:
                return None
            i = int(mt.group(2), 2)
            clause.append(i if mt.group(1) == "1" else -i)
        indices = [abs(l) for l in clause]
        if len(set(indices)) != len(indices):
            return None
        used.update(indices)
        clauses.append(clause)
    if used != set(range(1, len(used) + 1)):
        return None
    return clauses


def slow_decomp(text):
    """Pairs as (set, set) if ``text`` is a valid decomposition string, else None."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError:
            return None
    pairs = []
    for chunk in text.split("*"):
        sides = chunk.split("#")
        if len(sides) != 2:
            return None
        sets = []
        for side in sides:
            if side == "~":
                sets.append(set())
                continue
            idx = []
            for item in side.split(","):
                mt = _EL.fullmatch(item)
                if mt is None:
                    return None
                idx.append(int(mt.group(1), 2))
            if len(set(idx)) != len(idx):
                return None
            sets.append(set(idx))
        if not sets[0] and not sets[1]:
            return None
        if sets[0] & sets[1]:
            return None
        pairs.append((sets[0], sets[1]))
    return pairs


def coverings(pairs, ground):
    """All covering selections of ``[(first, second), ...]``, in first-preferred order."""
    ground = set(ground)
    out = []
    for s in product((1, 0), repeat=len(pairs)):
        union = set()
        for (a, b), bit in zip(pairs, s):
            union |= a if bit else b
        if union == ground:
            out.append(s)
    return out


def models(clauses, n):
    """All satisfying assignments, in value-1-first order."""
    out = []
    for s in product((1, 0), repeat=n):
        if all(any((s[abs(l) - 1] == 1) == (l > 0) for l in c) for c in clauses):
            out.append(s)
    return out


_ALPHABET = "x01.e,*#~"


def mutate(text, rng: random.Random, edits=None):
    """Apply 1-3 random character edits drawn mostly from the grammar's own alphabet."""
    s = list(text)
    for _ in range(edits or rng.randint(1, 3)):
        op = rng.randrange(4)
        ch = rng.choice(_ALPHABET) if rng.random() < 0.95 else rng.choice(" 2X\n")
        if op == 0 or not s:
            s.insert(rng.randint(0, len(s)), ch)
        elif op == 1:
            del s[rng.randrange(len(s))]
        elif op == 2:
            s[rng.randrange(len(s))] = ch
        else:
            i = rng.randrange(len(s))
            j = rng.randrange(len(s))
            s[i], s[j] = s[j], s[i]
    return "".join(s)
