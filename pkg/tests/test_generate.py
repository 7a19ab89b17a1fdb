import random

import pytest

from specialcover.codec import parse_cnf, parse_decomp, serialize_cnf, serialize_decomp
from specialcover.generate import random_cnf, random_decomposition


def test_deterministic():
    assert random_cnf(5, 4, 6) == random_cnf(5, 4, 6)
    assert random_decomposition(5, 4, 6) == random_decomposition(5, 4, 6)


def test_exact_shape():
    rng = random.Random(1)
    for _ in range(300):
        n, m = rng.randint(1, 15), rng.randint(1, 15)
        f = random_cnf(rng, n, m)
        assert (f.n, f.m) == (n, m) and f.all_variables_occur()
        assert parse_cnf(serialize_cnf(f)) == f
        d = random_decomposition(rng, n, m)
        assert (d.n, d.m) == (n, m) and d.ground == tuple(range(1, m + 1))
        assert parse_decomp(serialize_decomp(d)) == d


def test_single_pair_shapes():
    seen = {serialize_decomp(random_decomposition(s, 1, 1)) for s in range(20)}
    assert seen == {"e.1#~", "~#e.1"}


def test_one_clause_holds_every_variable():
    f = random_cnf(3, 9, 1)
    assert len(f.clauses[0]) == 9


@pytest.mark.parametrize("n,m", [(0, 1), (1, 0), (-1, 3)])
def test_rejects_bad_shape(n, m):
    with pytest.raises(ValueError):
        random_cnf(0, n, m)
    with pytest.raises(ValueError):
        random_decomposition(0, n, m)
