import random

import numpy as np
import pytest

from oracles import coverings, models
from specialcover import _kernels
from specialcover.generate import random_cnf, random_decomposition
from specialcover.solve import clause_masks, component_masks

needs_numba = pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")


def _index(selection):
    n = len(selection)
    return sum((1 - b) << (n - 1 - i) for i, b in enumerate(selection))


def _expected_cover(d):
    found = coverings([(p.first, p.second) for p in d.pairs], d.ground)
    return _index(found[0]) if found else -1


def _expected_sat(f):
    found = models(f.clauses, f.n)
    return _index(found[0]) if found else -1


@pytest.mark.parametrize("m", [5, 64, 65, 140])
def test_covering_backends_agree(m):
    rng = random.Random(m)
    impls = [_kernels.first_covering_numpy]
    if _kernels.HAVE_NUMBA:
        impls.append(_kernels.first_covering_numba)
    for _ in range(40):
        d = random_decomposition(rng, rng.randint(1, 9), m, density=rng.choice([0.05, 0.3]))
        first, second, full = component_masks(d)
        assert first.dtype == np.uint64 and first.shape == (d.n, (m + 63) // 64)
        expected = _expected_cover(d)
        for impl in impls:
            assert impl(first, second, full) == expected


def test_satisfying_backends_agree():
    rng = random.Random(31)
    impls = [_kernels.first_satisfying_numpy]
    if _kernels.HAVE_NUMBA:
        impls.append(_kernels.first_satisfying_numba)
    for _ in range(200):
        f = random_cnf(rng, rng.randint(1, 9), rng.randint(1, 20))
        pos, neg = clause_masks(f)
        expected = _expected_sat(f)
        for impl in impls:
            assert impl(pos, neg, f.n) == expected


def test_numpy_chunking_boundary(monkeypatch):
    monkeypatch.setattr(_kernels, "_CHUNK_BYTES", 64)
    rng = random.Random(32)
    for _ in range(50):
        d = random_decomposition(rng, rng.randint(1, 8), rng.randint(1, 10))
        assert _kernels.first_covering_numpy(*component_masks(d)) == _expected_cover(d)
        f = random_cnf(rng, rng.randint(1, 8), rng.randint(1, 10))
        pos, neg = clause_masks(f)
        assert _kernels.first_satisfying_numpy(pos, neg, f.n) == _expected_sat(f)


@needs_numba
def test_backend_flag_respected():
    import subprocess
    import sys

    code = "from specialcover import _kernels; print(_kernels.BACKEND)"
    env_off = {"SPECIALCOVER_DISABLE_NUMBA": "1", "PATH": ""}
    out = subprocess.run([sys.executable, "-c", code], env=env_off, capture_output=True, text=True)
    assert out.stdout.strip() == "numpy"
    out = subprocess.run([sys.executable, "-c", code], env={"PATH": ""}, capture_output=True, text=True)
    assert out.stdout.strip() == "numba"


def test_unsat_walks_everything():
    # a single pair ({e1}, {e2}) over {e1, e2} has no covering
    first = np.array([[1]], dtype=np.uint64)
    second = np.array([[2]], dtype=np.uint64)
    full = np.array([3], dtype=np.uint64)
    assert _kernels.first_covering(first, second, full) == -1
