"""Exhaustive-enumeration kernels.

Both kernels walk a counter ``k`` over ``0 .. 2**n - 1``. Bit ``n-1-i`` of
``k`` set means pair/variable ``i`` takes its *second* option (component 2,
value 0), so ``k = 0`` is the all-first selection and increasing ``k`` is
lexicographic order with first-preferred. Each returns the first matching
``k`` or ``-1``.

Set ``SPECIALCOVER_DISABLE_NUMBA=1`` to route the public entry points to the
pure-numpy implementations. Results are identical either way.
"""
from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

HAVE_NUMBA = numba is not None
NUMBA_ENABLED = HAVE_NUMBA and os.environ.get("SPECIALCOVER_DISABLE_NUMBA", "").lower() not in (
    "1",
    "true",
    "yes",
)
BACKEND = "numba" if NUMBA_ENABLED else "numpy"

# bytes of scratch per numpy chunk
_CHUNK_BYTES = 1 << 22


def _covering_loop(first, second, full):
    n, w = first.shape
    total = 1 << n
    for k in range(total):
        ok = True
        for j in range(w):
            acc = np.uint64(0)
            for i in range(n):
                if (k >> (n - 1 - i)) & 1:
                    acc |= second[i, j]
                else:
                    acc |= first[i, j]
            if acc != full[j]:
                ok = False
                break
        if ok:
            return k
    return -1


def _satisfying_loop(pos, neg, n):
    total = 1 << n
    allbits = total - 1
    m = pos.shape[0]
    for k in range(total):
        true_vars = allbits ^ k
        ok = True
        for c in range(m):
            if (true_vars & pos[c]) == 0 and (k & neg[c]) == 0:
                ok = False
                break
        if ok:
            return k
    return -1


def first_covering_numpy(first: np.ndarray, second: np.ndarray, full: np.ndarray) -> int:
    n, w = first.shape
    total = 1 << n
    chunk = max(1, _CHUNK_BYTES // (8 * n * w))
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        k = np.arange(start, min(total, start + chunk), dtype=np.int64)
        take_second = ((k[:, None] >> shifts) & 1).astype(bool)
        comps = np.where(take_second[:, :, None], second[None, :, :], first[None, :, :])
        union = np.bitwise_or.reduce(comps, axis=1)
        hit = np.all(union == full[None, :], axis=1)
        if hit.any():
            return int(start + np.argmax(hit))
    return -1


def first_satisfying_numpy(pos: np.ndarray, neg: np.ndarray, n: int) -> int:
    total = 1 << n
    allbits = total - 1
    chunk = max(1, _CHUNK_BYTES // (8 * max(1, pos.shape[0])))
    for start in range(0, total, chunk):
        k = np.arange(start, min(total, start + chunk), dtype=np.int64)
        true_vars = allbits ^ k
        sat = ((true_vars[:, None] & pos[None, :]) != 0) | ((k[:, None] & neg[None, :]) != 0)
        hit = sat.all(axis=1)
        if hit.any():
            return int(start + np.argmax(hit))
    return -1


if HAVE_NUMBA:
    _covering_jit = numba.njit(cache=True)(_covering_loop)
    _satisfying_jit = numba.njit(cache=True)(_satisfying_loop)

    def first_covering_numba(first: np.ndarray, second: np.ndarray, full: np.ndarray) -> int:
        return int(_covering_jit(first, second, full))

    def first_satisfying_numba(pos: np.ndarray, neg: np.ndarray, n: int) -> int:
        return int(_satisfying_jit(pos, neg, np.int64(n)))

else:  # pragma: no cover
    first_covering_numba = None
    first_satisfying_numba = None


def first_covering(first: np.ndarray, second: np.ndarray, full: np.ndarray) -> int:
    """First covering counter for uint64 component masks of shape ``(n, words)``."""
    if NUMBA_ENABLED:
        return first_covering_numba(first, second, full)
    return first_covering_numpy(first, second, full)


def first_satisfying(pos: np.ndarray, neg: np.ndarray, n: int) -> int:
    """First satisfying counter; ``pos``/``neg`` are int64 clause masks, variable i at bit ``n-i``."""
    if NUMBA_ENABLED:
        return first_satisfying_numba(pos, neg, n)
    return first_satisfying_numpy(pos, neg, n)
