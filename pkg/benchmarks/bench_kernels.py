"""Compare the numba and pure-numpy enumeration kernels.

Instances are built to have no solution, so both kernels sweep all 2**n
candidates. The first numba call per kernel is timed separately as the
compile cost.

    python benchmarks/bench_kernels.py --n 12 14 16 18 --repeat 3
"""
import argparse
import time

from specialcover import _kernels
from specialcover.core import BlockPair, CnfFormula, Decomposition
from specialcover.solve import clause_masks, component_masks


def unsat_formula(n):
    # x1 & (-x1 | x2) & ... & (-x_{n-1} | x_n) & -x_n
    clauses = [(1,)] + [(-i, i + 1) for i in range(1, n)] + [(-n,)]
    return CnfFormula(tuple(clauses), n)


def uncoverable(n, m=40):
    # element m+1 sits only in the second component of the last pair, element m+2 only in its first
    pairs = [BlockPair({(i % m) + 1}, {((i + 1) % m) + 1}) for i in range(n - 1)]
    pairs.append(BlockPair({m + 2}, {m + 1}))
    return Decomposition.from_pairs(pairs)


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def run(sizes, repeat):
    rows = []
    if _kernels.HAVE_NUMBA:
        f = unsat_formula(4)
        t0 = time.perf_counter()
        _kernels.first_satisfying_numba(*clause_masks(f), f.n)
        _kernels.first_covering_numba(*component_masks(uncoverable(4)))
        print(f"numba first-call (compile or cache load): {time.perf_counter() - t0:.2f}s")
    for n in sizes:
        f = unsat_formula(n)
        pos, neg = clause_masks(f)
        masks = component_masks(uncoverable(n))
        for kernel, args, np_fn, nb_fn in (
            ("satisfying", (pos, neg, n), _kernels.first_satisfying_numpy, _kernels.first_satisfying_numba),
            ("covering", masks, _kernels.first_covering_numpy, _kernels.first_covering_numba),
        ):
            t_np, r_np = best_of(np_fn, args, repeat)
            if nb_fn is not None:
                t_nb, r_nb = best_of(nb_fn, args, repeat)
                assert r_np == r_nb == -1
            else:
                t_nb = float("nan")
            rows.append((kernel, n, t_np, t_nb))
            print(f"{kernel:>10}  n={n:<3} numpy {t_np * 1e3:9.2f} ms   numba {t_nb * 1e3:9.2f} ms   "
                  f"speedup {t_np / t_nb:6.1f}x")
    return rows


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, nargs="+", default=[10, 12, 14, 16, 18])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    run(args.n, args.repeat)


if __name__ == "__main__":
    main()
