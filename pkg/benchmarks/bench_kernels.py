"""Time each array kernel under numba and numpy on S_n tables.

    python benchmarks/bench_kernels.py [--degrees 5 6 7] [--repeat 5]

The numba timings exclude the first (compiling) call.
"""

import argparse
import itertools
import time

import numpy as np

from permhopf import _kernels as K

KERNELS = ("inversion_masks", "lex_ranks", "leq_rows", "accumulate_exclusive", "mobius_row")


def _inputs(n, rng):
    words = np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int64)
    masks = K.inversion_masks_np(words)
    size = len(words)
    rows = rng.integers(0, size, size=min(size, 256))
    bases = rng.integers(0, size, size=20)
    blockers = K.pad_blockers([list(rng.integers(0, size, size=8)) for _ in range(20)])
    order = np.argsort([bin(int(m)).count("1") for m in masks], kind="stable")
    return {
        "inversion_masks": (words,),
        "lex_ranks": (words,),
        "leq_rows": (masks, rows),
        "accumulate_exclusive": (masks, bases, blockers, np.zeros(size, dtype=np.int64)),
        "mobius_row": (masks[order],),
    }


def _best(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        fresh = tuple(a.copy() if isinstance(a, np.ndarray) else a for a in args)
        start = time.perf_counter()
        fn(*fresh)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--degrees", type=int, nargs="+", default=[5, 6, 7])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if not K.HAVE_NUMBA:
        raise SystemExit("numba is not installed")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<22}{'n':>3}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for n in args.degrees:
        inputs = _inputs(n, rng)
        for name in KERNELS:
            np_fn, nb_fn = getattr(K, name + "_np"), getattr(K, name + "_nb")
            nb_fn(*(a.copy() if isinstance(a, np.ndarray) else a for a in inputs[name]))  # compile
            t_np = _best(np_fn, inputs[name], args.repeat)
            t_nb = _best(nb_fn, inputs[name], args.repeat)
            print(f"{name:<22}{n:>3}{t_np * 1e3:>12.3f}{t_nb * 1e3:>12.3f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
