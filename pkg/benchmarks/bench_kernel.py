#!/usr/bin/env python3
"""Compare the compiled and pure-Python crystal kernels.

Times the raising loop (to the highest weight vertex) and single f_i
applications on seeded random words, for every backend that imports.
"""

import argparse
import random
import timeit

from cplactic.kernel import available_backends


def random_words(n, length, count, seed):
    rng = random.Random(seed)
    letters = list(range(1, n + 1)) + list(range(-n, 0))
    return [tuple(rng.choice(letters) for _ in range(length)) for _ in range(count)]


def bench(kernel, words, n, repeat):
    def raise_all():
        for w in words:
            kernel.raise_to_highest(w, n)

    def lower_all():
        for w in words:
            for i in range(1, n + 1):
                kernel.apply_f(w, n, i)

    return {
        "raise": min(timeit.repeat(raise_all, number=1, repeat=repeat)),
        "f_op": min(timeit.repeat(lower_all, number=1, repeat=repeat)),
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--rank", type=int, default=4)
    parser.add_argument("--length", type=int, default=40)
    parser.add_argument("--count", type=int, default=2000)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    words = random_words(args.rank, args.length, args.count, args.seed)
    backends = available_backends()
    results = {name: bench(k, words, args.rank, args.repeat) for name, k in backends.items()}
    for name, times in results.items():
        print(f"{name:>7}: raise {times['raise']:.4f}s  f_op {times['f_op']:.4f}s")
    if "cython" in results:
        for op in ("raise", "f_op"):
            print(f"speedup {op}: {results['python'][op] / results['cython'][op]:.1f}x")
    else:
        print("compiled kernel not built; only the pure-Python backend was timed")


if __name__ == "__main__":
    main()
