"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--number 200]

Entries are bounded rationals, the regime the package actually runs in.
Most of the cost there is Fraction arithmetic, which neither backend can
avoid, so expect a modest speedup rather than an order of magnitude.
"""
import argparse
import random
import timeit
from fractions import Fraction

from gamma2.kernels import available_backends


def random_flat(rng, n, complex_=False):
    re = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n * n))
    im = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n * n)) if complex_ else None
    return re, im


def cases(rng):
    for n in (2, 4, 8):
        a, b = random_flat(rng, n), random_flat(rng, n)
        yield f"matmul real {n}x{n}", "matmul", (n, a[0], None, b[0], None)
    for n in (2, 8):
        a, b = random_flat(rng, n, True), random_flat(rng, n, True)
        yield f"matmul gaussian {n}x{n}", "matmul", (n, *a, *b)
    for length in (12, 200):
        letters = tuple(rng.choice((1, 2)) for _ in range(length))
        yield f"reduce_letters len {length}", "reduce_letters", (letters,)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; timing the Python fallback only")
    names = sorted(backends)
    print(f"{'case':<26}" + "".join(f"{n + ' (us)':>16}" for n in names) + f"{'speedup':>10}")
    for label, fn, call_args in cases(random.Random(args.seed)):
        best = {}
        for name in names:
            f = getattr(backends[name], fn)
            t = min(timeit.repeat(lambda: f(*call_args), repeat=args.repeat, number=args.number))
            best[name] = t / args.number * 1e6
        speedup = f"{best['python'] / best['cython']:.2f}x" if "cython" in best else "-"
        print(f"{label:<26}" + "".join(f"{best[n]:>16.2f}" for n in names) + f"{speedup:>10}")


if __name__ == "__main__":
    main()
