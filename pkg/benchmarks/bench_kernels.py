"""Compare the compiled and pure-Python series kernels.

    python benchmarks/bench_kernels.py [--prec 60] [--repeat 5]

Times the raw Cauchy product on Eisenstein-sized integers, then the full
I3(e6) evaluation with each backend swapped in.
"""
import argparse
import random
import timeit

from invmod import _backend, _kernels_py, binforms, modforms, psi

try:
    from invmod import _kernels
except ImportError:
    _kernels = None


def _swap(mod):
    for name in ("convolve", "axpby", "scale_by_index"):
        setattr(_backend, name, getattr(mod, name))


def bench_convolve(mod, prec, repeat):
    rng = random.Random(0)
    a = [rng.randint(-10**40, 10**40) for _ in range(prec + 1)]
    b = [rng.randint(-10**40, 10**40) for _ in range(prec + 1)]
    return min(timeit.repeat(lambda: mod.convolve(a, b, prec), number=200, repeat=repeat)) / 200


def bench_psi(mod, prec, repeat):
    _swap(mod)
    inv = binforms.catalog("I3")

    def run():
        modforms._monomial_series.cache_clear()
        f = modforms.eisenstein(6, prec)
        psi.evaluate_invariant(inv, [f], prec)

    return min(timeit.repeat(run, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--prec", type=int, default=60)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    mods = [("python", _kernels_py)] + ([("cython", _kernels)] if _kernels else [])
    print(f"prec={args.prec}")
    rows = []
    for label, mod in mods:
        c = bench_convolve(mod, args.prec, args.repeat)
        p = bench_psi(mod, args.prec, args.repeat)
        rows.append((label, c, p))
        print(f"{label:7} convolve {c * 1e6:9.1f} us   I3(e6) {p * 1e3:8.1f} ms")
    if len(rows) == 2:
        (_, c0, p0), (_, c1, p1) = rows
        print(f"speedup  convolve x{c0 / c1:.2f}   I3(e6) x{p0 / p1:.2f}")
    if _kernels is None:
        print("compiled kernels not built; only the pure-Python backend was timed")


if __name__ == "__main__":
    main()
