"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Times the DW accumulation kernel, the Fourier twist kernel and the full
counting pipeline on a few manifolds, and checks both backends agree.
"""
import argparse
import sys
import timeit

from dwcount import kernel
from dwcount.counting import counts_from_dw
from dwcount.dw import dw_all
from dwcount.seifert import SeifertData

CASES = [
    (SeifertData(0, ((2, 1), (3, 1), (5, -1))), 8),
    (SeifertData(1, ((1, 1), (1, 3), (1, 5), (1, 2))), 32),
    (SeifertData(0, ((16, 1), (16, 3), (8, 1))), 32),
    (SeifertData(2, ((6, 1), (4, 3), (2, 1))), 48),
    (SeifertData(0, ((4, 1), (8, 3), (2, 1), (3, 2))), 64),
]


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="only the first three cases")
    args = ap.parse_args(argv)

    if kernel._ckernel is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation`")
        return 1
    cases = CASES[:3] if args.quick else CASES
    header = f"{'manifold':42} {'m':>3}  {'stage':10} {'cython':>10} {'python':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for M, m in cases:
        Zc = dw_all(M, m, max_work=None, backend="cython")
        Zp = dw_all(M, m, max_work=None, backend="python")
        assert [(v.coeffs, v.denom) for v in Zc] == [(v.coeffs, v.denom) for v in Zp]
        vecs = [v.coeffs for v in Zc]
        stages = {
            "accumulate": lambda be: dw_all(M, m, max_work=None, backend=be),
            "twist": lambda be: kernel.twist_sums(vecs, m, range(m), -1, backend=be),
            "pipeline": lambda be: counts_from_dw(
                dw_all(M, m, max_work=None, backend=be), backend=be
            ),
        }
        for name, fn in stages.items():
            tc = best(lambda: fn("cython"), args.repeat)
            tp = best(lambda: fn("python"), args.repeat)
            print(f"{M.render():42} {m:>3}  {name:10} {tc:10.4f} {tp:10.4f} {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
