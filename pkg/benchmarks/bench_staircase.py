"""Time the staircase kernels: numba loops against the chunked numpy path.

    python benchmarks/bench_staircase.py            # default cases
    python benchmarks/bench_staircase.py A 8 B 6    # family/rank pairs

Groebner bases are computed once up front; only the enumeration of standard
monomials and the degree histogram are timed.  The numba kernels are
compiled before timing starts.
"""

import argparse
import time

import numpy as np

from coflag import _kernels
from coflag.spaces import flag_presentation


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("cases", nargs="*", default=["A", "7", "B", "5", "D", "6", "A", "8"])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    pairs = list(zip(args.cases[::2], map(int, args.cases[1::2])))

    # warm the jit
    _kernels.staircase_numba(np.array([2, 2]), np.array([[1, 1]]))
    _kernels.degree_histogram_numba(np.zeros((1, 2), dtype=_kernels.EXP_DTYPE))

    print(f"{'space':<8}{'monomials':>12}{'numpy s':>12}{'numba s':>12}{'speedup':>10}")
    for family, n in pairs:
        q = flag_presentation(family, n).quotient
        bounds = np.array(q.pure_power_bounds())
        leads = np.array(q.gb.leading_monomials())

        def run_numpy():
            _kernels.degree_histogram_numpy(_kernels.staircase_numpy(bounds, leads))

        def run_numba():
            _kernels.degree_histogram_numba(_kernels.staircase_numba(bounds, leads))

        a = _kernels.staircase_numpy(bounds, leads)
        b = _kernels.staircase_numba(bounds, leads)
        assert np.array_equal(a, b)
        t_np = best_of(run_numpy, args.repeat)
        t_nb = best_of(run_numba, args.repeat)
        print(f"{family}{n:<7}{len(a):>12}{t_np:>12.4f}{t_nb:>12.4f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
