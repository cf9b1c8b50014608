"""Time the numba kernels against their numpy counterparts.

    python3 benchmarks/bench_kernels.py [--repeat 20]
"""

import argparse
import timeit

import numpy as np

from chebwave import _kernels as K

CASES = [
    ("upsample_convolve", lambda rng, n, t: (rng.standard_normal(n), rng.standard_normal(t))),
    ("periodic_analysis", lambda rng, n, t: (rng.standard_normal(n), rng.standard_normal(t))),
    ("periodic_synthesis", lambda rng, n, t: (rng.standard_normal(n // 2), rng.standard_normal(t), n)),
    ("zeropad_analysis", lambda rng, n, t: (rng.standard_normal(n), rng.standard_normal(t))),
]


def bench(repeat):
    rng = np.random.default_rng(0)
    print(f"{'kernel':<20}{'n':>8}{'taps':>6}{'numpy ms':>11}{'numba ms':>11}{'speedup':>9}")
    for name, make_args in CASES:
        ref = getattr(K, f"{name}_numpy")
        fast = getattr(K, f"{name}_numba")
        for n, taps in [(1024, 4), (16384, 8), (262144, 32)]:
            args = make_args(rng, n, taps)
            fast(*args)  # compile outside the timing loop
            t_ref = min(timeit.repeat(lambda: ref(*args), number=1, repeat=repeat)) * 1e3
            t_fast = min(timeit.repeat(lambda: fast(*args), number=1, repeat=repeat)) * 1e3
            print(f"{name:<20}{n:>8}{taps:>6}{t_ref:>11.3f}{t_fast:>11.3f}{t_ref / t_fast:>8.1f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args()
    if not K.NUMBA_AVAILABLE:
        raise SystemExit("numba is not installed; nothing to compare")
    bench(args.repeat)


if __name__ == "__main__":
    main()
