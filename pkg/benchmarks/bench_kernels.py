"""Time the compiled kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import importlib
import timeit

import numpy as np

from nxinfo import _pykernels
from nxinfo.genfun import COEFFICIENTS


def _cases(n):
    rng = np.random.default_rng(0)
    x = rng.uniform(1e-6, 1.0, n)
    p = rng.dirichlet(np.ones(n))
    y = rng.uniform(0.0, 10.0, n // 10)
    lengths = rng.uniform(0.5, 20.0, n)
    coeffs = np.ascontiguousarray(COEFFICIENTS.for_sign("plus"))
    return {
        "gen_log": lambda k: k.gen_log(1, x, 1.0),
        "entropy_sum": lambda k: k.entropy_sum(-1, p, 1.0),
        "invert": lambda k: k.invert(1, y),
        "kraft_generalized": lambda k: k.kraft_generalized(coeffs, lengths, np.log(2.0)),
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=10_000)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    try:
        ck = importlib.import_module("nxinfo._ckernels")
    except ImportError:
        print("compiled kernels not built; only the fallback is timed")
        ck = None
    print(f"{'kernel':<20}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for name, fn in _cases(args.size).items():
        t_py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat)) * 1e3
        if ck is None:
            print(f"{name:<20}{t_py:>14.3f}{'-':>14}{'-':>10}")
            continue
        t_c = min(timeit.repeat(lambda: fn(ck), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<20}{t_py:>14.3f}{t_c:>14.3f}{t_py / t_c:>9.1f}x")


if __name__ == "__main__":
    main()
