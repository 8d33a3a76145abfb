#!/usr/bin/env python3
"""Compiled vs numpy kernels, plus the fast-path/oracle latency ratio.

    python benchmarks/bench_kernels.py [--repeat 5]

Set ELLINT2_PURE_PYTHON=1 to time the fallback end to end.
"""

from __future__ import annotations

import argparse
import math
import statistics
import timeit

import numpy as np

from ellint2 import _pykernels, eval_eq7, quad2d
from ellint2.quadrature import rule_on

try:
    from ellint2 import _kernels
except ImportError:
    _kernels = None


def best(fn, repeat: int, number: int | None = None) -> float:
    if number is None:
        number, _ = timeit.Timer(fn).autorange()
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def kernel_cases():
    x, wx = rule_on(256, 0.0, math.pi)
    cx = np.cos(x)
    yield "tensor_sum 256x256", lambda k: k.tensor_sum(wx, cx, wx, cx, 0.3, 0.4)
    x, wx = rule_on(1024, 0.0, math.pi)
    cx = np.cos(x)
    yield "tensor_sum 1024x1024", lambda k: k.tensor_sum(wx, cx, wx, cx, 0.5, 0.5)
    yield "f4_sum a=0.3 b=0.4", lambda k: k.f4_sum(-0.25, 0.25, 0.09, 0.16, 1e-15, 0.0, 20000)
    yield "f4_sum a=b=0.49", lambda k: k.f4_sum(-0.25, 0.25, 0.2401, 0.2401, 1e-15, 0.0, 20000)
    yield "eq7_core (0.3, 0.4)", lambda k: k.eq7_core(0.3, 0.4, 1e-15, 64)


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)

    print(f"{'kernel':<24}{'numpy (s)':>14}{'cython (s)':>14}{'speedup':>10}")
    for name, call in kernel_cases():
        t_py = best(lambda: call(_pykernels), args.repeat)
        if _kernels is None:
            print(f"{name:<24}{t_py:>14.3e}{'n/a':>14}{'':>10}")
            continue
        t_cy = best(lambda: call(_kernels), args.repeat)
        print(f"{name:<24}{t_py:>14.3e}{t_cy:>14.3e}{t_py / t_cy:>9.1f}x")

    grid = [(a, b) for a in (0, .05, .1, .2, .3, .4) for b in (0, .05, .1, .2, .3, .4) if a + b <= .8]
    t7 = statistics.median(best(lambda p=p: eval_eq7(p), args.repeat, 200) for p in grid)
    tq = statistics.median(best(lambda p=p: quad2d(p), args.repeat, 20) for p in grid)
    print(f"\ninterior grid ({len(grid)} points), active backend:")
    print(f"  median eval_eq7 {t7:.3e} s   median quad2d {tq:.3e} s   ratio {tq / t7:.1f}x")
    tb = best(lambda: quad2d((0.5, 0.5)), args.repeat, 5)
    print(f"  quad2d on the boundary (0.5, 0.5): {tb:.3e} s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
