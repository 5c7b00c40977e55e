"""Time the numba and numpy kernels on the heaviest workloads.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from sl2trunc import _kernels
from sl2trunc.rootsys import AlgebraSpec, build_root_system
from sl2trunc.sigma import sigma_box
from sl2trunc.sl2pair import principal_characteristic, solve_h


def orbit_case(text, weight):
    rs = build_root_system(AlgebraSpec.parse(text))
    dom = np.array(weight, dtype=np.int64)
    return f"orbit {text} {weight}", lambda b: _kernels.orbit_tree(rs.cartan_array, dom,
                                                                   10**8, backend=b)[1]


def box_case(text):
    rs = build_root_system(AlgebraSpec.parse(text))
    h = solve_h(rs, principal_characteristic(rs))
    lo, hi = sigma_box(rs, h)
    n = np.array([int(x) for x in h.n])
    target = 1 + 2 * sum(rs.marks)
    return f"sigma box {text}", lambda b: _kernels.box_scan(n, np.array(lo), np.array(hi),
                                                            target, backend=b).shape[0]


def best_of(fn, backend, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(backend)
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    cases = [orbit_case("E6", (1, 1, 1, 1, 1, 1)), orbit_case("E7", (1, 1, 1, 1, 1, 1, 1)),
             box_case("E7"), box_case("E8")]
    backends = [b for b in ("numba", "numpy") if b in _kernels.BACKENDS]
    print(f"{'case':<32}" + "".join(f"{b:>12}" for b in backends) + f"{'result':>12}")
    for name, fn in cases:
        if "numba" in backends:
            fn("numba")  # compile outside the timing
        row, results = [], set()
        for b in backends:
            t, out = best_of(fn, b, args.repeat)
            row.append(f"{t:>11.3f}s")
            results.add(out)
        assert len(results) == 1, f"backends disagree on {name}: {results}"
        print(f"{name:<32}" + "".join(row) + f"{results.pop():>12}")


if __name__ == "__main__":
    main()
