"""Time the compiled and pure-Python kernels side by side.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Kernel-level numbers import both modules directly. The end-to-end
``check_axioms`` run spawns a subprocess per backend so that
``QARYGRAPH_PURE`` decides which one the library picks up.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from qarygraph import _kernels_py
from qarygraph.fields import ExtField, FieldSpec

try:
    from qarygraph import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

AXIOMS = (
    "import time; from qarygraph import fixtures; "
    "from qarygraph.qmatroid import QMatroid, check_axioms; "
    "m = QMatroid.from_incidence(fixtures.printed_matrix('3x3')); "
    "t = time.perf_counter(); check_axioms(m); print(time.perf_counter() - t)"
)


def workloads(seed=0):
    rng = random.Random(seed)
    f = ExtField(FieldSpec(2, 3, (1, 1, 0, 1)))
    rows = [[[rng.randrange(2) for _ in range(7)] for _ in range(4)] for _ in range(200)]
    mats = [[[rng.randrange(8) for _ in range(7)] for _ in range(3)] for _ in range(200)]
    cols = [tuple(rng.randrange(8) for _ in range(3)) for _ in range(7)]
    return f, rows, mats, cols


def bench(mod, repeat):
    f, rows, mats, cols = workloads()
    k = mod.ExtKernel(f.q, f.m, f._exp, f._log)
    cases = {
        "rref_mod": lambda: [mod.rref_mod(r, 7, 2) for r in rows],
        "rank": lambda: [k.rank(m) for m in mats],
        "image_rank": lambda: [k.image_rank(cols, y) for y in rows],
    }
    return {name: min(timeit.repeat(fn, number=5, repeat=repeat)) for name, fn in cases.items()}


def axioms_time(pure):
    env = dict(os.environ, QARYGRAPH_PURE="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", AXIOMS], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    py = bench(_kernels_py, args.repeat)
    cy = bench(_kernels_c, args.repeat) if _kernels_c else None
    if cy is None:
        print("compiled extension not built; pure-Python timings only")
    print(f"{'kernel':<14}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, t in py.items():
        if cy:
            print(f"{name:<14}{t:>12.4f}{cy[name]:>12.4f}{t / cy[name]:>9.1f}x")
        else:
            print(f"{name:<14}{t:>12.4f}")
    tp = axioms_time(True)
    if cy:
        tc = axioms_time(False)
        print(f"{'check_axioms':<14}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")
    else:
        print(f"{'check_axioms':<14}{tp:>12.4f}")


if __name__ == "__main__":
    main()
