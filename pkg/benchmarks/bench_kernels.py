"""Compare the pure-Python and compiled kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints per-kernel timings and the end-to-end time of the cubic finder on a
250-point set under each backend (the latter in a subprocess, since the
backend is fixed at import).
"""

import argparse
import os
import subprocess
import sys
import timeit

from ordcurves import kernels
from ordcurves.curves import monomial_basis
from ordcurves.generators import GeneratorSpec, generate

END_TO_END = (
    "import time;from ordcurves import kernels;from ordcurves.generators import GeneratorSpec, generate;"
    "from ordcurves.finder import find_ordinary_cubic;"
    "A=generate(GeneratorSpec('{kind}',250,seed=1));t=time.perf_counter();"
    "find_ordinary_cubic(A,allow_oracle_fallback=False);print(kernels.BACKEND,time.perf_counter()-t)"
)


def kernel_cases():
    A = generate(GeneratorSpec("random", 250, seed=1))
    pts = [tuple(p) for p in A]
    small = [tuple(p) for p in generate(GeneratorSpec("random", 20, seed=2, bound=1000))]
    exps = monomial_basis(3)
    return {
        "pair_groups(250 points)": lambda be: be.pair_groups(pts),
        "echelon(9x10 cubic rows)": lambda be: be.echelon(be.monomial_rows(exps, small[:9]), 10),
        "nullspace(9x10 cubic rows)": lambda be: be.nullspace(be.monomial_rows(exps, small[:9]), 10),
        "monomial_rows(250 points, d=3)": lambda be: be.monomial_rows(exps, pts),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = kernels.available_backends()
    print(f"backends: {', '.join(sorted(backends))}")
    for name, fn in kernel_cases().items():
        row = []
        for bname in sorted(backends):
            be = backends[bname]
            number = 1 if "pair_groups" in name or "250" in name else 200
            t = min(timeit.repeat(lambda: fn(be), number=number, repeat=args.repeat)) / number
            row.append((bname, t))
        cells = "  ".join(f"{b}={t * 1e3:9.3f} ms" for b, t in row)
        speedup = row[-1][1] / row[0][1] if len(row) == 2 else 1.0
        print(f"{name:32s} {cells}  speedup x{speedup:.1f}")
    for kind in ("random", "heavy-line"):
        for pure in ("", "1"):
            env = dict(os.environ, ORDCURVES_PURE=pure) if pure else {k: v for k, v in os.environ.items() if k != "ORDCURVES_PURE"}
            out = subprocess.run(
                [sys.executable, "-c", END_TO_END.format(kind=kind)], env=env, capture_output=True, text=True, check=True
            ).stdout.split()
            print(f"find_ordinary_cubic({kind}, n=250) backend={out[0]:7s} {float(out[1]):.3f} s")


if __name__ == "__main__":
    main()
