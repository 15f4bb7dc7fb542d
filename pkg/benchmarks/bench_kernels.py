"""Time the exhaustive coherence kernels: numba against the numpy fallback.

Usage::

    python benchmarks/bench_kernels.py [--sizes 8 16 32] [--repeat 3]

Tables come from the cyclic lattices [[2n]] (group Z/2n).  Both backends
must return identical residue arrays; the script exits 1 otherwise.
"""

import argparse
import sys
import time

import numpy as np

from artifact import _kernels
from artifact.fusion import pointed_tables
from artifact.lattice import build_pointed_mtc


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 24, 32])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    backends = _kernels.available_backends()
    print(f"backends: {', '.join(backends)} (default {_kernels.BACKEND})")
    if "numba" in backends:
        t = build_pointed_mtc([[4]], check=False)
        tab = pointed_tables(t)
        _kernels.pentagon_residue(tab.m, tab.w, tab.N, "numba")  # compile
        _kernels.hexagon_residues(tab.m, tab.w, tab.r, tab.N, "numba")
        _kernels.ribbon_residue(tab.m, tab.r, tab.t, tab.N, "numba")
    header = f"{'|A|':>5} {'kernel':>9} " + " ".join(f"{b:>10}" for b in backends) + "  speedup"
    print(header)
    ok = True
    for n in args.sizes:
        if n % 2:
            raise SystemExit("sizes must be even (group Z/n from the lattice [[n]])")
        tab = pointed_tables(build_pointed_mtc([[n]], check=False))
        kernels = {
            "pentagon": lambda b: _kernels.pentagon_residue(tab.m, tab.w, tab.N, b),
            "hexagon": lambda b: _kernels.hexagon_residues(tab.m, tab.w, tab.r, tab.N, b),
            "ribbon": lambda b: _kernels.ribbon_residue(tab.m, tab.r, tab.t, tab.N, b),
        }
        for name, run in kernels.items():
            res = {b: best_of(lambda: run(b), args.repeat) for b in backends}
            outs = [np.asarray(o) for _, o in res.values()]
            same = all(np.array_equal(outs[0], o) for o in outs[1:])
            ok &= same
            cols = " ".join(f"{res[b][0] * 1e3:9.2f}ms" for b in backends)
            speed = ""
            if "numba" in res and "numpy" in res:
                speed = f"  x{res['numpy'][0] / max(res['numba'][0], 1e-9):.1f}"
            print(f"{n:>5} {name:>9} {cols}{speed}{'' if same else '  MISMATCH'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
