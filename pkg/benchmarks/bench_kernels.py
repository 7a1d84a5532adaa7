"""Compare the compiled and pure-Python counting kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Both backends must return identical counts; the script exits nonzero if
they disagree.
"""

import argparse
import sys
import time

from mecard import groups
from mecard.kernels import BACKENDS

BUDGET = 10**8


def cases():
    D4 = groups.dihedral(4)
    He3 = groups.heisenberg(3)
    for name, G, p, n in (("D4 n=5", D4, 2, 5), ("He3 n=3", He3, 3, 3)):
        elems = groups.p_power_order_elements(G, p)
        yield f"commuting_orbits {name}", "commuting_orbits", (G.conj_table, G.commute_matrix, elems, n, BUDGET)
    yield "skew_rank_histogram n=5 p=3", "skew_rank_histogram", (5, 3, BUDGET)
    yield "wedge_zero_count d=2 m=2 n=4 p=3", "wedge_zero_count", (2, 2, 4, 3, BUDGET)
    yield "wedge_zero_count d=2 m=2 n=5 p=3", "wedge_zero_count", (2, 2, 5, 3, BUDGET)


def best_of(fn, args, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if "cython" not in BACKENDS:
        print("compiled extension not built; only the python backend is available")
    names = sorted(BACKENDS)
    print(f"{'case':40s}" + "".join(f"{n:>12s}" for n in names) + "   speedup")
    ok = True
    for label, fname, fargs in cases():
        times, outs = {}, {}
        for b in names:
            times[b], outs[b] = best_of(getattr(BACKENDS[b], fname), fargs, args.repeat)
        res = [list(o) if not isinstance(o, int) else o for o in outs.values()]
        same = all(r == res[0] for r in res)
        ok &= same
        speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else "       -"
        print(f"{label:40s}" + "".join(f"{times[b]:11.4f}s" for b in names) + f"  {speed}" + ("" if same else "  MISMATCH"))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
