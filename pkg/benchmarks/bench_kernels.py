"""Compare the compiled permutation kernels against the pure-Python twins.

Workloads mirror the hot paths: the commutant union-find over all
rank-2 permutations, the order recursion, and a slice of the rank-3
sweep.  Run from the repository root:

    python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import time
from itertools import islice, permutations

from o2endo import _kernels_py

try:
    from o2endo import _kernels
except ImportError:
    _kernels = None


def _bench(label: str, fn, repeats: int = 3) -> float:
    best = min(_timed(fn) for _ in range(repeats))
    print(f"  {label:18s} {best * 1000:9.2f} ms")
    return best


def _timed(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def commutant_workload(mod):
    def run():
        for images in permutations(range(4)):
            for k in (1, 2, 3):
                mod.commutant_labels(list(images), 2, k)

    return run


def order_workload(mod, limit: int = 2000):
    def run():
        for images in islice(permutations(range(8)), limit):
            p = list(images)
            v, lv = p, 3
            for _ in range(3):
                total = lv + 2
                coc = mod.cocycle_perm(p, 3, lv)
                lam = mod.compose_perm(
                    mod.compose_perm(coc, mod.pad_suffix_perm(v, total - lv)),
                    mod.invert_perm(coc),
                )
                v = mod.compose_perm(lam, mod.pad_suffix_perm(p, total - 3))
                lv = total

    return run


def sweep_workload(mod, limit: int = 3000):
    def run():
        for images in islice(permutations(range(8)), limit):
            for k in (1, 2):
                mod.commutant_labels(list(images), 3, k)

    return run


def main() -> None:
    sections = [
        ("rank-2 commutant x24", commutant_workload),
        ("rank-3 order chains", lambda m: order_workload(m)),
        ("rank-3 sweep slice", lambda m: sweep_workload(m)),
    ]
    for name, make in sections:
        print(name)
        t_py = _bench("pure python", make(_kernels_py))
        if _kernels is None:
            print("  compiled extension not built; skipping")
            continue
        t_c = _bench("compiled", make(_kernels))
        print(f"  {'speedup':18s} {t_py / t_c:9.1f}x")


if __name__ == "__main__":
    main()
