#!/usr/bin/env python3
"""Compare the pure-Python kernels against the compiled extension.

Runs each kernel on the same inputs through both lanes and prints the
per-call time and speedup. Sizes are chosen inside the compiled lane's
dispatch envelope so both lanes do identical work.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import importlib
import time

from pernull._kernels import pure
from pernull.corpus import SplitMix64, random_gnp, random_tree_plus
from pernull.matching import gallai_edmonds

# import the extension directly so the comparison still runs when dispatch
# is forced to the pure lane via PERNULL_KERNELS
try:
    ext = importlib.import_module("pernull._kernels._core")
except ImportError:
    ext = None


def timed(fn, args_list, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in args_list:
            fn(*args)
        best = min(best, (time.perf_counter() - t0) / len(args_list))
    return best


def row(name, pure_fn, ext_fn, args_list, repeat):
    tp = timed(pure_fn, args_list, repeat)
    te = timed(ext_fn, args_list, repeat) if ext_fn else None
    if te:
        print(f"{name:<34} {tp*1e6:>10.1f} {te*1e6:>10.1f} {tp/te:>8.1f}x")
    else:
        print(f"{name:<34} {tp*1e6:>10.1f} {'-':>10} {'-':>9}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = SplitMix64(12345)
    dense12 = [random_gnp(12, 0.5, rng) for _ in range(20)]
    sparse16 = [random_tree_plus(16, 0.1, rng) for _ in range(20)]
    mats = []
    for _ in range(10):
        n = 10
        mats.append(
            ([[rng.randrange(7) - 3 for _ in range(n)] for _ in range(n)], n)
        )
    mstat_in = []
    for g in [random_tree_plus(13, 0.15, rng) for _ in range(10)]:
        dec = gallai_edmonds(g)
        singles = 0
        for vs in dec.singleton_components:
            singles |= vs.mask
        f_masks = [vs.mask for vs in dec.factor_components]
        mstat_in.append((g.masks, g.n, singles, f_masks))
    canon_in = [(g.masks, g.n) for g in [random_gnp(9, 0.5, rng) for _ in range(5)]]

    print(f"compiled lane available: {ext is not None}")
    print(f"{'kernel':<34} {'pure us':>10} {'ext us':>10} {'speedup':>9}")
    r = args.repeat
    row(
        "matching_size (n=16 sparse)",
        pure.matching_size,
        ext.matching_size if ext else None,
        [(g.masks, g.n) for g in sparse16],
        r,
    )
    row(
        "matching_size (n=12 dense)",
        pure.matching_size,
        ext.matching_size if ext else None,
        [(g.masks, g.n) for g in dense12],
        r,
    )
    row(
        "ryser_permanent (n=10)",
        pure.ryser_permanent,
        ext.ryser_permanent if ext else None,
        mats,
        r,
    )
    # pure-lane subgraph enumeration at dense n=12 runs ~0.7s per graph,
    # so this row uses a small sample
    row(
        "sachs_counts (n=12 dense)",
        pure.sachs_counts,
        ext.sachs_counts if ext else None,
        [(g.masks, g.n) for g in dense12[:4]],
        r,
    )
    row(
        "max_sachs_order (n=12 dense)",
        pure.max_sachs_order,
        ext.max_sachs_order if ext else None,
        [(g.masks, g.n) for g in dense12],
        r,
    )
    row(
        "mstat_scan (n=13 sparse)",
        pure.mstat_scan,
        ext.mstat_scan if ext else None,
        mstat_in,
        r,
    )
    row(
        "canon_form (n=9)",
        pure.canon_form,
        ext.canon_form if ext else None,
        canon_in,
        r,
    )


if __name__ == "__main__":
    main()
