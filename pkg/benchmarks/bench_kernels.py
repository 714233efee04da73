"""Times the compiled kernel against the pure-Python backend.

Both backends produce bit-identical results; this script reports wall times
for the two hot loops (the per-q multiplicity recurrence and the weighted
slice enumeration) and the resulting speedups.

    python benchmarks/bench_kernels.py [--qmax 1500]
"""

import argparse
import time

from symsig._kernel import load_backend
from symsig.groups import BinaryIcosahedral, BinaryOctahedral, make_group
from symsig.sympow import sl2_series_data


def time_call(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return time.perf_counter() - start, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--qmax", type=int, default=1500)
    args = parser.parse_args()

    backends = {name: load_backend(name) for name in ("compiled", "python")}
    rows = []

    for spec_name, spec in (("BO", BinaryOctahedral()), ("BI", BinaryIcosahedral())):
        group = make_group(spec)
        trace_mats, proj_mats = sl2_series_data(group)
        results = {}
        for name, impl in backends.items():
            elapsed, out = time_call(
                impl.sl2_multiplicity_series, trace_mats, proj_mats, group.order, args.qmax
            )
            results[name] = (elapsed, out)
        assert results["compiled"][1] == results["python"][1], "backends disagree"
        rows.append((f"series {spec_name} qmax={args.qmax}", results))

    for n, w1, w2 in ((7, 1, 3), (12, 1, 7)):
        results = {}
        for name, impl in backends.items():
            elapsed, out = time_call(impl.weight_slice_counts, n, w1, w2, args.qmax)
            results[name] = (elapsed, out)
        assert results["compiled"][1] == results["python"][1], "backends disagree"
        rows.append((f"histogram n={n} w=({w1},{w2}) qmax={args.qmax}", results))

    width = max(len(label) for label, _ in rows)
    print(f"{'kernel'.ljust(width)}  compiled     python      speedup")
    for label, results in rows:
        fast = results["compiled"][0]
        slow = results["python"][0]
        print(f"{label.ljust(width)}  {fast:9.4f}s  {slow:9.4f}s  {slow / fast:8.1f}x")


if __name__ == "__main__":
    main()
