"""Compare the compiled and pure-Python integer kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--order 400]

Reports the best of ``--repeat`` runs per workload and backend, then the
speed-up. Both backends must produce identical results; the script checks.
"""

import argparse
import random
import timeit

from qrr import kernels
from qrr.catalog import verify_all


def workloads(order):
    rng = random.Random(7)
    a = [rng.randint(-50, 50) for _ in range(order)]
    b = [rng.randint(-50, 50) for _ in range(order)]
    unit = [1] + a[1:]
    return {
        f"conv n={order}": lambda: kernels.conv(a, b, order),
        f"inv n={order}": lambda: kernels.inv(unit, order),
        f"mul/div binomial x{order}": lambda: [kernels.div_binom(kernels.mul_binom(a, 3, e), 3, e)
                                              for e in range(1, order)],
        "theorem suite @120": lambda: [r.verdict for r in verify_all("theorem", 120)],
    }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--order", type=int, default=400)
    args = p.parse_args(argv)

    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled kernels not built; only the pure-Python backend is available")
    results = {}
    for name in backends:
        kernels.use_backend(name)
        for label, fn in workloads(args.order).items():
            value = fn()
            secs = min(timeit.repeat(fn, number=1, repeat=args.repeat))
            results.setdefault(label, {})[name] = (secs, value)

    print(f"{'workload':<28}" + "".join(f"{b:>12}" for b in backends) + "     speed-up")
    for label, per in results.items():
        values = [v for _, v in per.values()]
        assert all(v == values[0] for v in values), f"backends disagree on {label}"
        row = f"{label:<28}" + "".join(f"{per[b][0] * 1e3:>10.2f}ms" for b in backends)
        if len(per) == 2:
            row += f"  {per['python'][0] / per['compiled'][0]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
