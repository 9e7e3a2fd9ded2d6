"""Time the compiled and pure-Python coset kernels on the same inputs.

    python3 benchmarks/bench_cosets.py [--repeat N] [--quick]
"""

import argparse
import statistics
import time

from quatlattice.cosets import KERNELS, todd_coxeter
from quatlattice.square_complex import build_squares

CASES = [
    ("G(5,17) <1+2i, 1+4k>", (5, 17), [(1, 2, 0, 0), (1, 0, 0, 4)], "felsch", 10 ** 6),
    ("G(5,17) <1+2i, 1+4k> hlt", (5, 17), [(1, 2, 0, 0), (1, 0, 0, 4)], "hlt", 10 ** 6),
    ("G(3,5) <a1^2, b1^2>", (3, 5), ["a1^2", "b1^2"], "felsch", 10 ** 6),
    ("G(3,5) <a1^3, b1^3> overflow", (3, 5), ["a1^3", "b1^3"], "felsch", 2 * 10 ** 5),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true", help="skip the slow cases")
    args = parser.parse_args()

    backends = sorted(KERNELS)
    if "compiled" not in backends:
        print("compiled kernel not built; timing the Python kernel only")
    cases = CASES[:2] if args.quick else CASES
    print(f"{'case':34} {'backend':9} {'result':>10} {'defined':>9} {'median s':>9}")
    for name, (p, l), subgens, strategy, budget in cases:
        pres = build_squares(p, l)
        medians = {}
        for backend in backends:
            times = []
            for _ in range(args.repeat):
                start = time.perf_counter()
                t = todd_coxeter(pres, subgens, max_cosets=budget, strategy=strategy, backend=backend)
                times.append(time.perf_counter() - start)
            medians[backend] = statistics.median(times)
            result = t.index if t.is_closed else "overflow"
            print(f"{name:34} {backend:9} {result!s:>10} {t.stats['defined']:>9} "
                  f"{medians[backend]:>9.3f}")
        if len(medians) == 2:
            print(f"{'':34} speedup {medians['python'] / medians['compiled']:.1f}x")


if __name__ == "__main__":
    main()
