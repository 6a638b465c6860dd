"""Time the two power-sum algorithms against each other.

    python scripts/power_sum_timing.py --n 6 --m-max 6 --kmax 12
"""

import argparse
import time

from umbral.power_sums import power_sum_row


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--m-max", type=int, default=6)
    ap.add_argument("--kmax", type=int, default=12)
    ap.add_argument("--family", default="plain", choices=("plain", "alt", "lambda"))
    ap.add_argument("--lam", default="2")
    args = ap.parse_args()

    lam = args.lam if args.family == "lambda" else None
    print(f"{'m':>3} {'enum [ms]':>10} {'series [ms]':>12}  agree")
    for m in range(1, args.m_max + 1):
        timings = {}
        rows = {}
        for alg in ("enum", "series"):
            start = time.perf_counter()
            rows[alg] = power_sum_row(args.family, args.kmax, args.n, m, lam, alg)
            timings[alg] = 1000 * (time.perf_counter() - start)
        print(f"{m:>3} {timings['enum']:>10.2f} {timings['series']:>12.2f}  {rows['enum'] == rows['series']}")


if __name__ == "__main__":
    main()
