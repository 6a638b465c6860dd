"""Tabulate the printed and corrected right-hand sides of Theorem 4 against
B_{n-1}^(n)(x) over a grid, showing where the printed form breaks.

    python scripts/theorem4_variants.py --n-max 5 --m-max 3
"""

import argparse

from umbral.identities import verify_theorem4
from umbral.series import Polynomial


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--m-max", type=int, default=3)
    args = ap.parse_args()

    for n in range(1, args.n_max + 1):
        for m in range(1, args.m_max + 1):
            printed = verify_theorem4(n, m, "printed")
            corrected = verify_theorem4(n, m, "corrected")
            lhs = Polynomial(printed.lhs).pretty()
            print(f"n={n} m={m}  B_{n - 1}^({n})(x) = {lhs}")
            print(f"    corrected: {corrected.verdict}")
            print(f"    printed:   {printed.verdict}  rhs = {Polynomial(printed.rhs).pretty()}")


if __name__ == "__main__":
    main()
