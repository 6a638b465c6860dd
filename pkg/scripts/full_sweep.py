"""Run every identity over the acceptance grids and write one JSON report.

    python scripts/full_sweep.py --out sweep.json --jobs 4
"""

import argparse
import json
import time
from dataclasses import replace
from fractions import Fraction

from umbral.cli import SCHEMA_VERSION, report_to_dict
from umbral.identities import SweepConfig, run_sweep, summarize

GRIDS = {
    "lemma1": SweepConfig(identities=("Lemma1.B", "Lemma1.Bhat", "Lemma1.E", "Lemma1.H"), n_max=10, m_max=4),
    "thm3_thm4": SweepConfig(identities=("Thm3", "Thm4.printed", "Thm4.corrected"), n_max=8, m_max=5),
    "thm5": SweepConfig(identities=("Thm5",), n_max=8, m_max=5),
    "thm6": SweepConfig(identities=("Thm6",), n_max=6, m_max=4,
                        lambdas=(Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(-2, 3))),
    "transfer": SweepConfig(identities=("Eq16", "Eq17"), n_max=8, m_max=4),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="sweep.json")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    results = {}
    for name, config in GRIDS.items():
        start = time.perf_counter()
        reports = run_sweep(replace(config, jobs=args.jobs))
        counts = summarize(reports)
        print(f"{name:<10} {counts}  {time.perf_counter() - start:.2f}s")
        results[name] = [report_to_dict(r, "any" if r.instance.identity_id == "Thm4.printed" else "equal")
                         for r in reports]
    with open(args.out, "w") as fh:
        json.dump({"version": SCHEMA_VERSION, "grids": results}, fh, indent=2)
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
