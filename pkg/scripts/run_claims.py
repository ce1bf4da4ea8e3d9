"""Run every named verification claim and write one JSON report per claim.

usage: python3 scripts/run_claims.py [OUT_DIR] [--jobs N]
"""

import argparse
import json
import sys
import time
from pathlib import Path

from rgcages.verify import CLAIMS, run_claim


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out", nargs="?", default="reports")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    ok = True
    for name in CLAIMS:
        t0 = time.perf_counter()
        kwargs = {"r_max": 12, "jobs": args.jobs} if name == "r33" else {}
        reports = run_claim(name, **kwargs)
        passed = all(r.passed for r in reports)
        ok &= passed
        (out / f"{name}.json").write_text(json.dumps([r.as_dict() for r in reports], sort_keys=True, indent=1) + "\n")
        print(f"{name:16s} {'PASS' if passed else 'FAIL'}  {len(reports):3d} reports  {time.perf_counter() - t0:6.2f}s")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
