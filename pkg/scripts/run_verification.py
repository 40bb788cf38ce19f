"""Run every verification suite and write a JSON report.

    python scripts/run_verification.py --max-n 6 --jobs 4 --out report.json
"""

import argparse
import json
import sys
import time

from shpf import verify


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--brute-bound", type=int, default=5)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--suite", default="all", choices=verify.SUITES + ("all",))
    ap.add_argument("--out")
    args = ap.parse_args()

    bounds = verify.Bounds(max_n=args.max_n, brute_bound=args.brute_bound)
    t0 = time.perf_counter()
    results = verify.run_suite(args.suite, bounds, jobs=args.jobs)
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} passed in {time.perf_counter() - t0:.1f}s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(verify.results_to_json(results), fh, indent=2)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
