"""Run the brute-force verification suite over a range of n and report timings."""

import argparse
import json
import time

from parkstat.verify import run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    start = time.perf_counter()
    result = run_suite(range(1, args.max_n + 1), seed=args.seed, workers=args.workers, cap=False)
    elapsed = time.perf_counter() - start
    if args.json:
        print(json.dumps(result.to_dict(), indent=2))
    else:
        for rep in result.reports:
            bad = [c.name for c in rep.checks if not c.passed]
            print(f"n={rep.n}  lt={rep.enumerators['lt']}  {'ok' if not bad else 'FAIL ' + ','.join(bad)}")
        for c in result.extra:
            print(f"{'ok  ' if c.passed else 'FAIL'} {c.name}")
    print(f"{'ALL PASS' if result.passed else 'FAILURES'} in {elapsed:.1f}s")
    return 0 if result.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
