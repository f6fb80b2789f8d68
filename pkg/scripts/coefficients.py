"""Emit closed-form enumerator coefficients as CSV or JSON lines."""

import argparse
import csv
import sys

from parkstat.counting import closed_form


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--method", choices=["inclusion_exclusion", "composition_sum"], default="inclusion_exclusion")
    ap.add_argument("--format", choices=["csv", "json"], default="csv")
    args = ap.parse_args()

    if args.format == "csv":
        out = csv.writer(sys.stdout)
        out.writerow(["n", "r", "coeff"])
        for n in range(1, args.max_n + 1):
            out.writerows(row for row in closed_form(n, args.method).csv_rows() if row[1] > 0)
    else:
        for n in range(1, args.max_n + 1):
            print(closed_form(n, args.method).to_json())


if __name__ == "__main__":
    main()
