"""Print the n = 3 table: parking functions grouped by z and by run, with tree legs."""

import argparse
from collections import defaultdict

from parkstat.maps import dfs_burn, phi
from parkstat.trees import leg
from parkstat.words import all_parking, run, z


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    args = ap.parse_args()

    by_z, by_run, by_leg = defaultdict(list), defaultdict(list), defaultdict(list)
    for w in all_parking(args.n):
        by_z[z(w)].append(w)
        by_run[run(phi(w))].append(phi(w))
        by_leg[leg(dfs_burn(w).tree)].append(dfs_burn(w).tree)

    def compact(w):
        return "".join(map(str, w)) if args.n < 10 else str(w)

    for k in range(1, args.n + 1):
        print(f"k={k}  leg:{len(by_leg[k]):>4}  z: {' '.join(compact(w) for w in by_z[k])}")
        print(f"{'':>15}run: {' '.join(compact(w) for w in by_run[k])}")


if __name__ == "__main__":
    main()
