"""Print chi(P(a), O(d)) by orbifold HRR next to the monomial count, as CSV."""

import argparse
import csv
import sys

from orbihrr.stack_wps import WPSModel, monomial_count_oracle


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("weights", help="comma-separated weights, e.g. 2,3,5")
    ap.add_argument("--dmin", type=int, default=0)
    ap.add_argument("--dmax", type=int, default=30)
    args = ap.parse_args()
    weights = [int(a) for a in args.weights.split(",")]
    model = WPSModel(weights)

    out = csv.writer(sys.stdout)
    out.writerow(["d", "chi_hrr", "monomials", *(s.label for s in model.sectors)])
    for d in range(args.dmin, args.dmax + 1):
        pieces = model.hrr_contributions(model.ring.monomial(d))
        out.writerow([d, model.euler_char(model.ring.monomial(d)), monomial_count_oracle(weights, d), *map(str, pieces)])


if __name__ == "__main__":
    main()
