"""Random integer vectors on B mu_n: Euler pairing, Mukai pairing and Parseval agree."""

import argparse
import random

from orbihrr.mukai import verify_isometry
from orbihrr.stack_bg import CyclicBGModel, idft, parseval_check


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    model = CyclicBGModel(args.n)
    for _ in range(args.trials):
        f = [rng.randint(-3, 3) for _ in range(args.n)]
        g = [rng.randint(-3, 3) for _ in range(args.n)]
        pv = parseval_check(args.n, f, g)
        iso = verify_isometry(model, model.element(f), model.element(g))
        print(f"f={f} g={g}")
        print(f"  idft(f) = [{', '.join(map(str, idft(args.n, f)))}]")
        print(f"  sum f*g = {pv.lhs}   weighted <F,G> = {pv.rhs}   Mukai = {iso.rhs}   "
              f"{'ok' if pv.ok and iso.ok and iso.lhs == pv.lhs else 'MISMATCH'}")


if __name__ == "__main__":
    main()
