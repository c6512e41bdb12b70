"""Time the MeatAxe on S^(3,2,2,2,1,1) over GF(3) (dimension 693)."""

import argparse
import time

from signed_young.classify import rouquier_criterion
from signed_young.meataxe import meataxe
from signed_young.specht import specht_module


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--partition", default="3,2,2,2,1,1")
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    t0 = time.perf_counter()
    rep = specht_module(args.partition, args.p)
    t1 = time.perf_counter()
    print(f"{rep} built in {t1 - t0:.1f}s")
    try:
        print("quotient criterion:", rouquier_criterion(args.partition, args.p))
    except Exception as exc:  # not every shape sits in a Rouquier block
        print("quotient criterion not applicable:", exc)
    result = meataxe(rep, seed=args.seed)
    print(result, f"{time.perf_counter() - t1:.1f}s")


if __name__ == "__main__":
    main()
