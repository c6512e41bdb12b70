"""Sweep every irreducible Specht module up to a given degree and look for signed Young certificates.

    python scripts/sweep_main_theorem.py --max-degree 8 --p 3 --out sweep.json
"""

import argparse
import json
import time

from signed_young.classify import irreducible_specht, verify_main_theorem
from signed_young.errors import InconclusiveError
from signed_young.partitions import all_partitions


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=8)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--max-dim", type=int, default=1500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    rows, tally = [], {"verified": 0, "inconclusive": 0, "refuted": 0, "reducible": 0, "undecided": 0}
    start = time.perf_counter()
    for d in range(1, args.max_degree + 1):
        for lam in all_partitions(d):
            try:
                verdict = irreducible_specht(lam, args.p, args.max_dim, args.seed)
            except InconclusiveError:
                tally["undecided"] += 1
                continue
            if not verdict.irreducible:
                tally["reducible"] += 1
                continue
            report = verify_main_theorem(lam, args.p, args.max_dim, args.seed)
            tally[report.status] += 1
            data = report.to_json()
            rows.append(data)
            cert = data["certificate"]
            shape = f"M({cert['alpha']} | {cert['p_beta']})" if cert else "-"
            known = "known" if data["label_known"] else "mixed"
            print(f"{str(lam):<18} {data['method']:<26} {data['status']:<12} {shape:<22} {known}")
    elapsed = time.perf_counter() - start
    print(json.dumps(tally), f"{elapsed:.1f}s")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump({"p": args.p, "max_degree": args.max_degree, "tally": tally, "reports": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
