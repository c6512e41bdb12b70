"""List Rouquier blocks of small degree and their irreducible Specht modules.

Cross-checks the quotient criterion against the MeatAxe for members below a
dimension cap.

    python scripts/scan_rouquier_blocks.py --p 3 --max-degree 11 --check-dim 200
"""

import argparse

from signed_young.abacus import BlockId, block_members, is_rouquier, p_core
from signed_young.classify import classify_rouquier_block
from signed_young.meataxe import meataxe_irreducible
from signed_young.partitions import all_partitions, count_standard_tableaux
from signed_young.specht import specht_module


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--max-degree", type=int, default=11)
    ap.add_argument("--check-dim", type=int, default=200)
    args = ap.parse_args()
    p = args.p

    cores = [k for n in range(args.max_degree + 1) for k in all_partitions(n) if p_core(k, p) == k]
    mismatches = 0
    for core in cores:
        for w in range(1, (args.max_degree - core.size) // p + 1):
            block = BlockId(p, core, w)
            if not is_rouquier(block):
                continue
            irreducible = set(classify_rouquier_block(block))
            members = block_members(block)
            print(f"core {core}  weight {w}  members {len(members)}  irreducible {len(irreducible)}")
            for lam in members:
                dim = count_standard_tableaux(lam)
                mark = "irr" if lam in irreducible else "red"
                check = ""
                if dim <= args.check_dim:
                    ok = meataxe_irreducible(specht_module(lam, p)) == (lam in irreducible)
                    mismatches += not ok
                    check = "meataxe agrees" if ok else "MEATAXE DISAGREES"
                print(f"    {str(lam):<22} dim {dim:<6} {mark}  {check}")
    print(f"mismatches: {mismatches}")


if __name__ == "__main__":
    main()
