"""Permutation and involution counts per index, with timings.

Counts come from the closed-form count; pass --enumerate to cross-check
against the explicit enumeration where it is small enough.
"""

import argparse
import time

from cyclomap.cyclo import divisors
from cyclomap.gf_core import resolve_field
from cyclomap.search import SearchQuery, count_for_index, enumerate_pps


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("fields", nargs="*", default=["F9", "F25", "F64"])
    ap.add_argument("--fix-r", type=lambda t: tuple(int(x) for x in t.split(",")))
    ap.add_argument("--enumerate", type=int, default=0, metavar="N", help="also enumerate when pps <= N")
    args = ap.parse_args()
    print("field\tell\ts\tpps\tinvolutions\tseconds\tenumerated")
    for desc in args.fields:
        F = resolve_field(desc)
        for ell in divisors(F.q - 1):
            fix = args.fix_r
            if fix is not None and len(fix) not in (1, ell):
                continue
            t0 = time.perf_counter()
            pps, invs = count_for_index(F.q, ell, fix)
            dt = time.perf_counter() - t0
            check = "-"
            if 0 < pps <= args.enumerate:
                recs = list(enumerate_pps(F, SearchQuery(ell_list=(ell,), fix_r=fix)))
                same = (len(recs), sum(r.involution for r in recs)) == (pps, invs)
                check = "ok" if same else "MISMATCH"
            print(f"{desc}\t{ell}\t{(F.q - 1) // ell}\t{pps}\t{invs}\t{dt:.3f}\t{check}")


if __name__ == "__main__":
    main()
