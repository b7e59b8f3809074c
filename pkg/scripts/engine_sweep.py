"""Exhaustive agreement sweep between the exact engines and the numeric oracle.

    python scripts/engine_sweep.py --max-degree 4 --lo -3 --hi 3
"""
import argparse
import itertools
import time
from collections import Counter

from expansive import check_d_conditions, check_schur_cohn, numeric_expansive


def polys(max_degree, lo, hi, any_sign):
    for n in range(1, max_degree + 1):
        for cs in itertools.product(range(lo, hi + 1), repeat=n + 1):
            if cs[-1] != 0 and (any_sign or cs[0] > 0):
                yield cs


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--lo", type=int, default=-3)
    ap.add_argument("--hi", type=int, default=3)
    ap.add_argument("--any-sign", action="store_true", help="also allow a_0 <= 0")
    ap.add_argument("--margin", type=float, default=1e-9)
    args = ap.parse_args()

    t0 = time.perf_counter()
    tally = Counter()
    for cs in polys(args.max_degree, args.lo, args.hi, args.any_sign):
        verdicts = {s: check_d_conditions(cs, s).expansive for s in ("full", "reduced", "alternate")}
        verdicts["schur"] = check_schur_cohn(cs).expansive
        num = numeric_expansive(cs, args.margin)
        tally["total"] += 1
        tally["expansive"] += verdicts["full"]
        if len(set(verdicts.values())) > 1:
            tally["engine_disagree"] += 1
            print("engine disagreement:", cs, verdicts)
        if num == "inconclusive":
            tally["oracle_inconclusive"] += 1
        elif num != verdicts["full"]:
            tally["oracle_disagree"] += 1
            print("oracle disagreement:", cs, verdicts["full"], num)
    for key in ("total", "expansive", "engine_disagree", "oracle_disagree", "oracle_inconclusive"):
        print(f"{key:20s} {tally[key]}")
    print(f"{'seconds':20s} {time.perf_counter() - t0:.1f}")


if __name__ == "__main__":
    main()
