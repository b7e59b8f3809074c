"""Compare the four gap bounds with the true gap on expansive polynomials.

Prints, per family, how often it is the best real bound and the median
ratio ``bound * true_gap`` (1.0 would be exact).

    python scripts/gap_table.py --degree 3 --a0 4
"""
import argparse
import statistics
from collections import Counter, defaultdict

from expansive import EnumerationSpec, best_bound_report, enumerate_expansive, find_roots_numeric


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=3)
    ap.add_argument("--a0", type=int, default=4)
    args = ap.parse_args()

    census = enumerate_expansive(EnumerationSpec(args.degree, args.a0))
    wins = Counter()
    ratios = defaultdict(list)
    for f in census.polynomials:
        rep = best_bound_report(f)
        wins[rep.best_real] += 1
        real_roots = [z for z in find_roots_numeric(f).roots if z.imag == 0]
        if not real_roots:
            continue
        gap = min(abs(z) for z in real_roots) - 1
        for fam, pair in rep.bounds.items():
            ratios[fam].append(float(pair.real) * gap)
    print(f"{census.expansive} expansive polynomials of degree {args.degree} with a_0 = {args.a0}")
    print("family  best  median bound*gap (real roots)")
    for fam in ("A", "AZ", "H", "L"):
        med = statistics.median(ratios[fam]) if ratios[fam] else float("nan")
        print(f"{fam:6s}  {wins[fam]:4d}  {med:.3f}")


if __name__ == "__main__":
    main()
