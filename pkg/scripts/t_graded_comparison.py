"""Compare the area-weighted V sums over sorted naive and sorted odd objects.

Prints, for each n, every (area, shape) cell where the two sides disagree.
Both sides agree at t = 1 and after pairing with h_n.
"""

import argparse
from collections import Counter

from shpf.parking import area, enumerate_sorted_naive, shape
from shpf.shifted import area_o, enumerate_sorted_odd, naive_to_odd
from shpf.symfunc import t_graded, t_graded_h_pairing

ap = argparse.ArgumentParser()
ap.add_argument("--max-n", type=int, default=6)
args = ap.parse_args()

for n in range(1, args.max_n + 1):
    naive, odd = t_graded(n)
    same = naive == odd
    print(f"n={n}: identical={same}  h-pairing equal={t_graded_h_pairing(naive) == t_graded_h_pairing(odd)}")
    if same:
        continue
    left = Counter((area(x.p), shape(x.p)) for x in enumerate_sorted_naive(n))
    right = Counter((area_o(y), shape(y.p)) for y in enumerate_sorted_odd(n))
    for a in sorted({k[0] for k in left | right}):
        l = {lam: c for (b, lam), c in left.items() if b == a}
        r = {lam: c for (b, lam), c in right.items() if b == a}
        if l != r:
            print(f"  t^{a}: naive {dict(sorted(l.items()))}  odd {dict(sorted(r.items()))}")
    x = next(x for x in enumerate_sorted_naive(n) if shape(x.p) != shape(naive_to_odd(x).p))
    y = naive_to_odd(x)
    print(f"  e.g. {x.p} {x.sbar} (area {area(x.p)}) -> {y.p} tau={y.tau} (area_o {area_o(y)})")
