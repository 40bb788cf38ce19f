"""Tabulate odd Kreweras numbers next to Kreweras numbers, and the V-expansion
coefficients of SH_n read off by exact linear algebra."""

import argparse

from shpf.core import krew, okrew, partitions_of, schroeder
from shpf.symfunc import expand_odd_v, sh_symfunc

ap = argparse.ArgumentParser()
ap.add_argument("--max-n", type=int, default=8)
args = ap.parse_args()

print(f"{'n':>2}  {'lambda':<18} {'Krew':>8} {'OKrew':>10} {'solved':>10}")
for n in range(1, args.max_n + 1):
    solved = expand_odd_v(sh_symfunc(n))
    for lam in partitions_of(n, "odd"):
        print(f"{n:>2}  {str(lam):<18} {krew(lam):>8} {okrew(lam):>10} {str(solved.get(lam, 0)):>10}")
    print(f"    sum OKrew = {sum(okrew(l) for l in partitions_of(n, 'odd'))}, s_n = {schroeder(n)}")
