"""Maroni strata and Smith-form cokernels for each genus."""
import argparse

from trigmono.geom import strata_cokernels

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--gmax", type=int, default=16)
args = ap.parse_args()

for g in range(1, args.gmax + 1):
    cells = []
    for td, factors in strata_cokernels(g):
        tors = [d for d in factors if d > 1]
        free = factors.count(0)
        txt = "+".join([f"Z/{d}" for d in tors] + ["Z"] * free) or "0"
        cells.append(f"M={td.M}:(m={td.m},n={td.n},c={td.c}) {txt}")
    print(f"g={g:>2}  " + "  ".join(cells))
