"""Schreier-Sims order of the genus-7 monodromy group (takes under a minute)."""
import argparse
import time

from trigmono.sympl import full_orthogonal_check

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--g", type=int, default=7)
args = ap.parse_args()

start = time.perf_counter()
r = full_orthogonal_check(args.g)
elapsed = time.perf_counter() - start
print(f"g={r.g} eps={r.eps:+d}")
print(f"BSGS order    {r.bsgs_order}")
print(f"formula order {r.formula_order}")
print(f"match={r.bsgs_order == r.formula_order} q_preserved={r.q_preserved} time={elapsed:.1f}s")
