"""Branch-curve characteristics for a range of genera, with both node counts."""
import argparse

from trigmono.geom import branch_characteristics, plucker_dual

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--gmax", type=int, default=13)
args = ap.parse_args()

print(f"{'g':>3} {'b':>5} {'cusps':>6} {'nodes*':>7} {'nodes':>7} {'genus':>6} {'dual':>18}")
for g in range(1, args.gmax + 1):
    bc = branch_characteristics(g)
    d = plucker_dual(bc.curve())
    dual = f"({d.degree},{d.nodes},{d.cusps})"
    print(f"{g:>3} {bc.b:>5} {bc.cusps:>6} {bc.nodes_formula:>7} {bc.nodes_oracle:>7} "
          f"{bc.genus_ramification:>6} {dual:>18}")
print("nodes* = stated node formula, nodes = from the genus of the ramification curve")
