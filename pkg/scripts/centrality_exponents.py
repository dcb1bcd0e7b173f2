"""Which powers of delta0, delta1 are central in the mod-2 monodromy image."""
import argparse

from trigmono.sympl import centrality_checks, monodromy_rep

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--genera", type=int, nargs="*", default=[1, 4, 7])
args = ap.parse_args()

for g in args.genera:
    rep = monodromy_rep(g, "t")
    central = []
    for k in range(1, 2 * g + 3):
        c = centrality_checks(g, rep, exponent=k)
        if c[f"d0^{k} central"] and c[f"d1^{k} central"]:
            central.append(k)
    print(f"g={g}: d0^k, d1^k central for k in {central}; "
          f"2g+2={2 * g + 2} {'is' if 2 * g + 2 in central else 'is not'} among them")
