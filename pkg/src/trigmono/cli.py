"""Command-line front end.

Exit codes: 0 all checks pass, 1 some check failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence

from . import diagrams, geom, intlattice, sympl, words
from .f2core import F2Vec, arf_type, q_eval, radical, rank, rank_kernel
from .report import Report, presentation_to_gap, presentation_to_json, presentation_to_text

VERIFY_CHECKS = ("diagram", "global", "quotient", "weierstrass", "bridge", "centrality")
ORDER_SAFE_GENERA = (1, 4, 7)


class UsageError(Exception):
    pass


def _support(v: F2Vec) -> str:
    return "{" + ",".join(str(i + 1) for i in v.support()) + "}"


def _torsion_text(factors: Sequence[int]) -> str:
    tors = [d for d in factors if d > 1]
    free = sum(1 for d in factors if d == 0)
    parts = [f"Z/{d}" for d in tors] or ["trivial"]
    if free:
        parts.append(f"free rank {free}")
    return ", ".join(parts)


def _require_trigonal(g: int):
    try:
        diagrams.check_trigonal_genus(g)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _require_genus(g: int):
    if g < 1:
        raise UsageError(f"genus must be positive, got {g}")


# ---------------------------------------------------------------- present


def cmd_present(g: int, style: str, fmt: str) -> str:
    if style == "trigonal":
        _require_trigonal(g)
        p = words.trigonal_presentation(g)
    else:
        _require_genus(g)
        p = words.weierstrass_presentation(g)
    if fmt == "gap":
        return presentation_to_gap(p)
    if fmt == "json":
        return presentation_to_json(p) + "\n"
    return presentation_to_text(p)


# ---------------------------------------------------------------- verify


def _relator_checks(report: Report, label: str, rels, rep) -> None:
    res = sympl.verify_relators(rels, rep)
    bad = [r.name for r in res.failures()]
    report.add(label, not bad,
               f"{len(res.results)} relators" + (f"; failing: {', '.join(bad)}" if bad else ""))


def _check_diagram(report: Report, g: int, seed: int) -> None:
    rep = sympl.monodromy_rep(g, "t")
    p = words.trigonal_presentation(g)
    for fam in ("braid", "commute", "chain"):
        _relator_checks(report, f"trigonal {fam}", p.by_family(fam), rep)
    ok = all(sympl.preserves_q(rep.space, m, seed=seed) for m in rep.matrices)
    inv = all(sympl.mat_mul(m, m) == sympl.F2Mat.identity(rep.dim) for m in rep.matrices)
    report.add("transvections are q-preserving involutions", ok and inv,
               f"dim {rep.dim}, seed {seed}")


def _check_global(report: Report, g: int, seed: int) -> None:
    rep = sympl.monodromy_rep(g, "t")
    _relator_checks(report, "trigonal global", words.trigonal_presentation(g).by_family("global"), rep)


def _check_quotient(report: Report, g: int, seed: int) -> None:
    rep = sympl.monodromy_rep(g, "t")
    _relator_checks(report, "trigonal quotient",
                    words.trigonal_presentation(g).by_family("quotient"), rep)


def _check_weierstrass(report: Report, g: int, seed: int) -> None:
    p = words.weierstrass_presentation(g)
    local = [r for r in p.relators if not r[0].startswith("twist")]
    _relator_checks(report, "weierstrass (i)-(iii) ambient", local,
                    sympl.monodromy_rep(g, "T", quotient=False))
    _relator_checks(report, "weierstrass (i)-(iv) quotient", p.relators,
                    sympl.monodromy_rep(g, "T"))


def _check_bridge(report: Report, g: int, seed: int) -> None:
    b = sympl.bridge_check(g)
    report.add("bridge pair identities", b.pair_identities)
    report.add("substituted delta0 equals reorder word", b.reorder_identity)
    report.add("substituted delta1 equals T-side delta1", b.delta1_identity)
    report.add("t-images are transvections", b.transvection_images)
    report.add("extracted vectors reproduce t-diagram pairing", b.gram_matches and b.q_values)


def _check_centrality(report: Report, g: int, seed: int) -> None:
    rep = sympl.monodromy_rep(g, "t")
    stated = sympl.centrality_checks(g, rep)
    for name, ok in stated.items():
        if name.endswith("central") or name.endswith("commute"):
            report.add(name, ok)
        else:
            report.info(name, str(ok).lower())
    for name, ok in sympl.centrality_checks(g, rep, exponent=g + 2).items():
        if name.startswith("d0^3*d1^3") or name == "d0,d1 commute":
            continue
        report.info(name, str(ok).lower())


CHECKS: dict[str, Callable[[Report, int, int], None]] = {
    "diagram": _check_diagram,
    "global": _check_global,
    "quotient": _check_quotient,
    "weierstrass": _check_weierstrass,
    "bridge": _check_bridge,
    "centrality": _check_centrality,
}


def cmd_verify(g: int, checks: Sequence[str], seed: int = 0) -> Report:
    _require_trigonal(g)
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise UsageError(f"unknown checks: {', '.join(unknown)}")
    report = Report("verify", {"g": g, "checks": ",".join(checks), "seed": seed})
    for name in VERIFY_CHECKS:
        if name in checks:
            CHECKS[name](report, g, seed)
    return report


# ---------------------------------------------------------------- lattice / order


def cmd_lattice(g: int) -> Report:
    _require_trigonal(g)
    M = (g + 2) // 3
    report = Report("lattice", {"g": g, "M": M})
    blocks = intlattice.milnor_lattice(M)
    report.info("blocks", blocks.describe())
    report.add("lattice rank = 2g+2", blocks.rank == 2 * g + 2, str(blocks.rank))
    lat_rad = len(rank_kernel(intlattice.mod2_reduction(intlattice.gram_of_blocks(blocks)))[1])
    report.add("mod-2 lattice radical has dimension 2", lat_rad == 2, str(lat_rad))

    d = diagrams.t_diagram(g)
    qs = diagrams.quad_space(d)
    rad = radical(qs)
    report.add("t-diagram radical has dimension 2", len(rad) == 2, str(len(rad)))
    r1, r2 = diagrams.radical_generators(g)
    spans = rank(sympl.F2Mat(4, d.n, tuple(v.bits for v in (*rad, r1, r2)))) == 2
    report.add("radical spanned by r1, r2", spans, f"r1={_support(r1)} r2={_support(r2)}")
    report.add("q(r1) = 0", q_eval(qs, r1) == 0, str(q_eval(qs, r1)))
    report.add("q(r2) = 0", q_eval(qs, r2) == 0, str(q_eval(qs, r2)))
    rep = sympl.monodromy_rep(g, "t")
    eps = arf_type(rep.space)
    report.info("Arf type of quotient", f"{eps:+d}")
    for label, idx in (("c_{2g+1}", 2 * g), ("c_{2g+2}", 2 * g + 1)):
        report.info(f"{label} in basis c_1..c_{{2g}}", _support(rep.vectors[idx]))
    return report


def cmd_order(g: int, force: bool = False) -> Report:
    _require_trigonal(g)
    if g not in ORDER_SAFE_GENERA and not force:
        raise UsageError(f"order for g={g} is not runtime-bounded; pass --force to run it")
    r = sympl.full_orthogonal_check(g)
    report = Report("order", {"g": g})
    report.info("Arf type", f"{r.eps:+d}")
    report.info("BSGS order", str(r.bsgs_order))
    report.info(f"|O^{'+' if r.eps > 0 else '-'}({2 * g},2)|", str(r.formula_order))
    report.add("generators preserve q", r.q_preserved)
    report.add("monodromy group is the full orthogonal group",
               r.bsgs_order == r.formula_order, f"{r.bsgs_order} = {r.formula_order}"
               if r.bsgs_order == r.formula_order else f"{r.bsgs_order} != {r.formula_order}")
    return report


# ---------------------------------------------------------------- plucker / maroni


def cmd_plucker(g: int) -> Report:
    _require_genus(g)
    bc = geom.branch_characteristics(g)
    report = Report("plucker", {"g": g})
    report.add("degree b = 8g+10", bc.b == 8 * g + 10, str(bc.b))
    report.add("cusps = 27g+12", bc.cusps == 27 * g + 12, str(bc.cusps))
    report.info("ramification genus (3H+K adjunction)", str(bc.genus_ramification))
    report.info("nodes (stated formula)", str(bc.nodes_formula))
    report.info("nodes (genus oracle)", str(bc.nodes_oracle))
    if not bc.nodes_agree:
        report.info("node count discrepancy",
                    f"stated formula {bc.nodes_formula} vs oracle {bc.nodes_oracle}")
    try:
        dual = geom.plucker_dual(bc.curve())
    except ValueError as exc:
        report.info("dual curve", f"invalid: {exc}")
    else:
        report.info("dual curve", f"degree {dual.degree}, nodes {dual.nodes}, cusps {dual.cusps}")
        report.add("dual of dual is the branch curve", geom.plucker_dual(dual) == bc.curve())
    v = geom.branch_characteristics_chern(geom.SurfaceChern.veronese())
    report.add("Veronese control gives the 9-cuspidal sextic",
               (v.b, v.cusps, v.nodes_oracle) == (6, 9, 0),
               f"b={v.b} cusps={v.cusps} nodes={v.nodes_oracle}")
    for td in geom.maroni_strata(g):
        pa = geom.plucker_applicability(g, td.M)
        report.info(f"M={td.M}", f"c={pa.c} codim={pa.codim_sigma_infinity} "
                    f"applicable={str(pa.applicable).lower()}")
    return report


def cmd_maroni(g: int) -> Report:
    _require_genus(g)
    report = Report("maroni", {"g": g})
    for td, factors in geom.strata_cokernels(g):
        ok = all(td.check().values())
        expected = () if td.M <= 1 else (td.M,)
        tors = tuple(d for d in factors if d > 1)
        label = "Z/1 (trivial)" if td.M == 1 else _torsion_text(factors)
        report.add(f"M={td.M}", ok and tors == expected,
                   f"m={td.m} n={td.n} c={td.c} N={td.N} cokernel torsion {label}")
    return report


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="trigmono", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("present", help="export a presentation")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--style", choices=("trigonal", "weierstrass"), default="trigonal")
    p.add_argument("--format", choices=("text", "gap", "json"), default="text")

    p = sub.add_parser("verify", help="check relators in the transvection representation")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--checks", default=",".join(VERIFY_CHECKS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")

    for name, helptext in (("lattice", "Milnor lattice, radical and Arf type"),
                           ("plucker", "branch-curve Plücker characteristics"),
                           ("maroni", "Maroni strata and Z/M cokernels")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--g", type=int, required=True)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("order", help="monodromy group order by Schreier-Sims")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--force", action="store_true", help="allow genera beyond 1, 4, 7")
    p.add_argument("--json", action="store_true")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "present":
            sys.stdout.write(cmd_present(args.g, args.style, args.format))
            return 0
        if args.command == "verify":
            checks = [c.strip() for c in args.checks.split(",") if c.strip()]
            report = cmd_verify(args.g, checks, args.seed)
        elif args.command == "lattice":
            report = cmd_lattice(args.g)
        elif args.command == "order":
            report = cmd_order(args.g, args.force)
        elif args.command == "plucker":
            report = cmd_plucker(args.g)
        else:
            report = cmd_maroni(args.g)
    except UsageError as exc:
        ap.error(str(exc))  # exits with status 2
    sys.stdout.write(report.to_json() + "\n" if args.json else report.to_text())
    return 0 if report.summary == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
