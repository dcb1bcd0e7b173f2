"""Mod-2 monodromy by transvections, relator checks and matrix-group orders."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Literal, Sequence

from .diagrams import (
    Diagram,
    T_graph,
    check_genus,
    check_trigonal_genus,
    gram_mod2,
    quad_space,
    radical_generators,
    t_diagram,
)
from .f2core import (
    F2Mat,
    F2Vec,
    QuadSpace,
    arf_type,
    mat_mul,
    q_eval,
    quotient_by_radical,
    radical,
    rank,
)
from .words import (
    Presentation,
    Word,
    apply_substitution,
    delta_words,
    generator_change,
    mul,
    power,
)

Kind = Literal["t", "T"]


def transvection_matrix(qs: QuadSpace, v: F2Vec) -> F2Mat:
    """Matrix of x -> x + <x, v> v."""
    if v.dim != qs.dim:
        raise ValueError("dimension mismatch")
    if v.is_zero():
        raise ValueError("transvection at the zero vector")
    w = qs.gram.apply(v).bits  # row functional x -> <x, v>
    rows = tuple((1 << i) ^ (w if (v.bits >> i) & 1 else 0) for i in range(qs.dim))
    return F2Mat(qs.dim, qs.dim, rows)


@dataclass(frozen=True)
class TransvectionRep:
    space: QuadSpace
    vectors: tuple[F2Vec, ...]
    matrices: tuple[F2Mat, ...]
    kind: str = "t"
    projection: F2Mat | None = None

    @classmethod
    def from_vectors(cls, space: QuadSpace, vectors: Sequence[F2Vec], kind: str = "t",
                     projection: F2Mat | None = None) -> "TransvectionRep":
        mats = tuple(transvection_matrix(space, v) for v in vectors)
        return cls(space, tuple(vectors), mats, kind, projection)

    @property
    def ngens(self) -> int:
        return len(self.vectors)

    @property
    def dim(self) -> int:
        return self.space.dim


def _diagram(g: int, kind: Kind) -> Diagram:
    if kind == "t":
        return t_diagram(g)
    if kind == "T":
        return T_graph(g)
    raise ValueError(f"unknown diagram kind {kind!r}")


def monodromy_rep(g: int, kind: Kind = "t", quotient: bool = True) -> TransvectionRep:
    """Transvections at the images of the diagram's basis vectors.

    With ``quotient=False`` the representation lives on the degenerate
    ambient space of dimension 2g + 2.
    """
    d = _diagram(g, kind)
    ambient = quad_space(d)
    basis = [F2Vec.basis(d.n, i) for i in range(d.n)]
    if not quotient:
        return TransvectionRep.from_vectors(ambient, basis, kind)
    if kind == "t":
        rad = list(radical_generators(g))
    else:
        rad = radical(ambient)
    if len(radical(ambient)) != 2:
        raise ArithmeticError(f"radical of the {kind}-diagram has dimension {len(radical(ambient))}")
    for r in rad:
        if q_eval(ambient, r):
            raise ArithmeticError(f"q does not vanish on radical vector {r}")
    space, proj = quotient_by_radical(ambient, rad)
    vectors = [proj.apply(b) for b in basis]
    return TransvectionRep.from_vectors(space, vectors, kind, proj)


def evaluate_word(rep: TransvectionRep, w: Sequence[int]) -> F2Mat:
    out = F2Mat.identity(rep.dim)
    for a in w:
        if not 1 <= abs(a) <= rep.ngens:
            raise ValueError(f"letter {a} outside 1..{rep.ngens}")
        # transvections are involutions over GF(2)
        out = mat_mul(out, rep.matrices[abs(a) - 1])
    return out


@dataclass
class RelatorResult:
    name: str
    passed: bool
    image: F2Mat | None = None  # set only on failure


@dataclass
class PresentationReport:
    results: list[RelatorResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[RelatorResult]:
        return [r for r in self.results if not r.passed]


def verify_relators(relators: Sequence[tuple[str, Word]], rep: TransvectionRep) -> PresentationReport:
    ident = F2Mat.identity(rep.dim)
    report = PresentationReport()
    for name, w in relators:
        m = evaluate_word(rep, w)
        ok = m == ident
        report.results.append(RelatorResult(name, ok, None if ok else m))
    return report


def verify_presentation(p: Presentation, rep: TransvectionRep) -> PresentationReport:
    if p.ngens != rep.ngens:
        raise ValueError(f"presentation has {p.ngens} generators, representation {rep.ngens}")
    return verify_relators(p.relators, rep)


def commutes(a: F2Mat, b: F2Mat) -> bool:
    return mat_mul(a, b) == mat_mul(b, a)


def loop_images(g: int, rep: TransvectionRep, exponent: int | None = None) -> dict[str, F2Mat]:
    """rho of d0^3 d1^3, d0^k and d1^k; k defaults to 2g + 2."""
    k = 2 * g + 2 if exponent is None else exponent
    d0, d1, _, _ = delta_words(g)
    return {
        "d0^3*d1^3": evaluate_word(rep, mul(power(d0, 3), power(d1, 3))),
        f"d0^{k}": evaluate_word(rep, power(d0, k)),
        f"d1^{k}": evaluate_word(rep, power(d1, k)),
    }


def centrality_checks(g: int, rep: TransvectionRep | None = None,
                      exponent: int | None = None) -> dict[str, bool]:
    """Commutation of delta0 with delta1 and centrality of the three loop images.

    Also records whether each image is the identity matrix.
    """
    check_trigonal_genus(g)
    rep = rep or monodromy_rep(g, "t")
    d0, d1, _, _ = delta_words(g)
    out = {"d0,d1 commute": commutes(evaluate_word(rep, d0), evaluate_word(rep, d1))}
    elements = loop_images(g, rep, exponent)
    for name, m in elements.items():
        out[f"{name} central"] = all(commutes(m, t) for t in rep.matrices)
    ident = F2Mat.identity(rep.dim)
    for name, m in elements.items():
        out[f"{name} is identity"] = m == ident
    return out


# ---------------------------------------------------------------- Schreier-Sims
#
# Internally a matrix is a tuple of column ints; it acts on a point x (an int
# bit vector) by XOR-ing the columns selected by the bits of x.


def _act(cols: tuple[int, ...], x: int) -> int:
    out = 0
    k = 0
    while x:
        if x & 1:
            out ^= cols[k]
        x >>= 1
        k += 1
    return out


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Columns of the product a b."""
    return tuple(_act(a, c) for c in b)


def _to_cols(m: F2Mat) -> tuple[int, ...]:
    return tuple(m.column(j).bits for j in range(m.cols))


def _from_cols(cols: tuple[int, ...]) -> F2Mat:
    n = len(cols)
    return F2Mat.from_columns([F2Vec(n, c) for c in cols])


def _inverse_cols(cols: tuple[int, ...]) -> tuple[int, ...]:
    from .f2core import inverse
    return _to_cols(inverse(_from_cols(cols)))


class _Level:
    __slots__ = ("point", "gens", "orbit", "trans", "inv", "done")

    def __init__(self, point: int, ident: tuple[int, ...]):
        self.point = point
        self.gens: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
        self.orbit: list[int] = [point]
        self.trans: dict[int, tuple[int, ...]] = {point: ident}
        self.inv: dict[int, tuple[int, ...]] = {point: ident}
        self.done: set[tuple[int, int]] = set()

    def extend_orbit(self):
        k = 0
        while k < len(self.orbit):
            beta = self.orbit[k]
            u, ui = self.trans[beta], self.inv[beta]
            for s, si in self.gens:
                gamma = _act(s, beta)
                if gamma not in self.trans:
                    self.trans[gamma] = _compose(s, u)
                    self.inv[gamma] = _compose(ui, si)
                    self.orbit.append(gamma)
            k += 1


@dataclass
class BSGS:
    dim: int
    base: list[F2Vec]
    strong_generators: list[F2Mat]
    orbit_lengths: list[int]
    _levels: list[_Level] = field(repr=False, default_factory=list)

    @property
    def order(self) -> int:
        out = 1
        for n in self.orbit_lengths:
            out *= n
        return out

    def sift(self, m: F2Mat) -> tuple[F2Mat, int]:
        h, j = _sift(self._levels, _to_cols(m), 0)
        return _from_cols(h), j

    def contains(self, m: F2Mat) -> bool:
        h, j = _sift(self._levels, _to_cols(m), 0)
        return j == len(self._levels) and h == _identity_cols(self.dim)


def _identity_cols(n: int) -> tuple[int, ...]:
    return tuple(1 << i for i in range(n))


def _sift(levels: list[_Level], h: tuple[int, ...], start: int) -> tuple[tuple[int, ...], int]:
    for j in range(start, len(levels)):
        lv = levels[j]
        beta = _act(h, lv.point)
        ui = lv.inv.get(beta)
        if ui is None:
            return h, j
        h = _compose(ui, h)
    return h, len(levels)


def _first_moved(h: tuple[int, ...]) -> int:
    for k, c in enumerate(h):
        if c != 1 << k:
            return 1 << k
    raise ValueError("identity moves no basis vector")


def schreier_sims(generators: Sequence[F2Mat], dim: int) -> BSGS:
    """Deterministic Schreier-Sims for the natural action on F2^dim minus 0.

    Base points are the first standard basis vectors moved by the element
    that forces a new level.
    """
    ident = _identity_cols(dim)
    gens = []
    for m in generators:
        if m.rows != dim or m.cols != dim:
            raise ValueError("generator has the wrong shape")
        if rank(m) != dim:
            raise ValueError("generator is not invertible")
        c = _to_cols(m)
        if c != ident and c not in [x for x, _ in gens]:
            gens.append((c, _inverse_cols(c)))

    levels: list[_Level] = []
    for s, si in gens:
        if all(_act(s, lv.point) == lv.point for lv in levels):
            levels.append(_Level(_first_moved(s), ident))
    for s, si in gens:
        for lv in levels:
            lv.gens.append((s, si))
            if _act(s, lv.point) != lv.point:
                break
    for lv in levels:
        lv.extend_orbit()

    i = len(levels) - 1
    while i >= 0:
        lv = levels[i]
        descended = False
        for beta in lv.orbit:
            u = lv.trans[beta]
            for gi, (s, _) in enumerate(lv.gens):
                key = (beta, gi)
                if key in lv.done:
                    continue
                gamma = _act(s, beta)
                sg = _compose(lv.inv[gamma], _compose(s, u))
                h, j = _sift(levels, sg, i + 1)
                if j == len(levels) and h == ident:
                    lv.done.add(key)
                    continue
                if j == len(levels):
                    levels.append(_Level(_first_moved(h), ident))
                hi = _inverse_cols(h)
                for l in range(i + 1, j + 1):
                    levels[l].gens.append((h, hi))
                    levels[l].extend_orbit()
                i = j
                descended = True
                break
            if descended:
                break
        if not descended:
            i -= 1

    strong = []
    seen = set()
    for lv in levels:
        for s, _ in lv.gens:
            if s not in seen:
                seen.add(s)
                strong.append(_from_cols(s))
    bsgs = BSGS(dim, [F2Vec(dim, lv.point) for lv in levels], strong,
                [len(lv.orbit) for lv in levels], levels)
    for m in generators:
        if not bsgs.contains(m):
            raise ArithmeticError("generator does not sift to identity")
    return bsgs


def orthogonal_group_order(n: int, eps: int) -> int:
    """|O^eps(2n, 2)|."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    out = 2 * 2 ** (n * (n - 1)) * (2 ** n - eps)
    for i in range(1, n):
        out *= 4 ** i - 1
    return out


def symplectic_group_order(n: int) -> int:
    out = 2 ** (n * n)
    for i in range(1, n + 1):
        out *= 4 ** i - 1
    return out


def preserves_q(qs: QuadSpace, m: F2Mat, samples: int = 200, seed: int = 0,
                exhaustive_limit: int = 10) -> bool:
    """q(m x) = q(x), exhaustively for dim <= exhaustive_limit, else sampled."""
    if qs.dim <= exhaustive_limit:
        xs = range(1 << qs.dim)
    else:
        rng = random.Random(seed)
        xs = [rng.getrandbits(qs.dim) for _ in range(samples)]
    for x in xs:
        v = F2Vec(qs.dim, x)
        if q_eval(qs, m.apply(v)) != q_eval(qs, v):
            return False
    return True


def preserves_pairing(qs: QuadSpace, m: F2Mat) -> bool:
    # m^T G m == G
    return mat_mul(mat_mul(m.transpose(), qs.gram), m) == qs.gram


@dataclass
class OrderReport:
    g: int
    eps: int
    bsgs_order: int
    formula_order: int
    q_preserved: bool

    @property
    def passed(self) -> bool:
        return self.q_preserved and self.bsgs_order == self.formula_order


def full_orthogonal_check(g: int, kind: Kind = "t", seed: int = 0) -> OrderReport:
    rep = monodromy_rep(g, kind)
    eps = arf_type(rep.space)
    bsgs = schreier_sims(rep.matrices, rep.dim)
    q_ok = all(preserves_q(rep.space, m, seed=seed) for m in rep.matrices)
    return OrderReport(g, eps, bsgs.order, orthogonal_group_order(g, eps), q_ok)


def isotropic_transvection(qs: QuadSpace) -> F2Mat:
    """A symplectic transvection that does not preserve q (needs dim >= 4 or split)."""
    for x in range(1, 1 << qs.dim):
        v = F2Vec(qs.dim, x)
        if q_eval(qs, v) == 0:
            return transvection_matrix(qs, v)
    raise ValueError("q has no nonzero zeros")


# ---------------------------------------------------------------- bridge


def transvection_vector(qs: QuadSpace, m: F2Mat) -> F2Vec | None:
    """The v with m = transvection at v, or None if m is not one."""
    diff = m + F2Mat.identity(m.rows)
    if rank(diff) != 1:
        return None
    v = next(diff.column(j) for j in range(diff.cols) if not diff.column(j).is_zero())
    if transvection_matrix(qs, v) != m:
        return None
    return v


@dataclass
class BridgeReport:
    g: int
    pair_identities: bool
    reorder_identity: bool
    delta1_identity: bool
    transvection_images: bool
    gram_matches: bool
    q_values: bool
    extracted: list[F2Vec | None] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.pair_identities and self.reorder_identity and self.delta1_identity
                and self.transvection_images
                and self.gram_matches and self.q_values)


def bridge_check(g: int) -> BridgeReport:
    from .words import bridge_pairs, delta1_T_word, reorder_word
    check_trigonal_genus(g)
    sub = generator_change(g)
    pairs_ok = all(apply_substitution(sub, t) == T for t, T in bridge_pairs(g))
    d0, d1, _, _ = delta_words(g)
    reorder_ok = apply_substitution(sub, d0) == reorder_word(g)
    delta1_ok = apply_substitution(sub, d1) == delta1_T_word(g)

    rep_T = monodromy_rep(g, "T")
    ws = [transvection_vector(rep_T.space, evaluate_word(rep_T, sub.images[i]))
          for i in range(1, 2 * g + 3)]
    trans_ok = all(w is not None for w in ws)
    gram_ok = q_ok = False
    if trans_ok:
        adj = gram_mod2(t_diagram(g))
        gram_ok = all(rep_T.space.pair(ws[a], ws[b]) == adj[a, b]
                      for a in range(len(ws)) for b in range(len(ws)))
        q_ok = all(q_eval(rep_T.space, w) == 1 for w in ws)
    return BridgeReport(g, pairs_ok, reorder_ok, delta1_ok, trans_ok, gram_ok, q_ok, ws)
