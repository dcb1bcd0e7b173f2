"""Trigonal numerology and Plücker characteristics of branch curves.

Classes on the Hirzebruch surface F_M are written a*s0 + b*f with
s0^2 = M, s0.f = 1, f^2 = 0.
"""
from __future__ import annotations

from dataclasses import dataclass

from .intlattice import maroni_cokernel


def _half(x: int, what: str) -> int:
    if x % 2:
        raise ArithmeticError(f"{what} = {x} is odd; cannot halve")
    return x // 2


def hirzebruch_dot(c1: tuple[int, int], c2: tuple[int, int], M: int) -> int:
    (a1, b1), (a2, b2) = c1, c2
    return a1 * a2 * M + a1 * b2 + a2 * b1


def canonical_class(M: int) -> tuple[int, int]:
    return (-2, M - 2)


@dataclass(frozen=True)
class TrigonalData:
    g: int
    M: int
    m: int
    n: int
    c: int
    N: int

    @classmethod
    def from_genus(cls, g: int, M: int) -> "TrigonalData":
        if g < 1 or M < 0 or (g - M) % 2 or 3 * M > g + 2:
            raise ValueError(f"no trigonal stratum with g={g}, M={M}")
        m = (g + 2 - M) // 2
        n = (g + 2 + M) // 2
        c = _half(g + 2 - 3 * M, "g + 2 - 3M")
        return cls(g, M, m, n, c, 2 * (m + n) + 3)

    def check(self) -> dict[str, bool]:
        C = (3, self.c)
        K = canonical_class(self.M)
        CK = (C[0] + K[0], C[1] + K[1])
        return {
            "m+n = g+2": self.m + self.n == self.g + 2,
            "n-m = M": self.n - self.m == self.M,
            "2c = g+2-3M": 2 * self.c == self.g + 2 - 3 * self.M,
            "N = 2(m+n)+3": self.N == 2 * (self.m + self.n) + 3,
            "3m, 3n >= g+2": 3 * min(self.m, self.n) >= self.g + 2,
            "g-1 = 3M+2c-3": self.g - 1 == 3 * self.M + 2 * self.c - 3,
            "C.(C+K) = 2g-2": hirzebruch_dot(C, CK, self.M) == 2 * self.g - 2,
            "C.C = 3g+6": hirzebruch_dot(C, C, self.M) == 3 * self.g + 6,
            "K.K = 8": hirzebruch_dot(K, K, self.M) == 8,
        }


def maroni_strata(g: int) -> list[TrigonalData]:
    """Admissible Maroni invariants: M = g mod 2, 0 <= M <= floor((g+2)/3)."""
    if g < 1:
        raise ValueError("genus must be positive")
    top = (g + 2) // 3
    return [TrigonalData.from_genus(g, M) for M in range(g % 2, top + 1, 2)]


def is_maximal_divisible(g: int) -> bool:
    """True iff the largest Maroni invariant M satisfies 3M = g + 2."""
    return 3 * maroni_strata(g)[-1].M == g + 2


def dim_crosscheck(M: int) -> tuple[int, int, bool]:
    """dim V of u0 y^3 + u1 y^2 + u2 y + u3 against N = 2g + 7 for g = 3M - 2."""
    if M < 1:
        raise ValueError("M must be positive")
    dim_v = 1 + (M + 1) + (2 * M + 1) + (3 * M + 1)
    g = 3 * M - 2
    N = TrigonalData.from_genus(g, M).N
    return dim_v, N, dim_v == 2 * g + 8 and N == dim_v - 1


@dataclass(frozen=True)
class PluckerCurve:
    degree: int
    nodes: int
    cusps: int

    def __post_init__(self):
        if self.degree < 1 or self.nodes < 0 or self.cusps < 0:
            raise ValueError(f"invalid plane curve data {self}")

    @property
    def genus(self) -> int:
        return (self.degree - 1) * (self.degree - 2) // 2 - self.nodes - self.cusps

    def check(self):
        if self.genus < 0:
            raise ValueError(f"negative genus for {self}")


def plucker_dual(c: PluckerCurve) -> PluckerCurve:
    """Dual degree, cusps and nodes by the classical Plücker formulas."""
    c.check()
    b, d, k = c.degree, c.nodes, c.cusps
    b2 = b * (b - 1) - 2 * d - 3 * k
    k2 = 3 * b * (b - 2) - 6 * d - 8 * k
    if b2 < 1 or k2 < 0:
        raise ValueError(f"{c} has no valid dual (degree {b2}, cusps {k2})")
    d2 = (b2 - 1) * (b2 - 2) // 2 - c.genus - k2
    if d2 < 0:
        raise ValueError(f"{c} has no valid dual (negative node count {d2})")
    return PluckerCurve(b2, d2, k2)


@dataclass(frozen=True)
class SurfaceChern:
    K2: int
    e: int
    d: int   # H^2
    KH: int

    @classmethod
    def hirzebruch(cls, g: int) -> "SurfaceChern":
        d = 3 * g + 6
        return cls(8, 4, d, 2 * g - 2 - d)

    @classmethod
    def veronese(cls) -> "SurfaceChern":
        return cls(9, 3, 4, -6)


@dataclass(frozen=True)
class BranchCharacteristics:
    b: int
    cusps: int
    nodes_formula: int
    nodes_oracle: int
    genus_ramification: int

    @property
    def nodes_agree(self) -> bool:
        return self.nodes_formula == self.nodes_oracle

    def curve(self) -> PluckerCurve:
        return PluckerCurve(self.b, self.nodes_oracle, self.cusps)


def branch_characteristics_chern(s: SurfaceChern) -> BranchCharacteristics:
    """Branch curve of a general projection to the plane.

    Degree 3d + KH, cusps 2K^2 - e - 15d + 9b, nodes e - 3K^2 + 24d + b(b-15)/2,
    and independently nodes from the genus of the ramification curve
    R = 3H + K via adjunction.
    """
    b = 3 * s.d + s.KH
    cusps = 2 * s.K2 - s.e - 15 * s.d + 9 * b
    nodes_formula = s.e - 3 * s.K2 + 24 * s.d + _half(b * (b - 15), "b(b-15)")
    # 2p - 2 = R.(R + K) = (3H + K).(3H + 2K)
    genus_r = 1 + _half(9 * s.d + 9 * s.KH + 2 * s.K2, "R.(R+K)")
    nodes_oracle = (b - 1) * (b - 2) // 2 - genus_r - cusps
    return BranchCharacteristics(b, cusps, nodes_formula, nodes_oracle, genus_r)


def branch_characteristics(g: int) -> BranchCharacteristics:
    if g < 1:
        raise ValueError("genus must be positive")
    return branch_characteristics_chern(SurfaceChern.hirzebruch(g))


@dataclass(frozen=True)
class PluckerApplicability:
    g: int
    M: int
    c: int
    c_at_least_3: bool
    codim_sigma_infinity: int
    codim_at_least_3: bool

    @property
    def applicable(self) -> bool:
        return self.c_at_least_3 and self.codim_at_least_3


def plucker_applicability(g: int, M: int) -> PluckerApplicability:
    c = TrigonalData.from_genus(g, M).c
    return PluckerApplicability(g, M, c, c >= 3, c + 1, c + 1 >= 3)


def strata_cokernels(g: int) -> list[tuple[TrigonalData, tuple[int, ...]]]:
    out = []
    for td in maroni_strata(g):
        factors = maroni_cokernel(td.m, td.n)
        out.append((td, factors))
    return out
