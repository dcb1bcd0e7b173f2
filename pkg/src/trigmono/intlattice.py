"""Integer Gram matrices of the Milnor lattice blocks and Smith normal form."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .f2core import F2Mat

IntMat = tuple[tuple[int, ...], ...]

BLOCK_RANKS = {"E8": 8, "U": 2, "D4": 4, "ZERO1": 1}


def _cartan(n: int, edges: Sequence[tuple[int, int]]) -> IntMat:
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        m[i][j] = m[j][i] = -1
    return tuple(tuple(r) for r in m)


# E8 Dynkin diagram: chain 0-1-2-3-4-5-6 with node 7 attached to node 4
E8 = _cartan(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)])
# D4: center node 0 joined to 1, 2, 3
D4 = _cartan(4, [(0, 1), (0, 2), (0, 3)])
U = ((0, 1), (1, 0))
ZERO1 = ((0,),)

BLOCKS = {"E8": E8, "U": U, "D4": D4, "ZERO1": ZERO1}


@dataclass(frozen=True)
class LatticeBlocks:
    blocks: tuple[tuple[str, int], ...]  # (tag, multiplicity), multiplicity > 0

    def __post_init__(self):
        for tag, mult in self.blocks:
            if tag not in BLOCKS:
                raise ValueError(f"unknown block {tag!r}")
            if mult <= 0:
                raise ValueError("multiplicities must be positive")

    @property
    def rank(self) -> int:
        return sum(BLOCK_RANKS[t] * k for t, k in self.blocks)

    def tags(self) -> list[str]:
        return [t for t, k in self.blocks for _ in range(k)]

    def describe(self) -> str:
        parts = []
        for tag, k in self.blocks:
            name = "0" if tag == "ZERO1" else tag
            if tag == "ZERO1":
                parts.extend([name] * k)
            else:
                parts.append(name if k == 1 else f"{k}·{name}")
        return " + ".join(parts)


def block_diag(mats: Sequence[IntMat]) -> IntMat:
    n = sum(len(m) for m in mats)
    out = [[0] * n for _ in range(n)]
    off = 0
    for m in mats:
        k = len(m)
        for i in range(k):
            for j in range(k):
                out[off + i][off + j] = m[i][j]
        off += k
    return tuple(tuple(r) for r in out)


def gram_of_blocks(b: LatticeBlocks) -> IntMat:
    return block_diag([BLOCKS[t] for t in b.tags()])


def milnor_lattice(M: int) -> LatticeBlocks:
    """Block decomposition of the intersection lattice for Maroni invariant M.

    M = 2l+1: l E8 + 2l U + D4;  M = 2l: l E8 + (2l-2) U + 0 + 0.
    """
    if not isinstance(M, int) or M < 1:
        raise ValueError(f"M must be a positive integer, got {M!r}")
    l, odd = divmod(M, 2)
    blocks = []
    if l:
        blocks.append(("E8", l))
    if odd:
        if 2 * l:
            blocks.append(("U", 2 * l))
        blocks.append(("D4", 1))
    else:
        if 2 * l - 2:
            blocks.append(("U", 2 * l - 2))
        blocks.append(("ZERO1", 2))
    return LatticeBlocks(tuple(blocks))


def mod2_reduction(m: IntMat) -> F2Mat:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    data = tuple(sum((x & 1) << j for j, x in enumerate(r)) for r in m)
    return F2Mat(rows, cols, data)


# ---------------------------------------------------------------- Smith normal form


@dataclass(frozen=True)
class SmithForm:
    invariant_factors: tuple[int, ...]  # length min(rows, cols); zeros trail
    rows: int
    cols: int

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d)

    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)

    def free_rank(self) -> int:
        """Rank of the free part of the cokernel Z^rows / image."""
        return self.rows - self.rank


def smith_normal_form(m: Sequence[Sequence[int]]) -> SmithForm:
    """Invariant factors by unimodular row and column operations.

    The pivot at each stage is an entry of minimal nonzero absolute value in
    the remaining submatrix.  Python ints do not overflow.
    """
    a = [list(r) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    for r in a:
        if len(r) != cols:
            raise ValueError("ragged matrix")
    diag = []
    t = 0
    while t < min(rows, cols):
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        a[t], a[pi] = a[pi], a[t]
        for r in a:
            r[t], r[pj] = r[pj], r[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the rest of the submatrix
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # a remainder smaller than the pivot survived: move it to the pivot
            _, pi, pj = min((abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols)
                            if a[i][j] and (i == t or j == t))
            a[t], a[pi] = a[pi], a[t]
            for r in a:
                r[t], r[pj] = r[pj], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    diag.extend([0] * (min(rows, cols) - len(diag)))
    return SmithForm(tuple(diag), rows, cols)


def maroni_matrix(m: int, n: int, extension: tuple[int, int] | None = None) -> IntMat:
    base = ((-m, -n), (m + 1, n + 1))
    if extension is None:
        return base
    a, b = extension
    return ((-m, -n, a), (m + 1, n + 1, b), (0, 0, 1))


DEFAULT_EXTENSIONS = ((0, 0), (1, 0), (0, 1), (3, -7), (-5, 11), (17, 23))


def maroni_cokernel(m: int, n: int,
                    extensions: Sequence[tuple[int, int]] = DEFAULT_EXTENSIONS) -> tuple[int, ...]:
    """Invariant factors of (-m -n; m+1 n+1).

    The torsion of the cokernel is Z/(n - m).  Every 3x3 extension with
    bottom row (0 0 1) is checked to give the same torsion.
    """
    if not (isinstance(m, int) and isinstance(n, int)) or m < 1 or n < m:
        raise ValueError(f"need n >= m >= 1, got m={m!r}, n={n!r}")
    snf = smith_normal_form(maroni_matrix(m, n))
    for ext in extensions:
        other = smith_normal_form(maroni_matrix(m, n, ext))
        if other.torsion() != snf.torsion() or other.free_rank() != snf.free_rank():
            raise ArithmeticError(f"extension {ext} changes the cokernel")
    return snf.invariant_factors


def det(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in m]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if a[i][k]), None)
            if sw is None:
                return 0
            a[k], a[sw] = a[sw], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1] if n else 1
