"""Linear algebra over GF(2) on bit-packed integers.

Vectors are stored as a single Python int (bit ``i`` is coordinate ``i``),
matrices as a tuple of row ints.  Everything is immutable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class F2Vec:
    dim: int
    bits: int = 0

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("negative dimension")
        if self.bits < 0 or self.bits >> self.dim:
            raise ValueError(f"bits {self.bits:#x} exceed dimension {self.dim}")

    @classmethod
    def from_list(cls, coords: Sequence[int]) -> "F2Vec":
        bits = 0
        for i, c in enumerate(coords):
            if c % 2:
                bits |= 1 << i
        return cls(len(coords), bits)

    @classmethod
    def indicator(cls, dim: int, support: Iterable[int]) -> "F2Vec":
        """Indicator of a set of 0-based coordinates."""
        bits = 0
        for i in support:
            if not 0 <= i < dim:
                raise IndexError(f"coordinate {i} outside [0, {dim})")
            bits ^= 1 << i
        return cls(dim, bits)

    @classmethod
    def basis(cls, dim: int, i: int) -> "F2Vec":
        return cls.indicator(dim, [i])

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.dim:
            raise IndexError(f"coordinate {i} outside [0, {self.dim})")
        return (self.bits >> i) & 1

    def __add__(self, other: "F2Vec") -> "F2Vec":
        _check_same_dim(self, other)
        return F2Vec(self.dim, self.bits ^ other.bits)

    __xor__ = __add__

    def dot(self, other: "F2Vec") -> int:
        _check_same_dim(self, other)
        return (self.bits & other.bits).bit_count() & 1

    def support(self) -> list[int]:
        return [i for i in range(self.dim) if (self.bits >> i) & 1]

    def to_list(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.dim)]

    def is_zero(self) -> bool:
        return self.bits == 0

    def __repr__(self):
        return f"F2Vec({''.join(map(str, self.to_list())) or '-'})"


def _check_same_dim(a: F2Vec, b: F2Vec):
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


@dataclass(frozen=True)
class F2Mat:
    """Binary matrix; ``data[i]`` holds row ``i`` with bit ``j`` = entry (i, j)."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError("row count does not match data")
        for r in self.data:
            if r < 0 or r >> self.cols:
                raise ValueError("row entries exceed column count")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "F2Mat":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "F2Mat":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "F2Mat":
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        data = []
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged matrix")
            data.append(F2Vec.from_list(row).bits)
        return cls(rows, cols, tuple(data))

    @classmethod
    def from_columns(cls, columns: Sequence[F2Vec]) -> "F2Mat":
        if not columns:
            raise ValueError("need at least one column")
        n = columns[0].dim
        data = [0] * n
        for j, c in enumerate(columns):
            for i in c.support():
                data[i] |= 1 << j
        return cls(n, len(columns), tuple(data))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry {ij} outside {self.rows}x{self.cols}")
        return (self.data[i] >> j) & 1

    def row(self, i: int) -> F2Vec:
        return F2Vec(self.cols, self.data[i])

    def column(self, j: int) -> F2Vec:
        return F2Vec(self.rows, sum(((r >> j) & 1) << i for i, r in enumerate(self.data)))

    def to_lists(self) -> list[list[int]]:
        return [F2Vec(self.cols, r).to_list() for r in self.data]

    def transpose(self) -> "F2Mat":
        return F2Mat(self.cols, self.rows, tuple(self.column(j).bits for j in range(self.cols)))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.transpose()

    def apply(self, v: F2Vec) -> F2Vec:
        if v.dim != self.cols:
            raise ValueError(f"dimension mismatch: {self.cols} vs {v.dim}")
        x = v.bits
        out = 0
        for i, r in enumerate(self.data):
            if (r & x).bit_count() & 1:
                out |= 1 << i
        return F2Vec(self.rows, out)

    def __matmul__(self, other: "F2Mat") -> "F2Mat":
        return mat_mul(self, other)

    def __add__(self, other: "F2Mat") -> "F2Mat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return F2Mat(self.rows, self.cols, tuple(a ^ b for a, b in zip(self.data, other.data)))

    def __repr__(self):
        body = ";".join("".join(map(str, r)) for r in self.to_lists())
        return f"F2Mat({self.rows}x{self.cols}: {body})"


def mat_mul(a: F2Mat, b: F2Mat) -> F2Mat:
    if a.cols != b.rows:
        raise ValueError(f"inner dimensions disagree: {a.cols} vs {b.rows}")
    out = []
    for r in a.data:
        acc = 0
        k = 0
        while r:
            if r & 1:
                acc ^= b.data[k]
            r >>= 1
            k += 1
        out.append(acc)
    return F2Mat(a.rows, b.cols, tuple(out))


def rref(m: F2Mat) -> tuple[list[int], list[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    rows = list(m.data)
    pivots: list[int] = []
    top = 0
    for col in range(m.cols):
        bit = 1 << col
        pr = next((r for r in range(top, len(rows)) if rows[r] & bit), None)
        if pr is None:
            continue
        rows[top], rows[pr] = rows[pr], rows[top]
        for r in range(len(rows)):
            if r != top and rows[r] & bit:
                rows[r] ^= rows[top]
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return rows[:top], pivots


def rank_kernel(m: F2Mat) -> tuple[int, list[F2Vec]]:
    """Rank and a basis of the right kernel {v : m v = 0}.

    The kernel basis is returned in reduced row-echelon order: one vector per
    free column, reduced against the pivots.
    """
    rows, pivots = rref(m)
    pivot_set = set(pivots)
    kernel = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        bits = 1 << free
        for r, p in zip(rows, pivots):
            if (r >> free) & 1:
                bits |= 1 << p
        kernel.append(F2Vec(m.cols, bits))
    kernel.sort(key=lambda v: _echelon_key(v))
    return len(pivots), kernel


def _echelon_key(v: F2Vec) -> tuple[int, int]:
    low = (v.bits & -v.bits).bit_length()
    return (low, v.bits)


def rank(m: F2Mat) -> int:
    return len(rref(m)[1])


def span_rank(vectors: Sequence[F2Vec]) -> int:
    if not vectors:
        return 0
    return rank(F2Mat(len(vectors), vectors[0].dim, tuple(v.bits for v in vectors)))


def in_span(v: F2Vec, vectors: Sequence[F2Vec]) -> bool:
    return span_rank(list(vectors) + [v]) == span_rank(vectors)


def inverse(m: F2Mat) -> F2Mat:
    """Inverse by Gauss-Jordan on [m | I]."""
    n = m.rows
    if m.cols != n:
        raise ValueError("only square matrices are invertible")
    aug = F2Mat(n, 2 * n, tuple(r | (1 << (n + i)) for i, r in enumerate(m.data)))
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return F2Mat(n, n, tuple(r >> n for r in rows[:n]))


def solve(m: F2Mat, b: F2Vec) -> F2Vec | None:
    """Some x with m x = b, or None when the system is inconsistent."""
    if b.dim != m.rows:
        raise ValueError("dimension mismatch")
    aug = F2Mat(m.rows, m.cols + 1,
                tuple(r | (((b.bits >> i) & 1) << m.cols) for i, r in enumerate(m.data)))
    rows, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = 0
    for r, p in zip(rows, pivots):
        if (r >> m.cols) & 1:
            x |= 1 << p
    return F2Vec(m.cols, x)


# ---------------------------------------------------------------- quadratic spaces


@dataclass(frozen=True)
class QuadSpace:
    """GF(2) space with an alternating pairing and a quadratic refinement.

    ``qdiag[i]`` is the value of q on the i-th basis vector; q extends by
    q(x + y) = q(x) + q(y) + <x, y>.
    """

    gram: F2Mat
    qdiag: F2Vec

    def __post_init__(self):
        g = self.gram
        if g.rows != g.cols or self.qdiag.dim != g.rows:
            raise ValueError("gram must be square and match qdiag")
        if not g.is_symmetric():
            raise ValueError("gram is not symmetric")
        if any((r >> i) & 1 for i, r in enumerate(g.data)):
            raise ValueError("gram has nonzero diagonal")

    @property
    def dim(self) -> int:
        return self.gram.rows

    @classmethod
    def all_ones(cls, gram: F2Mat) -> "QuadSpace":
        return cls(gram, F2Vec(gram.rows, (1 << gram.rows) - 1))

    def pair(self, x: F2Vec, y: F2Vec) -> int:
        return self.gram.apply(y).dot(x)

    def q(self, v: F2Vec) -> int:
        return q_eval(self, v)


def q_eval(qs: QuadSpace, v: F2Vec) -> int:
    if v.dim != qs.dim:
        raise ValueError(f"dimension mismatch: {qs.dim} vs {v.dim}")
    return _q_bits(qs.gram.data, qs.qdiag.bits, v.bits)


def _q_bits(gram_rows: Sequence[int], qdiag: int, x: int) -> int:
    # sum_i x_i q_i + sum_{i<j} x_i x_j g_ij
    val = (x & qdiag).bit_count()
    i = 0
    y = x
    while y:
        if y & 1:
            above = x & gram_rows[i] & ~((2 << i) - 1)
            val += above.bit_count()
        y >>= 1
        i += 1
    return val & 1


def radical(qs: QuadSpace) -> list[F2Vec]:
    return rank_kernel(qs.gram)[1]


def count_zeros(qs: QuadSpace) -> int:
    rows, qd = qs.gram.data, qs.qdiag.bits
    return sum(1 for x in range(1 << qs.dim) if not _q_bits(rows, qd, x))


EXHAUSTIVE_ARF_LIMIT = 16


def arf_type_exhaustive(qs: QuadSpace) -> int:
    n2 = qs.dim
    _require_nondegenerate_even(qs)
    n = n2 // 2
    excess = count_zeros(qs) - 2 ** (n2 - 1)
    if abs(excess) != 2 ** (n - 1):
        raise ArithmeticError(f"zero count inconsistent with a nondegenerate form: {excess}")
    return 1 if excess > 0 else -1


def symplectic_basis(qs: QuadSpace) -> list[tuple[F2Vec, F2Vec]]:
    """Hyperbolic pairs (e, f) with <e, f> = 1, mutually orthogonal."""
    _require_nondegenerate_even(qs)
    remaining = [F2Vec.basis(qs.dim, i) for i in range(qs.dim)]
    pairs = []
    while remaining:
        e = remaining.pop(0)
        k = next(k for k, f in enumerate(remaining) if qs.pair(e, f))
        f = remaining.pop(k)
        projected = []
        for x in remaining:
            # project x onto the orthogonal complement of span(e, f)
            x = x + (f if qs.pair(x, e) else F2Vec(qs.dim)) + (e if qs.pair(x, f) else F2Vec(qs.dim))
            projected.append(x)
        remaining = projected
        pairs.append((e, f))
    return pairs


def arf_invariant(qs: QuadSpace) -> int:
    return sum(q_eval(qs, e) * q_eval(qs, f) for e, f in symplectic_basis(qs)) & 1


def arf_type(qs: QuadSpace) -> int:
    """+1 for split (Arf 0), -1 for non-split (Arf 1).

    Counts zeros of q exhaustively when dim <= 16 and cross-checks against the
    symplectic-basis Arf invariant; above that only the latter runs.
    """
    eps = -1 if arf_invariant(qs) else 1
    if qs.dim <= EXHAUSTIVE_ARF_LIMIT:
        exhaustive = arf_type_exhaustive(qs)
        if exhaustive != eps:
            raise ArithmeticError("exhaustive and symplectic-basis Arf types disagree")
    return eps


def _require_nondegenerate_even(qs: QuadSpace):
    if qs.dim % 2 or rank(qs.gram) != qs.dim:
        raise ValueError("quadratic space is degenerate")


def quotient_by_radical(qs: QuadSpace, rad: Sequence[F2Vec]) -> tuple[QuadSpace, F2Mat]:
    """Nondegenerate quotient V / rad and the projection matrix.

    The quotient basis consists of the images of the ambient basis vectors
    that survive after eliminating, for each radical vector, its highest-index
    coordinate.  The projection is a (dim - |rad|) x dim matrix.
    """
    n = qs.dim
    for r in rad:
        if r.dim != n:
            raise ValueError("radical vector has wrong dimension")
        if not qs.gram.apply(r).is_zero():
            raise ValueError(f"{r} is not in the radical")
        if q_eval(qs, r):
            raise ValueError(f"q does not vanish on radical vector {r}")
    if span_rank(rad) != len(rad):
        raise ValueError("radical vectors are linearly dependent")
    true_rad = radical(qs)
    if len(true_rad) != len(rad):
        raise ValueError("given vectors do not span the radical")

    # echelon form keyed on the highest bit so the dropped coordinates are the top ones
    reduced: dict[int, int] = {}
    for r in rad:
        x = r.bits
        while x:
            h = x.bit_length() - 1
            if h in reduced:
                x ^= reduced[h]
            else:
                reduced[h] = x
                break
    for h in sorted(reduced):
        for h2 in reduced:
            if h2 != h and (reduced[h2] >> h) & 1:
                reduced[h2] ^= reduced[h]
    dropped = sorted(reduced)
    kept = [i for i in range(n) if i not in reduced]
    pos = {c: k for k, c in enumerate(kept)}

    def project(bits: int) -> int:
        for h in dropped:
            if (bits >> h) & 1:
                bits ^= reduced[h]
        out = 0
        for c, k in pos.items():
            if (bits >> c) & 1:
                out |= 1 << k
        return out

    m = len(kept)
    cols = [F2Vec(m, project(1 << i)) for i in range(n)]
    proj = F2Mat.from_columns(cols)
    gram = F2Mat(m, m, tuple(
        sum(qs.gram[kept[a], kept[b]] << b for b in range(m)) for a in range(m)))
    qdiag = F2Vec.from_list([qs.qdiag[c] for c in kept])
    quotient = QuadSpace(gram, qdiag)
    if rank(gram) != m:
        raise ArithmeticError("induced pairing on the quotient is degenerate")
    return quotient, proj
