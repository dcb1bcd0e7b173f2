"""Free-group words, the two presentations and the generator change between them.

A word is a tuple of nonzero ints: ``+i`` is the i-th generator, ``-i`` its
inverse.  Relators are stored freely reduced as ``lhs * rhs^-1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .diagrams import T_graph, check_genus, check_trigonal_genus, t_diagram, triangles

Word = tuple[int, ...]


def free_reduce(w: Sequence[int]) -> Word:
    out: list[int] = []
    for a in w:
        if a == 0:
            raise ValueError("zero is not a letter")
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def inverse(w: Sequence[int]) -> Word:
    return tuple(-a for a in reversed(w))


def mul(*ws: Sequence[int]) -> Word:
    return free_reduce([a for w in ws for a in w])


def power(w: Sequence[int], k: int) -> Word:
    if k < 0:
        return power(inverse(w), -k)
    return free_reduce(list(w) * k)


def commutator(u: Sequence[int], v: Sequence[int]) -> Word:
    """u v u^-1 v^-1."""
    return mul(u, v, inverse(u), inverse(v))


def relator(lhs: Sequence[int], rhs: Sequence[int] = ()) -> Word:
    """The word lhs * rhs^-1, which is trivial iff lhs = rhs."""
    return mul(lhs, inverse(rhs))


@dataclass(frozen=True)
class Presentation:
    ngens: int
    relators: tuple[tuple[str, Word], ...]
    prefix: str = "t"

    def __post_init__(self):
        names = [n for n, _ in self.relators]
        if len(set(names)) != len(names):
            raise ValueError("relator names must be unique")
        for name, w in self.relators:
            for a in w:
                if not 1 <= abs(a) <= self.ngens:
                    raise ValueError(f"relator {name} uses letter {a} outside 1..{self.ngens}")

    def by_family(self, family: str) -> list[tuple[str, Word]]:
        return [(n, w) for n, w in self.relators if n.split("_")[0] == family]

    def families(self) -> list[str]:
        seen: list[str] = []
        for n, _ in self.relators:
            f = n.split("_")[0]
            if f not in seen:
                seen.append(f)
        return seen


# ---------------------------------------------------------------- trigonal side


def delta_words(g: int) -> tuple[Word, Word, Word, Word]:
    """(delta0, delta1, A, B) in the t-generators.

    delta0 = t1 t2 t3 t4 ... t_{2g+1} t_{2g+2}
    delta1 = t_{2g+1} t_{2g+2} t_{2g-1} t_{2g} ... t1 t2
    A = t_{2g+1} t_{2g-1} ... t3 t1,  B = t_{2g+2} t_{2g} ... t4 t2
    """
    check_trigonal_genus(g)
    n = 2 * g + 2
    d0 = tuple(range(1, n + 1))
    d1 = tuple(a for k in range(n - 1, 0, -2) for a in (k, k + 1))
    a = tuple(range(n - 1, 0, -2))
    b = tuple(range(n, 0, -2))
    return d0, d1, a, b


def trigonal_presentation(g: int) -> Presentation:
    d = t_diagram(g)
    n = d.n
    rels: list[tuple[str, Word]] = []
    for i, j in d.sorted_edges():
        rels.append((f"braid_{i}_{j}", relator((i, j, i), (j, i, j))))
    for i, j in d.non_edges():
        rels.append((f"commute_{i}_{j}", commutator((i,), (j,))))
    for i in range(1, n - 1):
        j, k = i + 1, i + 2
        conj = (i, j, -i)
        rels.append((f"chain_{i}_{j}_{k}", commutator(conj, (k,))))
    d0, d1, a, b = delta_words(g)
    rels.append(("global_A", commutator(d0, a)))
    rels.append(("global_B", commutator(d0, b)))
    rels.append(("quotient_d0d1cubed", power(mul(d0, d1), 3)))
    rels.append((f"quotient_d0pow{g + 2}", power(d0, g + 2)))
    return Presentation(n, tuple(rels), "t")


# ---------------------------------------------------------------- Weierstrass side


def big_delta(g: int) -> Word:
    """T_{2g+2} T_{2g+1} ... T_2 T_1."""
    check_genus(g)
    return tuple(range(2 * g + 2, 0, -1))


def weierstrass_presentation(g: int) -> Presentation:
    d = T_graph(g)
    rels: list[tuple[str, Word]] = []
    for i, j in d.non_edges():
        rels.append((f"commute_{i}_{j}", commutator((i,), (j,))))
    for i, j in d.sorted_edges():
        rels.append((f"braid_{i}_{j}", relator((i, j, i), (j, i, j))))
    for i, j, k in triangles(d):
        rels.append((f"triangle_{i}_{j}_{k}", relator((i, j, k, i), (j, k, i, j))))
    delta = big_delta(g)
    for j in range(1, d.n + 1):
        lhs = power(mul((-j,), delta), g + 1)
        rhs = power(mul(delta, (-j,)), g + 1)
        rels.append((f"twist_{j}", relator(lhs, rhs)))
    return Presentation(d.n, tuple(rels), "T")


# ---------------------------------------------------------------- generator change


@dataclass(frozen=True)
class Substitution:
    images: Mapping[int, Word] = field(default_factory=dict)

    def __call__(self, w: Sequence[int]) -> Word:
        return apply_substitution(self, w)


def apply_substitution(s: Substitution, w: Sequence[int]) -> Word:
    out: list[int] = []
    for a in w:
        if abs(a) not in s.images:
            raise KeyError(f"letter {a} outside the substitution's domain")
        img = s.images[abs(a)]
        out.extend(img if a > 0 else inverse(img))
    return free_reduce(out)


def identity_substitution(n: int) -> Substitution:
    return Substitution({i: (i,) for i in range(1, n + 1)})


def sigma_index(g: int, i: int) -> int:
    """Index j of the T-generator sigma_j attached to t_i by the mod-6 table."""
    M = (g + 2) // 3
    r = i % 6
    if r == 1:
        return 6 * M - (i + 3) // 2
    if r == 2:
        return 3 * M - i // 2
    if r == 3:
        return 3 * M - (i + 1) // 2
    if r == 4:
        return 6 * M - (i + 2) // 2
    if r == 5:
        return 3 * M - (i + 1) // 2
    return 6 * M - (i + 2) // 2


def generator_change(g: int) -> Substitution:
    """t_i as words in T_1..T_{2g+2}; sigma_j is read as T_j."""
    check_trigonal_genus(g)
    n = 2 * g + 2
    direct = {i: (sigma_index(g, i),) for i in range(1, n + 1) if i % 6 in (0, 1, 2, 3)}
    images = dict(direct)
    for i in range(1, n + 1):
        j = sigma_index(g, i)
        if i % 6 == 4:
            prev = direct[i - 1]
            images[i] = mul(inverse(prev), (j,), prev)
        elif i % 6 == 5:
            nxt = direct[i + 1]
            images[i] = mul(nxt, (j,), inverse(nxt))
    for i, w in images.items():
        if any(not 1 <= abs(a) <= n for a in w):
            raise ArithmeticError(f"image of t{i} leaves the generator range")
    return Substitution(dict(sorted(images.items())))


def bridge_pairs(g: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Pairs (t_{2i-1}, t_{2i}) <-> (T_{g+1+j}, T_j) with j = g + 2 - i."""
    check_trigonal_genus(g)
    out = []
    for i in range(1, g + 2):
        j = g + 2 - i
        out.append(((2 * i - 1, 2 * i), (g + 1 + j, j)))
    return out


def reorder_word(g: int) -> Word:
    """T_{2g+2} T_{g+1} T_{2g+1} T_g ... T_{g+3} T_2 T_{g+2} T_1."""
    check_genus(g)
    return tuple(a for j in range(g + 1, 0, -1) for a in (g + 1 + j, j))


def delta1_T_word(g: int) -> Word:
    """T_{g+2} T_1 T_{g+3} T_2 ... T_{2g+2} T_{g+1}."""
    check_genus(g)
    return tuple(a for j in range(1, g + 2) for a in (g + 1 + j, j))


# ---------------------------------------------------------------- formatting


def format_word(w: Sequence[int], prefix: str = "t") -> str:
    if not w:
        return "1"
    return "*".join(f"{prefix}{a}" if a > 0 else f"{prefix}{-a}^-1" for a in w)


def parse_word(text: str, prefix: str = "t") -> Word:
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    for tok in text.split("*"):
        tok = tok.strip()
        if not tok.startswith(prefix):
            raise ValueError(f"bad letter {tok!r}")
        body = tok[len(prefix):]
        neg = body.endswith("^-1")
        if neg:
            body = body[:-3]
        k = int(body)
        if k <= 0:
            raise ValueError(f"bad letter {tok!r}")
        out.append(-k if neg else k)
    return tuple(out)
