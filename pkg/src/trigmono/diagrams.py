"""Intersection diagrams of the t- and T-generators.

Vertices are labelled 1..n.  The indicator vector of vertex ``i`` has
coordinate ``i - 1`` set.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .f2core import F2Mat, F2Vec, QuadSpace


def check_trigonal_genus(g: int):
    if not isinstance(g, int) or g < 1 or g % 3 != 1:
        raise ValueError(f"genus must satisfy g >= 1 and g = 1 mod 3, got {g!r}")


def check_genus(g: int):
    if not isinstance(g, int) or g < 1:
        raise ValueError(f"genus must be a positive integer, got {g!r}")


@dataclass(frozen=True)
class Diagram:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.edges:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"bad edge {(i, j)} for {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Diagram":
        norm = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            e = (min(i, j), max(i, j))
            if e in norm:
                raise ValueError(f"duplicate edge {e}")
            norm.add(e)
        return cls(n, frozenset(norm))

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def non_edges(self) -> list[tuple[int, int]]:
        return [e for e in combinations(range(1, self.n + 1), 2) if e not in self.edges]


def t_diagram(g: int) -> Diagram:
    """Vertices i, j joined iff |i - j| is 1 or 2, on 2g + 2 vertices."""
    check_trigonal_genus(g)
    n = 2 * g + 2
    return Diagram.from_edges(n, [(i, i + d) for d in (1, 2) for i in range(1, n + 1 - d)])


def T_graph(g: int) -> Diagram:
    """Two rows of g + 1 vertices: bottom 1..g+1, top g+2..2g+2.

    Edges are the two row paths, the verticals {i, g+1+i} and the rising
    diagonals {i, g+2+i}.
    """
    check_genus(g)
    edges = []
    for i in range(1, g + 1):
        edges.append((i, i + 1))
        edges.append((g + 1 + i, g + 2 + i))
        edges.append((i, g + 2 + i))
    for i in range(1, g + 2):
        edges.append((i, g + 1 + i))
    return Diagram.from_edges(2 * g + 2, edges)


def gram_mod2(d: Diagram) -> F2Mat:
    rows = [0] * d.n
    for i, j in d.edges:
        rows[i - 1] |= 1 << (j - 1)
        rows[j - 1] |= 1 << (i - 1)
    return F2Mat(d.n, d.n, tuple(rows))


def quad_space(d: Diagram) -> QuadSpace:
    """The diagram's pairing with q = 1 on every vertex."""
    return QuadSpace.all_ones(gram_mod2(d))


def indicator(d: Diagram, support: Iterable[int]) -> F2Vec:
    support = list(support)
    for v in support:
        if not 1 <= v <= d.n:
            raise ValueError(f"vertex {v} outside 1..{d.n}")
    return F2Vec.indicator(d.n, [v - 1 for v in set(support)])


def subgraph_euler(d: Diagram, support: Iterable[int]) -> int:
    """Parity of vertices plus edges of the full subgraph on ``support``."""
    s = set(support)
    for v in s:
        if not 1 <= v <= d.n:
            raise ValueError(f"vertex {v} outside 1..{d.n}")
    inner = sum(1 for i, j in d.edges if i in s and j in s)
    return (len(s) + inner) % 2


def radical_supports(g: int) -> tuple[list[int], list[int]]:
    check_trigonal_genus(g)
    n = 2 * g + 2
    s1 = [i for i in range(1, n + 1) if i % 3 == 1]
    s2 = [i for i in range(1, 2 * g + 2) if i % 6 in (1, 2, 3)]
    return s1, s2


def radical_generators(g: int) -> tuple[F2Vec, F2Vec]:
    """The two explicit generators of the radical of the t-diagram pairing."""
    d = t_diagram(g)
    s1, s2 = radical_supports(g)
    return indicator(d, s1), indicator(d, s2)


def triangles(d: Diagram) -> list[tuple[int, int, int]]:
    nbrs: dict[int, set[int]] = {v: set() for v in range(1, d.n + 1)}
    for i, j in d.edges:
        nbrs[i].add(j)
        nbrs[j].add(i)
    out = []
    for i, j in d.sorted_edges():
        for k in sorted(nbrs[i] & nbrs[j]):
            if k > j:
                out.append((i, j, k))
    return sorted(out)
