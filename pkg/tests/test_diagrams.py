import pytest
from hypothesis import given, strategies as st

from oracles import gf2_rank, q_brute
from trigmono.diagrams import (
    Diagram,
    T_graph,
    gram_mod2,
    indicator,
    quad_space,
    radical_generators,
    radical_supports,
    subgraph_euler,
    t_diagram,
    triangles,
)
from trigmono.f2core import F2Vec, q_eval, radical, span_rank

TRIGONAL = [1, 4, 7, 10, 13]


def test_t_diagram_g1_edges():
    d = t_diagram(1)
    assert d.sorted_edges() == [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]
    assert d.non_edges() == [(1, 4)]


def test_T_graph_g1_edges():
    d = T_graph(1)
    # bottom 1-2, top 3-4, verticals 1-3, 2-4, diagonal 1-4
    assert d.sorted_edges() == [(1, 2), (1, 3), (1, 4), (2, 4), (3, 4)]


@pytest.mark.parametrize("g", [1, 2, 3, 4, 7])
def test_T_graph_edge_count(g):
    assert len(T_graph(g).edges) == 4 * g + 1


@pytest.mark.parametrize("bad", [0, 2, 3, 5, -2])
def test_trigonal_genus_rejected(bad):
    with pytest.raises(ValueError):
        t_diagram(bad)


def test_from_edges_rejects_loops_and_duplicates():
    with pytest.raises(ValueError):
        Diagram.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Diagram.from_edges(3, [(1, 2), (2, 1)])
    with pytest.raises(ValueError):
        Diagram.from_edges(3, [(1, 4)])


@pytest.mark.parametrize("g", TRIGONAL)
def test_gram_ranks(g):
    for d in (t_diagram(g), T_graph(g)):
        m = gram_mod2(d)
        assert m.is_symmetric()
        assert gf2_rank(m.to_lists()) == 2 * g


@pytest.mark.parametrize("g", TRIGONAL)
def test_radical_generators_span_radical(g):
    qs = quad_space(t_diagram(g))
    r1, r2 = radical_generators(g)
    rad = radical(qs)
    assert len(rad) == 2
    assert span_rank([*rad, r1, r2]) == 2
    assert q_eval(qs, r1) == q_eval(qs, r2) == 0


def test_radical_supports_g4():
    s1, s2 = radical_supports(4)
    assert s1 == [1, 4, 7, 10]
    assert s2 == [1, 2, 3, 7, 8, 9]


@given(st.sampled_from([1, 4, 7]), st.data())
def test_q_is_euler_number_of_full_subgraph(g, data):
    d = t_diagram(g)
    support = data.draw(st.sets(st.integers(1, d.n)))
    qs = quad_space(d)
    v = indicator(d, support)
    assert q_eval(qs, v) == subgraph_euler(d, support)
    assert q_eval(qs, v) == q_brute(gram_mod2(d).to_lists(), [1] * d.n, v.to_list())


def test_indicator_is_one_based():
    d = t_diagram(1)
    assert indicator(d, [1, 4]) == F2Vec.from_list([1, 0, 0, 1])
    with pytest.raises(ValueError):
        indicator(d, [0])


def test_triangles():
    assert triangles(t_diagram(1)) == [(1, 2, 3), (2, 3, 4)]
    assert triangles(T_graph(1)) == [(1, 2, 4), (1, 3, 4)]
