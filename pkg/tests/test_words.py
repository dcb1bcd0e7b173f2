import pytest
from hypothesis import given, strategies as st

from trigmono.diagrams import T_graph, t_diagram
from trigmono.words import (
    Presentation,
    Substitution,
    apply_substitution,
    big_delta,
    bridge_pairs,
    commutator,
    delta1_T_word,
    delta_words,
    format_word,
    free_reduce,
    generator_change,
    identity_substitution,
    inverse,
    mul,
    parse_word,
    power,
    relator,
    reorder_word,
    sigma_index,
    trigonal_presentation,
    weierstrass_presentation,
)

letters = st.integers(-6, 6).filter(bool)
words = st.lists(letters, max_size=30).map(tuple)


@given(words)
def test_free_reduce_idempotent_and_reduced(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert all(r[i] != -r[i + 1] for i in range(len(r) - 1))


@given(words, words)
def test_inverse_cancels(u, v):
    assert mul(u, inverse(u)) == ()
    assert inverse(mul(u, v)) == mul(inverse(v), inverse(u))


@given(words, st.integers(-4, 4))
def test_power_inverse(w, k):
    assert mul(power(w, k), power(w, -k)) == ()


def test_commutator_and_relator():
    assert commutator((1,), (2,)) == (1, 2, -1, -2)
    assert relator((1, 2, 1), (2, 1, 2)) == (1, 2, 1, -2, -1, -2)
    with pytest.raises(ValueError):
        free_reduce((1, 0))


@given(words)
def test_format_parse_roundtrip(w):
    w = free_reduce(w)
    assert parse_word(format_word(w, "T"), "T") == w


def test_format_examples():
    assert format_word((1, 2, -3)) == "t1*t2*t3^-1"
    assert format_word(()) == "1"
    with pytest.raises(ValueError):
        parse_word("t0")


def test_delta_words_g1():
    d0, d1, a, b = delta_words(1)
    assert d0 == (1, 2, 3, 4)
    assert d1 == (3, 4, 1, 2)
    assert a == (3, 1) and b == (4, 2)


@pytest.mark.parametrize("g", [1, 4, 7])
def test_trigonal_presentation_shape(g):
    p = trigonal_presentation(g)
    d = t_diagram(g)
    assert p.ngens == 2 * g + 2
    assert len(p.by_family("braid")) == len(d.edges)
    assert len(p.by_family("commute")) == len(d.non_edges())
    assert len(p.by_family("chain")) == 2 * g
    assert len(p.by_family("global")) == 2
    assert [n for n, _ in p.by_family("quotient")] == ["quotient_d0d1cubed", f"quotient_d0pow{g + 2}"]
    assert p.families() == ["braid", "commute", "chain", "global", "quotient"]


@pytest.mark.parametrize("g", [1, 2, 4])
def test_weierstrass_presentation_shape(g):
    p = weierstrass_presentation(g)
    assert p.ngens == 2 * g + 2 and p.prefix == "T"
    assert len(p.by_family("twist")) == 2 * g + 2
    assert len(p.by_family("braid")) == len(T_graph(g).edges)
    assert big_delta(g) == tuple(range(2 * g + 2, 0, -1))


def test_presentation_validates_letters():
    with pytest.raises(ValueError):
        Presentation(2, (("r", (3,)),))
    with pytest.raises(ValueError):
        Presentation(2, (("r", (1,)), ("r", (2,))))


def test_sigma_index_g4_is_permutation():
    assert sorted(sigma_index(4, i) for i in range(1, 11)) == list(range(1, 11))
    assert [sigma_index(4, i) for i in range(1, 11)] == [10, 5, 4, 9, 3, 8, 7, 2, 1, 6]


@pytest.mark.parametrize("g", [1, 4, 7, 10])
def test_sigma_index_bijective(g):
    n = 2 * g + 2
    assert sorted(sigma_index(g, i) for i in range(1, n + 1)) == list(range(1, n + 1))


@pytest.mark.parametrize("g", [1, 4, 7, 10])
def test_bridge_word_identities(g):
    sub = generator_change(g)
    for t, T in bridge_pairs(g):
        assert apply_substitution(sub, t) == T
    d0, d1, _, _ = delta_words(g)
    assert sub(d0) == reorder_word(g)
    assert sub(d1) == delta1_T_word(g)


@given(words)
def test_substitution_is_homomorphism(w):
    sub = generator_change(1)
    w = tuple(a for a in w if abs(a) <= 4)
    assert sub(inverse(w)) == inverse(sub(w))
    assert identity_substitution(4)(w) == free_reduce(w)


def test_substitution_domain():
    with pytest.raises(KeyError):
        apply_substitution(Substitution({1: (1,)}), (2,))
