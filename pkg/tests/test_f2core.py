import pytest
from hypothesis import given, settings, strategies as st

from oracles import gf2_matmul, gf2_rank, q_brute, zero_count
from trigmono.f2core import (
    F2Mat,
    F2Vec,
    QuadSpace,
    arf_invariant,
    arf_type,
    arf_type_exhaustive,
    count_zeros,
    in_span,
    inverse,
    mat_mul,
    q_eval,
    quotient_by_radical,
    radical,
    rank,
    rank_kernel,
    solve,
    span_rank,
    symplectic_basis,
)


@st.composite
def matrices(draw, max_dim=8):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.integers(0, (1 << c) - 1), min_size=r, max_size=r))
    return F2Mat(r, c, tuple(rows))


@st.composite
def quad_spaces(draw, max_dim=9):
    n = draw(st.integers(1, max_dim))
    upper = draw(st.lists(st.integers(0, 1), min_size=n * (n - 1) // 2,
                          max_size=n * (n - 1) // 2))
    m = [[0] * n for _ in range(n)]
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = m[j][i] = upper[k]
            k += 1
    qd = draw(st.integers(0, (1 << n) - 1))
    return QuadSpace(F2Mat.from_lists(m), F2Vec(n, qd))


def nondegenerate(qs: QuadSpace) -> bool:
    return qs.dim % 2 == 0 and rank(qs.gram) == qs.dim


# ---------------------------------------------------------------- vectors


def test_vector_basics():
    v = F2Vec.from_list([1, 0, 1, 1])
    assert v.support() == [0, 2, 3]
    assert v[2] == 1 and v[1] == 0
    assert (v + v).is_zero()
    assert v.dot(F2Vec.from_list([1, 1, 1, 0])) == 0
    assert F2Vec.indicator(4, [0, 2, 3]) == v
    with pytest.raises(IndexError):
        v[4]
    with pytest.raises(ValueError):
        v + F2Vec(3)
    with pytest.raises(ValueError):
        F2Vec(2, 4)


def test_matrix_indexing_and_transpose():
    m = F2Mat.from_lists([[1, 0, 1], [0, 1, 1]])
    assert m[0, 2] == 1 and m[1, 0] == 0
    assert m.transpose().to_lists() == [[1, 0], [0, 1], [1, 1]]
    assert m.apply(F2Vec.from_list([1, 1, 0])) == F2Vec.from_list([1, 1])
    with pytest.raises(ValueError):
        mat_mul(m, m)
    with pytest.raises(ValueError):
        F2Mat.from_lists([[1, 0], [1]])


# ---------------------------------------------------------------- linear algebra


@given(matrices(), matrices())
def test_mat_mul_matches_reference(a, b):
    if a.cols != b.rows:
        b = F2Mat(a.cols, b.cols, tuple(b.data[i % b.rows] for i in range(a.cols)))
    assert mat_mul(a, b).to_lists() == gf2_matmul(a.to_lists(), b.to_lists())


@given(matrices())
def test_rank_plus_nullity(m):
    r, kernel = rank_kernel(m)
    assert r == gf2_rank(m.to_lists())
    assert r + len(kernel) == m.cols
    for k in kernel:
        assert m.apply(k).is_zero()
    assert span_rank(kernel) == len(kernel)


@given(matrices(max_dim=7))
def test_inverse_and_solve(m):
    if m.rows != m.cols:
        return
    if rank(m) == m.cols:
        inv = inverse(m)
        assert mat_mul(m, inv) == F2Mat.identity(m.rows)
        assert mat_mul(inv, m) == F2Mat.identity(m.rows)
    else:
        with pytest.raises(ValueError):
            inverse(m)
    b = m.apply(F2Vec(m.cols, (1 << m.cols) - 1))
    x = solve(m, b)
    assert x is not None and m.apply(x) == b


def test_in_span():
    vs = [F2Vec.from_list([1, 1, 0]), F2Vec.from_list([0, 1, 1])]
    assert in_span(F2Vec.from_list([1, 0, 1]), vs)
    assert not in_span(F2Vec.from_list([1, 0, 0]), vs)


# ---------------------------------------------------------------- quadratic forms


def test_quad_space_rejects_bad_gram():
    with pytest.raises(ValueError):
        QuadSpace(F2Mat.from_lists([[0, 1], [0, 0]]), F2Vec(2))
    with pytest.raises(ValueError):
        QuadSpace(F2Mat.from_lists([[1, 0], [0, 0]]), F2Vec(2))


@given(quad_spaces(), st.data())
def test_q_polarization(qs, data):
    n = qs.dim
    x = F2Vec(n, data.draw(st.integers(0, (1 << n) - 1)))
    y = F2Vec(n, data.draw(st.integers(0, (1 << n) - 1)))
    assert (q_eval(qs, x + y) + q_eval(qs, x) + q_eval(qs, y)) % 2 == qs.pair(x, y)


@given(quad_spaces())
def test_q_matches_brute_force(qs):
    g = qs.gram.to_lists()
    qd = qs.qdiag.to_list()
    for x in range(1 << qs.dim):
        v = F2Vec(qs.dim, x)
        assert q_eval(qs, v) == q_brute(g, qd, v.to_list())


@given(quad_spaces())
def test_radical_is_kernel(qs):
    rad = radical(qs)
    assert rank(qs.gram) + len(rad) == qs.dim
    for r in rad:
        assert all(qs.pair(r, F2Vec.basis(qs.dim, i)) == 0 for i in range(qs.dim))


@settings(max_examples=60)
@given(quad_spaces(max_dim=10))
def test_arf_zero_count_formula(qs):
    if not nondegenerate(qs):
        return
    n = qs.dim // 2
    eps = arf_type(qs)
    assert count_zeros(qs) == zero_count(qs.gram.to_lists(), qs.qdiag.to_list())
    assert count_zeros(qs) == 2 ** (2 * n - 1) + eps * 2 ** (n - 1)
    assert arf_type_exhaustive(qs) == (-1 if arf_invariant(qs) else 1)


@given(quad_spaces(max_dim=10))
def test_symplectic_basis_is_hyperbolic(qs):
    if not nondegenerate(qs):
        return
    pairs = symplectic_basis(qs)
    flat = [v for p in pairs for v in p]
    assert span_rank(flat) == qs.dim
    for a, (e, f) in enumerate(pairs):
        assert qs.pair(e, f) == 1
        for b, (e2, f2) in enumerate(pairs):
            if a != b:
                assert qs.pair(e, e2) == qs.pair(e, f2) == qs.pair(f, e2) == qs.pair(f, f2) == 0


def test_arf_small_cases():
    h = F2Mat.from_lists([[0, 1], [1, 0]])
    assert arf_type(QuadSpace(h, F2Vec.from_list([0, 0]))) == 1
    assert arf_type(QuadSpace(h, F2Vec.from_list([1, 0]))) == 1
    assert arf_type(QuadSpace(h, F2Vec.from_list([1, 1]))) == -1
    with pytest.raises(ValueError):
        arf_type(QuadSpace(F2Mat.zeros(2, 2), F2Vec(2)))


def test_quotient_drops_highest_coordinates():
    # A4 path 1-2-3 plus an isolated vertex 4: radical spanned by e1+e3 and e4
    g = F2Mat.from_lists([[0, 1, 0, 0], [1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 0]])
    qs = QuadSpace(g, F2Vec.from_list([1, 1, 1, 0]))
    rad = [F2Vec.from_list([1, 0, 1, 0]), F2Vec.from_list([0, 0, 0, 1])]
    space, proj = quotient_by_radical(qs, rad)
    assert space.dim == 2 and proj.rows == 2 and proj.cols == 4
    # e3 = e1 modulo the radical, e4 = 0
    assert proj.apply(F2Vec.basis(4, 2)) == proj.apply(F2Vec.basis(4, 0))
    assert proj.apply(F2Vec.basis(4, 3)).is_zero()
    for x in range(16):
        v = F2Vec(4, x)
        assert q_eval(space, proj.apply(v)) == q_eval(qs, v)


def test_quotient_validates_input():
    g = F2Mat.from_lists([[0, 1, 0], [1, 0, 1], [0, 1, 0]])
    qs = QuadSpace.all_ones(g)
    r = F2Vec.from_list([1, 0, 1])
    with pytest.raises(ValueError, match="not in the radical"):
        quotient_by_radical(qs, [F2Vec.from_list([1, 0, 0])])
    with pytest.raises(ValueError, match="do not span"):
        quotient_by_radical(qs, [])
    with pytest.raises(ValueError, match="q does not vanish"):
        quotient_by_radical(QuadSpace(g, F2Vec.from_list([1, 0, 0])), [r])
    space, _ = quotient_by_radical(qs, [r])
    assert space.dim == 2
