from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from lietrip.exactlin import (
    Field, Matrix, QQ, Subspace, kernel_basis, quotient, rank, rref, solve,
    solve_with_certificate, unit_vec, vec_is_zero, vec_sub,
)

F2 = Field(2)
F3 = Field(3)
F5 = Field(5)
FIELDS = [QQ, F2, F3, F5]


def test_field_rejects_non_prime():
    with pytest.raises(ValueError):
        Field(6)
    with pytest.raises(ValueError):
        Field(1)


def test_field_of_and_fmt():
    assert QQ.of("2/4") == Fraction(1, 2)
    assert F5.of(-1) == 4
    assert F5.of("7") == 2
    assert F5.of(Fraction(1, 2)) == 3  # 2 * 3 = 6 = 1 mod 5
    assert QQ.fmt(Fraction(-3, 4)) == "-3/4"
    assert Field.from_tag("Fp:7") == Field(7)
    assert Field.from_tag("Q") == QQ
    with pytest.raises(ValueError):
        Field.from_tag("R")


def test_rref_identity():
    m = Matrix.identity(QQ, 2)
    red, pivots = rref(m)
    assert red == m
    assert pivots == (0, 1)


def test_rref_zero():
    m = Matrix.zeros(QQ, 3, 3)
    red, pivots = rref(m)
    assert red == m
    assert pivots == ()


def test_rref_hand_example():
    # Hand row-reduction: [[2,4],[1,2]] -> R2 -= R1/2, R1 /= 2.
    m = Matrix.make(QQ, [[2, 4], [1, 2]])
    red, pivots = rref(m)
    assert red.to_lists() == [[1, 2], [0, 0]]
    assert pivots == (0,)


def test_kernel_identity_and_zero():
    assert kernel_basis(Matrix.identity(QQ, 4)).dim == 0
    k = kernel_basis(Matrix.zeros(QQ, 2, 3))
    assert k == Subspace.full(QQ, 3)


def test_kernel_f2_by_enumeration():
    m = Matrix.make(F2, [[1, 1]])
    k = kernel_basis(m)
    # Independent oracle: all four vectors of F_2^2.
    expected = sorted(v for v in product([0, 1], repeat=2)
                      if (v[0] + v[1]) % 2 == 0 and any(v))
    assert [list(r) for r in k.basis.entries] == [list(v) for v in expected[:1]]
    assert k.dim == 1
    assert k.contains((1, 1))


def test_solve_examples():
    m = Matrix.identity(QQ, 3)
    v = (Fraction(1), Fraction(2), Fraction(3))
    assert solve(m, v) == v

    inconsistent = Matrix.make(QQ, [[1, 1], [1, 1]])
    assert solve(inconsistent, (QQ.of(1), QQ.of(2))) is None
    sol, cert = solve_with_certificate(inconsistent, (QQ.of(1), QQ.of(2)))
    assert sol is None
    # cert * m = 0 and cert * rhs = 1
    assert vec_is_zero(QQ, tuple(cert[0] * a + cert[1] * b for a, b in zip(*inconsistent.entries)))
    assert cert[0] * 1 + cert[1] * 2 == 1

    under = Matrix.make(QQ, [[1, 1]])
    x = solve(under, (QQ.of(1),))
    assert x == (Fraction(1), Fraction(0))
    assert under.matvec(x) == (Fraction(1),)

    with pytest.raises(ValueError):
        solve(under, (QQ.of(1), QQ.of(2)))


def test_subspace_sum_intersect_examples():
    x_axis = Subspace.span(QQ, 2, [(QQ.of(1), QQ.of(0))])
    y_axis = Subspace.span(QQ, 2, [(QQ.of(0), QQ.of(1))])
    assert x_axis.sum(y_axis) == Subspace.full(QQ, 2)
    assert x_axis.intersect(y_axis).dim == 0


def test_quotient_example():
    a = Subspace.span(QQ, 3, [(QQ.of(1), QQ.of(1), QQ.of(1))])
    q = quotient(3, a)
    assert q.dim == 2
    assert vec_is_zero(QQ, q.projection.matvec((QQ.of(1), QQ.of(1), QQ.of(1))))
    assert q.projection.matmul(q.section) == Matrix.identity(QQ, 2)


def _matrices(field, max_dim=5):
    dims = st.tuples(st.integers(1, max_dim), st.integers(1, max_dim))
    return dims.flatmap(lambda rc: st.lists(
        st.lists(st.integers(-4, 4), min_size=rc[1], max_size=rc[1]),
        min_size=rc[0], max_size=rc[0],
    ).map(lambda rows: Matrix.make(field, rows)))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(_matrices))
def test_rank_nullity(m):
    assert rank(m) + kernel_basis(m).dim == m.cols


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(_matrices))
def test_rref_idempotent(m):
    red, pivots = rref(m)
    again, pivots2 = rref(red)
    assert again == red
    assert pivots2 == pivots
    assert all(a < b for a, b in zip(pivots, pivots[1:]))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(_matrices))
def test_kernel_vectors_annihilated(m):
    k = kernel_basis(m)
    for v in k.basis.entries:
        assert vec_is_zero(m.field, m.matvec(v))


def _subspace_pair(field, ambient):
    vectors = st.lists(
        st.lists(st.integers(-3, 3), min_size=ambient, max_size=ambient),
        min_size=0, max_size=ambient)
    return st.tuples(vectors, vectors).map(
        lambda vw: (Subspace.span(field, ambient, [tuple(field.of(x) for x in v) for v in vw[0]]),
                    Subspace.span(field, ambient, [tuple(field.of(x) for x in v) for v in vw[1]])))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(
    lambda f: st.integers(1, 8).flatmap(lambda n: _subspace_pair(f, n))))
def test_grassmann_identity(pair):
    a, b = pair
    assert a.dim + b.dim == a.sum(b).dim + a.intersect(b).dim
    inter = a.intersect(b)
    assert a.contains_subspace(inter) and b.contains_subspace(inter)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(
    lambda f: st.integers(1, 6).flatmap(
        lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n),
                           min_size=0, max_size=n).map(
            lambda vs: (f, n, Subspace.span(f, n, [tuple(f.of(x) for x in v) for v in vs]))))))
def test_quotient_section_property(data):
    field, n, a = data
    q = quotient(n, a)
    assert q.projection.matmul(q.section) == Matrix.identity(field, q.dim)
    for i in range(n):
        v = unit_vec(field, n, i)
        back = q.section.matvec(q.projection.matvec(v))
        assert a.contains(vec_sub(field, back, v))
    for v in a.basis.entries:
        assert vec_is_zero(field, q.projection.matvec(v))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(
    lambda f: _matrices(f).flatmap(
        lambda m: st.lists(st.integers(-3, 3), min_size=m.cols, max_size=m.cols)
        .map(lambda x: (m, tuple(f.of(v) for v in x))))))
def test_solve_roundtrip(data):
    m, x = data
    rhs = m.matvec(x)
    sol = solve(m, rhs)
    assert sol is not None
    assert m.matvec(sol) == rhs


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(
    lambda f: _matrices(f).flatmap(
        lambda m: st.lists(st.integers(-3, 3), min_size=m.rows, max_size=m.rows)
        .map(lambda b: (m, tuple(f.of(v) for v in b))))))
def test_solve_or_certificate(data):
    m, rhs = data
    sol, cert = solve_with_certificate(m, rhs)
    if sol is not None:
        assert m.matvec(sol) == rhs
        assert cert is None
    else:
        F = m.field
        mt = m.transpose()
        assert vec_is_zero(F, mt.matvec(cert))
        prod = F.zero()
        for c, b in zip(cert, rhs):
            prod = F.add(prod, F.mul(c, b))
        assert prod == F.one()
