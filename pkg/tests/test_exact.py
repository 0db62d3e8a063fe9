from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, strategies as st

from cexkit.exact import (Matrix, ParamPoly, Subspace, format_scalar, nullspace, quotient_reps, row_reduce,
                          scalar, solve)

small = st.integers(-4, 4).map(F)
fracs = st.builds(F, st.integers(-6, 6), st.integers(1, 4))


def matrices(max_rows=5, max_cols=5, entries=small):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r)))


def to_sympy(rows):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows])


def test_scalar_parsing():
    assert scalar("6/4") == F(3, 2)
    assert scalar(" -2 ") == F(-2)
    assert format_scalar(F(-3, 6)) == "-1/2"
    assert format_scalar(5) == "5/1"
    with pytest.raises(TypeError):
        scalar(True)
    with pytest.raises(TypeError):
        scalar(0.5)


@given(matrices(entries=fracs))
def test_rank_matches_sympy(rows):
    assert Matrix.from_rows(rows).rank() == to_sympy(rows).rank()


@given(matrices(entries=fracs))
def test_row_reduce_is_sympy_rref(rows):
    ours = row_reduce(Matrix.from_rows(rows))
    red, piv = to_sympy(rows).rref()
    expect = [tuple(F(int(x.p), int(x.q)) for x in red.row(i)) for i in range(len(piv))]
    assert [tuple(v) for v in ours.vectors()] == expect


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n),
                                                     min_size=n, max_size=n)))
def test_inverse(rows):
    m = Matrix.from_rows(rows)
    if to_sympy(rows).det() == 0:
        assert not m.is_invertible()
        return
    inv = m.inverse()
    assert m @ inv == Matrix.identity(len(rows))
    assert inv @ m == Matrix.identity(len(rows))


@given(matrices())
def test_nullspace(rows):
    m = Matrix.from_rows(rows)
    ns = nullspace(m)
    assert ns.dim == m.cols - m.rank()
    for v in ns.vectors():
        assert not any(m.apply(v))


@given(matrices(), st.lists(small, min_size=5, max_size=5))
def test_solve(rows, rhs):
    m = Matrix.from_rows(rows)
    b = rhs[:m.rows]
    x = solve(m, b)
    consistent = Matrix.from_rows([list(r) + [v] for r, v in zip(rows, b)]).rank() == m.rank()
    if consistent:
        assert m.apply(x) == list(b)
    else:
        assert x is None


@given(matrices(max_cols=4), matrices(max_cols=4))
def test_intersection_dimension(r1, r2):
    w = 4
    u = Subspace.span([list(r) + [F(0)] * (w - len(r)) for r in r1], w)
    v = Subspace.span([list(r) + [F(0)] * (w - len(r)) for r in r2], w)
    both = u.intersect(v)
    assert both.dim == u.dim + v.dim - (u + v).dim
    assert u.contains_subspace(both) and v.contains_subspace(both)


@given(matrices(max_cols=4))
def test_quotient_reps(rows):
    whole = Subspace.full(4)
    sub = Subspace.span([list(r) + [F(0)] * (4 - len(r)) for r in rows], 4)
    reps = quotient_reps(whole, sub)
    assert len(reps) == 4 - sub.dim
    assert (sub + Subspace.span(reps, 4)).dim == 4


def test_subspace_canonical_form_is_basis_independent():
    a = Subspace.span([[1, 2, 3], [0, 1, 1]], 3)
    b = Subspace.span([[1, 3, 4], [2, 5, 7]], 3)
    assert a == b and hash(a) == hash(b)
    assert a.complement_reps() == [(F(0), F(0), F(1))]


polys = st.lists(st.tuples(st.tuples(st.integers(0, 2), st.integers(0, 2)), small), max_size=4).map(
    lambda terms: sum((ParamPoly.const(c) * ParamPoly.var("x") ** i * ParamPoly.var("y") ** j
                       for (i, j), c in terms), ParamPoly()))


@given(polys, polys, polys)
def test_polynomial_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert (p - p).is_zero()


@given(polys, polys, fracs, fracs)
def test_evaluation_is_a_homomorphism(p, q, x, y):
    pt = {"x": x, "y": y}
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
    assert (p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt)


def test_substitute_polynomial():
    x, y = ParamPoly.var("x"), ParamPoly.var("y")
    p = x ** 2 + 3 * y
    assert p.substitute({"x": y + 1}) == y ** 2 + 5 * y + 1
    assert str(x ** 2 - 2 * x * y) == "x^2 - 2*x*y"
