from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from cexkit.exact import Matrix
from cexkit.quadratic import (QuadraticNumber, field_inverse, field_matmul, field_rank, field_solve,
                              squarefree_part)

DS = (-1, 2, -2, 3, -3, 6, -6)
q = st.builds(F, st.integers(-5, 5), st.integers(1, 3))


def numbers(d):
    return st.builds(lambda a, b: QuadraticNumber(a, b, d), q, q)


@pytest.mark.parametrize("value,expected", [(12, 3), (-8, -2), (F(9, 2), 2), (F(-1, 27), -3), (1, 1)])
def test_squarefree_part(value, expected):
    assert squarefree_part(value) == expected


def test_rejects_non_squarefree():
    with pytest.raises(ValueError):
        QuadraticNumber(1, 1, 4)
    with pytest.raises(ValueError):
        QuadraticNumber(1, 1, 1)


@given(st.sampled_from(DS).flatmap(lambda d: st.tuples(numbers(d), numbers(d), numbers(d))))
def test_field_axioms(xyz):
    x, y, z = xyz
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    if x:
        assert x * x.inverse() == 1
        assert (y / x) * x == y
    assert x * x.conjugate() == x.norm()


def test_roots():
    i = QuadraticNumber(0, 1, -1)
    assert i * i == -1
    r2 = QuadraticNumber(0, 1, 2)
    assert r2 ** 2 == 2 and r2 ** -2 == F(1, 2)
    assert str(QuadraticNumber(1, -2, -1)) == "1-2·i"
    assert str(QuadraticNumber(0, 1, 6)) == "√6"


def realify(rows, d):
    """The 2n x 2m rational matrix of the Q-linear map z -> A z on Q(√d)^m."""
    out = []
    for r in rows:
        top, bot = [], []
        for x in r:
            a, b = (x.a, x.b) if isinstance(x, QuadraticNumber) else (F(x), F(0))
            top += [a, d * b]
            bot += [b, a]
        out += [top, bot]
    return out


@given(st.sampled_from(DS).flatmap(
    lambda d: st.tuples(st.just(d), st.lists(st.lists(numbers(d), min_size=3, max_size=3),
                                              min_size=1, max_size=3))))
def test_rank_against_realification(case):
    d, rows = case
    rank = field_rank(rows, 3)
    assert 2 * rank == Matrix.from_rows(realify(rows, d)).rank()


@given(st.sampled_from(DS).flatmap(
    lambda d: st.tuples(st.lists(st.lists(numbers(d), min_size=3, max_size=3), min_size=3, max_size=3),
                        st.lists(numbers(d), min_size=3, max_size=3))))
def test_solve_and_inverse(case):
    rows, rhs = case
    sol, kernel = field_solve(rows, rhs, 3)
    if sol is not None:
        for r, b in zip(rows, rhs):
            assert sum((x * y for x, y in zip(r, sol)), F(0)) == b
        for v in kernel:
            assert all(sum((x * y for x, y in zip(r, v)), F(0)) == 0 for r in rows)
    if field_rank(rows, 3) == 3:
        inv = field_inverse(rows)
        prod = field_matmul(rows, inv)
        assert all(prod[i][j] == int(i == j) for i in range(3) for j in range(3))
    else:
        with pytest.raises(ZeroDivisionError):
            field_inverse(rows)
