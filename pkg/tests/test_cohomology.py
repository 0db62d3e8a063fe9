from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, strategies as st

from cexkit.algebra import FormatError, product
from cexkit.catalog import catalog_algebra
from cexkit.cohomology import (ClassReducer, Cocycle, CohomologyError, cocycle_annihilator, cocycle_from_text,
                               cocycle_space, cocycle_to_text, cocycle_violations, coboundary_space,
                               cohomology_basis, cohomology_dims, delta, delta_form, form_from_terms,
                               is_cocycle, reduce_mod_b2)
from cexkit.exact import Matrix


def oracle_dims(a):
    """dim Z^2, B^2, H^2 straight from the definitions, with sympy ranks."""
    n = a.dim
    e = [a.unit(i) for i in range(1, n + 1)]
    # θ(e_i e_j, e_k) - θ(e_i, e_j e_k) = 0 in the unknowns θ[p][q] at p*n + q
    rows = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row = [0] * (n * n)
                for p, c in enumerate(product(a, e[i], e[j])):
                    row[p * n + k] += c
                for q, c in enumerate(product(a, e[j], e[k])):
                    row[i * n + q] -= c
                rows.append([sympy.Rational(x.numerator, x.denominator) if isinstance(x, F) else x for x in row])
    z = n * n - sympy.Matrix(rows).rank()
    # δf(e_i, e_j) = f(e_i e_j); B^2 is the image of f
    prods = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in product(a, e[i], e[j])]
                          for i in range(n) for j in range(n)])
    b = prods.rank()
    return z, b, z - b


FROZEN = {
    ("mu0", 5): (5, 4, 1),
    ("mu1_1", 5): (7, 3, 4),
    ("mu1_2", 5): (6, 3, 3),
    ("mu1_3", 5): (6, 3, 3),
    ("mu1_4", 5): (6, 3, 3),
    ("mu2_6", 6): (6, 4, 2),
    ("mu2_4", 6): (7, 4, 3),
}


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_frozen_dims_match_oracle(key):
    a = catalog_algebra(*key)
    assert oracle_dims(a) == FROZEN[key]
    assert cohomology_dims(a) == FROZEN[key]


@pytest.mark.parametrize("name", ["mu2_2", "mu2_9", "mu3_3"])
@pytest.mark.parametrize("alpha", [F(0), F(1), F(-3, 2)])
def test_alpha_families_against_oracle(name, alpha):
    n = 6 if name.startswith("mu2") else 7
    a = catalog_algebra(name, n, alpha)
    assert cohomology_dims(a) == oracle_dims(a)


@pytest.mark.parametrize("name,n", [("mu3_6", 7), ("mu4_4", 8), ("mu2_10", 6), ("mu1_1", 7)])
def test_more_families_against_oracle(name, n):
    a = catalog_algebra(name, n)
    assert cohomology_dims(a) == oracle_dims(a)


@given(st.sampled_from([("mu1_1", 5), ("mu1_4", 6), ("mu2_5", 6)]),
       st.lists(st.integers(-3, 3), min_size=8, max_size=8))
def test_coboundaries_are_cocycles_with_zero_class(key, f):
    a = catalog_algebra(*key)
    theta = delta(a, [F(x) for x in f[:a.dim]])
    assert is_cocycle(a, theta)
    assert not cocycle_violations(a, theta)
    assert not any(ClassReducer(a).coords(theta))
    assert coboundary_space(a).contains(list(theta.entries))


def test_h2_reps_are_independent_mod_b2():
    a = catalog_algebra("mu1_1", 6)
    cb = cohomology_basis(a)
    red = ClassReducer(a)
    coords = [red.coords(r) for r in cb.h2_reps]
    assert Matrix.from_rows(coords).rank() == len(cb.h2_reps) == 4
    assert cocycle_space(a).dim == cb.z2.dim


def test_reduce_mod_b2_is_linear():
    a = catalog_algebra("mu1_3", 5)
    reps = cohomology_basis(a).h2_reps
    theta = reps[0].scale(2) + reps[2] + delta(a, [1, 0, 3, 0, 1])
    assert reduce_mod_b2(a, theta) == [2, 0, 1]


def test_cocycle_condition_on_single_deltas():
    a = catalog_algebra("mu0", 4)
    assert is_cocycle(a, delta_form(4, 1, 1))  # Δ11 = δ(e2*)
    assert not is_cocycle(a, delta_form(4, 2, 1))
    assert cocycle_violations(a, delta_form(4, 2, 1))


def test_cocycle_annihilator():
    a = catalog_algebra("mu0", 4)
    theta = form_from_terms(4, [(1, 4, 1), (2, 3, 1), (3, 2, 1), (4, 1, 1)])
    assert is_cocycle(a, theta)
    assert cocycle_annihilator(a, Cocycle.of(theta)).dim == 0


def test_cocycle_text_round_trip():
    a = catalog_algebra("mu1_2", 5)
    theta = Cocycle(5, tuple(cohomology_basis(a).h2_reps))
    text = cocycle_to_text(theta)
    assert cocycle_from_text(text) == theta
    assert cocycle_to_text(cocycle_from_text(text)) == text


@pytest.mark.parametrize("text", [
    "[]",
    '{"dim": 2, "components": []}',
    '{"dim": 2, "components": [[[1, 3, "1/1"]]]}',
    '{"dim": 2, "components": [[[1, 1, "1/1"], [1, 1, "2/1"]]]}',
    '{"dim": 2, "components": [[[1, 1, "one"]]]}',
])
def test_malformed_cocycle_files(text):
    with pytest.raises(FormatError):
        cocycle_from_text(text)


def test_cocycle_shape_check():
    with pytest.raises(CohomologyError):
        Cocycle(3, (Matrix.identity(2),))
