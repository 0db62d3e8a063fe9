from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cexkit.algebra import (Algebra, AlgebraError, FormatError, PropagationError, algebra_from_text,
                            algebra_generators, algebra_to_text, annihilator, center, commutator_rank,
                            derivation_dim, extend_generator_images, fingerprint, graded_algebra,
                            invariant_signature, is_associative, is_hom_witness, is_iso_witness,
                            nilpotency_class, power_dims, product, shape_classify, transport)
from cexkit.catalog import catalog_algebra
from cexkit.exact import Matrix


@st.composite
def strictly_upper(draw, max_dim=5):
    """Products e_i e_j landing in span(e_k : k > max(i, j)); nilpotent, not always associative."""
    n = draw(st.integers(2, max_dim))
    table = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(max(i, j) + 1, n + 1):
                c = draw(st.sampled_from((0, 0, 0, 1, -1, 2)))
                if c:
                    table[(i, j, k)] = F(c)
    return Algebra(n, table)


@st.composite
def invertible(draw, n):
    """Row-permuted L·U with unitriangular factors; invertible by construction."""
    entry = st.integers(-2, 2).map(F)
    low = [[F(int(i == j)) if i <= j else draw(entry) for j in range(n)] for i in range(n)]
    up = [[F(int(i == j)) if i >= j else draw(entry) for j in range(n)] for i in range(n)]
    perm = draw(st.permutations(range(n)))
    m = Matrix.from_rows(low) @ Matrix.from_rows(up)
    return Matrix.from_rows([m.row(k) for k in perm])


def brute_associative(a):
    n = a.dim
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                ei, ej, ek = a.unit(i), a.unit(j), a.unit(k)
                if product(a, product(a, ei, ej), ek) != product(a, ei, product(a, ej, ek)):
                    return False
    return True


@given(strictly_upper())
def test_associativity_against_brute_force(a):
    assert is_associative(a) == brute_associative(a)


@given(strictly_upper())
def test_annihilator_against_sympy(a):
    n = a.dim
    left_rows, right_rows = [], []
    for j in range(1, n + 1):
        for k in range(n):
            left_rows.append([product(a, a.unit(i), a.unit(j))[k] for i in range(1, n + 1)])
            right_rows.append([product(a, a.unit(j), a.unit(i))[k] for i in range(1, n + 1)])
    two, left, right = annihilator(a)

    def nullity(rows):
        return n - sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows]).rank()

    assert left.dim == nullity(left_rows)
    assert right.dim == nullity(right_rows)
    assert two.dim == nullity(left_rows + right_rows)


@given(strictly_upper())
def test_text_round_trip(a):
    text = algebra_to_text(a)
    assert algebra_from_text(text) == a
    assert algebra_to_text(algebra_from_text(text)) == text


@settings(max_examples=40)
@given(strictly_upper(max_dim=4).flatmap(lambda a: st.tuples(st.just(a), invertible(a.dim))))
def test_invariants_under_basis_change(case):
    a, p = case
    b = transport(a, p)
    assert is_iso_witness(b, a, p)
    assert fingerprint(b) == fingerprint(a)
    assert invariant_signature(b) == invariant_signature(a)
    assert center(b).dim == center(a).dim
    assert derivation_dim(b) == derivation_dim(a)


@pytest.mark.parametrize("n", [3, 5, 8])
def test_null_filiform_shape(n):
    a = catalog_algebra("mu0", n)
    assert power_dims(a) == tuple(range(n, -1, -1))
    assert nilpotency_class(a) == n + 1
    assert shape_classify(a) == "null-filiform"
    assert algebra_generators(a) == [1]
    assert commutator_rank(a) == 0


def test_filiform_and_quasi_filiform_shapes():
    assert shape_classify(catalog_algebra("mu1_3", 6)) == "filiform"
    assert shape_classify(catalog_algebra("mu2_5", 7)) == "quasi-filiform"


def test_graded_algebra_of_a_graded_table_is_itself():
    a = catalog_algebra("mu0", 5)
    assert graded_algebra(a) == a


def test_generator_extension_builds_the_identity():
    a = catalog_algebra("mu1_1", 5)
    gens = [a.unit(i) for i in algebra_generators(a)]
    p = extend_generator_images(a, gens, gens, a)
    assert p == Matrix.identity(5)


def test_generator_extension_rejects_bad_images():
    a = catalog_algebra("mu0", 4)
    b = catalog_algebra("mu1_1", 4)
    with pytest.raises(PropagationError):
        extend_generator_images(a, [a.unit(1)], [b.unit(1)], b)


def test_hom_witness_shape_guard():
    a = catalog_algebra("mu0", 3)
    with pytest.raises(AlgebraError):
        is_hom_witness(a, a, Matrix.identity(2))


@pytest.mark.parametrize("text", [
    "not json",
    '{"dim": 2}',
    '{"dim": -1, "table": []}',
    '{"dim": 2, "table": [[1, 1, 3, "1/1"]]}',
    '{"dim": 2, "table": [[1, 1, 2, "x"]]}',
    '{"dim": 2, "table": [[1, 1, 2, "1/1"], [1, 1, 2, "2/1"]]}',
    '{"dim": 2, "table": [[1, 1, 2, 0.5]]}',
])
def test_malformed_algebra_files(text):
    with pytest.raises(FormatError):
        algebra_from_text(text)


def test_frozen_fingerprint():
    # mu1_3 at n = 5, values computed independently with sympy and frozen
    fp = fingerprint(catalog_algebra("mu1_3", 5))
    assert fp.power_dims == (5, 3, 2, 1, 0)
    assert (fp.ann_dim, fp.left_ann_dim, fp.right_ann_dim) == (1, 2, 2)
    assert fp.comm_rank == 1
    assert fp.cohom_dims == (6, 3, 3)
