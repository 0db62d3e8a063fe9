from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from cexkit.algebra import annihilator, is_associative, is_iso_witness
from cexkit.catalog import catalog_algebra, nabla_basis
from cexkit.cohomology import Cocycle, cocycle_space, cohomology_basis, delta
from cexkit.exact import Matrix
from cexkit.extension import (ExtensionError, ann_extension_decomposition, central_extend, check_ts,
                              class_rank, coboundary_shift_witness, has_annihilator_component, is_split,
                              radical_meet, reconstruct, shifted_cocycle)


def test_extension_table_layout():
    a = catalog_algebra("mu0", 3)
    theta = Cocycle.of(Matrix.from_rows([[3, 0, 2], [0, 2, 0], [2, 0, 0]]))
    e = central_extend(a, theta)
    assert e.dim == 4
    assert e.table[(1, 3, 4)] == 2 and e.table[(2, 2, 4)] == 2 and e.table[(3, 1, 4)] == 2
    assert e.table[(1, 1, 4)] == 3
    assert e.table[(1, 1, 2)] == 1


def test_non_cocycle_rejected():
    a = catalog_algebra("mu0", 3)
    with pytest.raises(ExtensionError):
        check_ts(a, Cocycle.of(Matrix.from_rows([[0, 0, 0], [1, 0, 0], [0, 0, 0]])))


@given(st.sampled_from([("mu1_1", 5), ("mu1_3", 6), ("mu2_2", 6), ("mu0", 4)]),
       st.lists(st.integers(-2, 2), min_size=12, max_size=12))
def test_random_cocycle_extensions(key, coeffs):
    name, n = key
    a = catalog_algebra(name, n, F(1, 3) if name == "mu2_2" else None)
    vecs = cocycle_space(a).vectors()
    flat = [sum((F(c) * v[k] for c, v in zip(coeffs, vecs)), F(0)) for k in range(n * n)]
    theta = Cocycle.of(Matrix(n, n, tuple(flat)))
    e = central_extend(a, theta)
    assert is_associative(e)
    lhs, rhs, equal = ann_extension_decomposition(a, theta)
    assert equal and lhs == rhs


def test_split_detection():
    a = catalog_algebra("mu0", 4)
    # a coboundary class gives an annihilator component
    theta = Cocycle.of(delta(a, [0, 1, 0, 0]))
    assert class_rank(a, theta) == 0
    assert is_split(central_extend(a, theta))
    gen = Cocycle.of(cohomology_basis(a).h2_reps[0])
    assert check_ts(a, gen)
    assert not has_annihilator_component(a, gen)
    assert not is_split(central_extend(a, gen))


def test_radical_meet_nonzero_raises_for_component_test():
    a = catalog_algebra("mu1_1", 5)
    theta = Cocycle.of(nabla_basis("mu1_1", 5)[0])
    assert radical_meet(a, theta).dim > 0
    with pytest.raises(ExtensionError):
        has_annihilator_component(a, theta)


@given(st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_coboundary_shift_is_an_isomorphism(f):
    a = catalog_algebra("mu1_2", 5)
    theta = Cocycle.of(nabla_basis("mu1_2", 5)[1])
    p = coboundary_shift_witness(a, theta, [f])
    assert is_iso_witness(central_extend(a, theta), central_extend(a, shifted_cocycle(a, theta, [f])), p)


@pytest.mark.parametrize("name,n,alpha", [("mu2_1", 6, None), ("mu2_2", 6, F(2)), ("mu3_6", 7, None),
                                          ("mu4_4", 8, None), ("mu1_1", 5, None), ("mu0", 5, None)])
def test_reconstruct_round_trip(name, n, alpha):
    b = catalog_algebra(name, n, alpha)
    a2, theta, w = reconstruct(b)
    assert a2.dim + theta.s == n
    assert theta.s == annihilator(b)[0].dim
    assert is_iso_witness(b, central_extend(a2, theta), w)


def test_reconstruct_needs_annihilator():
    from cexkit.algebra import Algebra
    with pytest.raises(ExtensionError):
        reconstruct(Algebra(1, {(1, 1, 1): 1}))
