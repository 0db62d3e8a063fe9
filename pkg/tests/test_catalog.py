import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from cexkit.algebra import is_associative, is_iso_witness, is_nilpotent
from cexkit.catalog import (ALPHA_FAMILIES, FAMILIES, FILIFORM_BASES, CatalogError, FamilySpec,
                            automorphism_template, catalog_algebra, display_name, family_minimum,
                            family_table, nabla_basis, parse_spec)
from cexkit.cohomology import ClassReducer, is_cocycle
from cexkit.exact import Matrix


def test_parse_spec():
    s = parse_spec("mu2_2:6:alpha=-3/4")
    assert (s.name, s.n, s.alpha) == ("mu2_2", 6, F(-3, 4))
    assert s.to_text() == "mu2_2:6:alpha=-3/4"
    assert s.label() == "μ2,2^6(-3/4)"
    assert parse_spec("mu0:3") == FamilySpec("mu0", 3)


@pytest.mark.parametrize("text", ["mu9:5", "mu1_1", "mu1_1:x", "mu2_2:6", "mu1_1:5:alpha=2", "mu2_1:5"])
def test_bad_specs(text):
    with pytest.raises(CatalogError):
        parse_spec(text)


def test_display_names():
    assert display_name("mu0") == "μ0"
    assert display_name("mu3_6") == "μ3,6"


@pytest.mark.parametrize("name", FAMILIES)
def test_every_family_is_associative_and_nilpotent(name):
    n = family_minimum(name) + 1
    alpha = F(-2, 5) if name in ALPHA_FAMILIES else None
    a = catalog_algebra(name, n, alpha)
    assert a.dim == n
    assert is_associative(a)
    assert is_nilpotent(a)


def test_truncations_bypass_the_minimum():
    a = family_table("mu2_2", 5, 1)
    assert a.dim == 5
    with pytest.raises(CatalogError):
        catalog_algebra("mu2_2", 5, 1)


@pytest.mark.parametrize("family", FILIFORM_BASES)
@pytest.mark.parametrize("n", [5, 6, 7])
def test_nabla_basis_is_a_basis_of_h2(family, n):
    a = catalog_algebra(family, n)
    forms = nabla_basis(family, n)
    red = ClassReducer(a)
    assert all(is_cocycle(a, f) for f in forms)
    assert Matrix.from_rows([red.coords(f) for f in forms]).rank() == len(forms) == len(red.reps)


@pytest.mark.parametrize("family", FILIFORM_BASES)
@given(seed=st.integers(0, 10 ** 6))
def test_template_instances_are_automorphisms(family, seed):
    n = 7 if family == "mu1_2" else 6
    a = catalog_algebra(family, n)
    tmpl = automorphism_template(family, n)
    phi = tmpl.instantiate(tmpl.random_point(random.Random(seed)))
    assert is_iso_witness(a, a, phi)


def test_template_constraints():
    tmpl = automorphism_template("mu1_1", 5)
    assert tmpl.describe_constraints() == ["x != 0", "y != 0"]
    point = tmpl.random_point(random.Random(0))
    point["y"] = F(0)
    with pytest.raises(CatalogError):
        tmpl.instantiate(point)
    with pytest.raises(CatalogError):
        automorphism_template("mu1_2", 6)
    with pytest.raises(CatalogError):
        automorphism_template("mu2_1", 6)
