import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from cexkit.algebra import Algebra, is_iso_witness, product, transport
from cexkit.catalog import automorphism_template, catalog_algebra, family_table, nabla_basis
from cexkit.cases import T_LISTS, THEOREM_NAMES, cases_for, rule_allows, rule_text
from cexkit.cohomology import Cocycle, is_cocycle
from cexkit.exact import Matrix
from cexkit.extension import central_extend
from cexkit.orbitlab import (OrbitError, _full_search, _mod_table, ff_iso_search, find_alpha_witness,
                             find_witness, format_span, numeric_action, parametric_action, parse_span,
                             reduce_extension, root, template_point, verify_action, verify_case,
                             verify_t_list, worker_count)
from cexkit.quadratic import QuadraticNumber

FAMILY_DIMS = [("mu0", 5), ("mu1_1", 5), ("mu1_2", 5), ("mu1_3", 6), ("mu1_4", 6), ("mu1_2", 7)]


@pytest.mark.parametrize("family,n", FAMILY_DIMS)
def test_symbolic_and_numeric_actions_agree(family, n):
    """50 random points per family: the action formula equals the transported class."""
    rng = random.Random(f"{family}:{n}")
    formula = parametric_action(family, n)
    tmpl = automorphism_template(family, n)
    h = len(nabla_basis(family, n))
    for _ in range(50):
        alphas = [F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(h)]
        partial = tmpl.random_point(rng)
        point = template_point(family, n, partial)
        symbolic = [c.constant_value() for c in formula.evaluate(alphas, point)]
        assert symbolic == numeric_action(family, n, alphas, partial)


@pytest.mark.parametrize("family,n", FAMILY_DIMS)
def test_transported_combinations_stay_cocycles(family, n):
    rng = random.Random(7)
    a = catalog_algebra(family, n)
    forms = nabla_basis(family, n)
    tmpl = automorphism_template(family, n)
    for _ in range(10):
        phi = tmpl.instantiate(tmpl.random_point(rng))
        theta = sum((f.scale(rng.randint(-2, 2)) for f in forms[1:]), forms[0])
        moved = phi.transpose() @ theta @ phi
        assert is_cocycle(a, moved)


@pytest.mark.parametrize("family,n", [("mu1_1", 6), ("mu1_3", 7), ("mu1_4", 5), ("mu1_2", 9)])
def test_verify_action(family, n):
    assert verify_action(family, n).ok


def test_span_parsing_and_formatting():
    rows = parse_span("n1+t*n2, -n3", 3)
    assert format_span(rows) == "⟨∇1+t∇2, -∇3⟩"
    assert format_span([[F(1), F(-1, 2), F(0)]]) == "⟨∇1-1/2∇2⟩"


def test_rational_roots():
    assert root(F(27, 8), 3) == F(3, 2)
    assert root(F(-32), 5) == F(-2)
    with pytest.raises(OrbitError):
        root(F(2), 2)


def test_every_case_has_two_points_at_n5():
    for fam in ("mu1_1", "mu1_2", "mu1_3", "mu1_4"):
        for c in cases_for(fam):
            rep = verify_case(c, 5)
            assert rep.ok, "\n".join(rep.lines())


def test_theorem_tables_are_consistent():
    for key, entries in T_LISTS.items():
        assert key in THEOREM_NAMES and entries
    assert rule_allows("ne1", F(2)) and not rule_allows("ne1", F(1))
    assert rule_allows(F(1), F(1)) and not rule_allows(F(1), F(0))
    assert rule_text("ne1") == "(α), α≠1" and rule_text(None) == ""


# ---------------------------------------------------------------------------
# matching through the annihilator reduction


def _extension(family, n, span):
    h = len(nabla_basis(family, n))
    forms = nabla_basis(family, n)
    rows = parse_span(span, h)
    comps = tuple(sum((f.scale(c.constant_value()) for f, c in zip(forms, r) if not c.is_zero()),
                      Matrix.zeros(n, n)) for r in rows)
    return central_extend(catalog_algebra(family, n), Cocycle(n, comps))


def test_reduce_extension_identifies_the_base():
    red = reduce_extension(catalog_algebra("mu2_1", 6))
    assert red.family in ("mu0", "mu1_1", "mu1_2", "mu1_3", "mu1_4")
    assert red.quotient.dim + len(red.theta) == 6


def test_rational_witness():
    e = _extension("mu1_4", 5, "n2")
    x = catalog_algebra("mu2_10", 6)
    w, note = find_witness(e, x)
    assert w is not None and w.d is None, note
    assert is_iso_witness(x, e, w.matrix())


def realified_is_iso(a, b, rows, d):
    """Check P = P0 + √d P1 multiplicative a -> b and invertible using only rationals."""
    n = a.dim

    def parts(x):
        return (x.a, x.b) if isinstance(x, QuadraticNumber) else (F(x), F(0))

    p0 = [[parts(x)[0] for x in r] for r in rows]
    p1 = [[parts(x)[1] for x in r] for r in rows]
    col = lambda m, j: [m[i][j] for i in range(n)]
    apply = lambda m, v: [sum((m[i][k] * v[k] for k in range(n)), F(0)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            w = product(a, a.unit(i + 1), a.unit(j + 1))
            lhs = (apply(p0, w), apply(p1, w))
            u0, u1, v0, v1 = col(p0, i), col(p1, i), col(p0, j), col(p1, j)
            r0 = [x + d * y for x, y in zip(product(b, u0, v0), product(b, u1, v1))]
            r1 = [x + y for x, y in zip(product(b, u0, v1), product(b, u1, v0))]
            if lhs != (r0, r1):
                return False
    big = [p0[i] + [d * x for x in p1[i]] for i in range(n)] + [p1[i] + p0[i] for i in range(n)]
    return Matrix.from_rows(big).rank() == 2 * n


def test_quadratic_witness_is_verified_independently():
    e = _extension("mu1_3", 5, "n1+n3")
    x = catalog_algebra("mu2_6", 6)
    w, note = find_witness(e, x, quadratic=False)
    assert w is None
    w, note = find_witness(e, x)
    assert w is not None and w.d is not None, note
    assert w.field == "Q(i)"
    assert realified_is_iso(x, e, w.rows, w.d)
    broken = [list(r) for r in w.rows]
    broken[0][0] = broken[0][0] + 1
    assert not realified_is_iso(x, e, broken, w.d)


def test_alpha_witness():
    e = _extension("mu1_4", 5, "n1+2*n2")
    alpha, w, note = find_alpha_witness(e, "mu2_9", 6)
    assert w is not None, note
    assert is_iso_witness(catalog_algebra("mu2_9", 6, alpha), e, w.matrix())


def test_different_quotients_are_reported():
    w, note = find_witness(catalog_algebra("mu2_1", 6), catalog_algebra("mu2_7", 6))
    assert w is None and note


def test_t_list_report_small():
    rep = verify_t_list("mu1_4", 5, 3)
    assert rep.ok, "\n".join(rep.lines())
    assert rep.coverage == {"μ4,4": ["⟨∇1, ∇2, ∇3⟩"]}


def test_t_list_report_unknown_dimension():
    rep = verify_t_list("mu1_4", 5, 4)
    assert not rep.ok and rep.error


# ---------------------------------------------------------------------------
# finite-field oracle


def _ff_hom(a, b, rows, p):
    n = a.dim
    cols = [[rows[i][j] for i in range(n)] for j in range(n)]
    mod = lambda v: [int(x) % p for x in v]
    for i in range(n):
        for j in range(n):
            w = mod(product(a, a.unit(i + 1), a.unit(j + 1)))
            lhs = [sum(rows[r][k] * w[k] for k in range(n)) % p for r in range(n)]
            rhs = mod(product(b, cols[i], cols[j]))
            if lhs != rhs:
                return False
    return rank_mod_p(rows, p) == n


def rank_mod_p(rows, p):
    m = [[x % p for x in r] for r in rows]
    rank = 0
    for c in range(len(m[0])):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


small_pairs = [("mu0", 4, "mu0", 4), ("mu1_1", 4, "mu1_2", 4), ("mu1_3", 4, "mu1_4", 4),
               ("mu1_2", 4, "mu1_2", 4)]


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("pair", small_pairs)
def test_generator_route_agrees_with_full_enumeration(pair, p):
    a, b = family_table(pair[0], pair[1]), family_table(pair[2], pair[3])
    res = ff_iso_search(a, b, p, workers=1)
    full, _ = _full_search(_mod_table(a, p), _mod_table(b, p), p, a.dim)
    assert res.found == (full is not None)


@settings(max_examples=15)
@given(seed=st.integers(0, 10 ** 6))
def test_ff_finds_basis_changes(seed):
    rng = random.Random(seed)
    a = family_table("mu1_1", 4)
    while True:
        m = Matrix.from_rows([[F(rng.randint(-1, 1)) for _ in range(4)] for _ in range(4)])
        if m.is_invertible() and all(x.denominator == 1 for x in m.inverse().entries):
            break
    b = transport(a, m)
    res = ff_iso_search(a, b, 3, workers=1)
    assert res.found
    assert _ff_hom(a, b, res.witness, 3)


def test_ff_witness_is_a_homomorphism_mod_p():
    a = family_table("mu1_3", 5)
    res = ff_iso_search(a, a, 2, workers=1)
    assert res.found and _ff_hom(a, a, res.witness, 2)
    # the lexicographically smallest generator images give the identity here
    assert res.witness == [[int(i == j) for j in range(5)] for i in range(5)]


def test_ff_truncation_aliasing_is_visible():
    # α = 0 and α = 2 agree mod 2 but not mod 3
    a, b = family_table("mu2_2", 5, 0), family_table("mu2_2", 5, 2)
    assert ff_iso_search(a, b, 2, workers=1).found
    assert not ff_iso_search(a, b, 3, workers=1).found


def test_ff_guards():
    a6 = family_table("mu0", 6)
    with pytest.raises(OrbitError):
        ff_iso_search(a6, a6, 2)
    a4 = family_table("mu0", 4)
    with pytest.raises(OrbitError):
        ff_iso_search(a4, a4, 5)
    half = Algebra(2, {(1, 1, 2): F(1, 2)})
    with pytest.raises(OrbitError):
        ff_iso_search(half, half, 2)


def test_worker_count(monkeypatch):
    monkeypatch.setenv("CEXKIT_THREADS", "1")
    assert worker_count() == 1
    for bad in ("0", "-2", "many"):
        monkeypatch.setenv("CEXKIT_THREADS", bad)
        with pytest.raises(OrbitError):
            worker_count()
