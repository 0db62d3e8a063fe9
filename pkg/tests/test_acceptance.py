"""The seven acceptance criteria at their stated tolerances and time limits.

Each test records a one-line verdict that is printed in the terminal summary
under "acceptance criteria".
"""

import pytest

from cexkit import acceptance
from conftest import ACCEPTANCE_LINES

MU14_T1_FINDING = (
    "T_1(μ1,4): ⟨t∇1+∇3⟩ gives μ2,4 at t=1 and μ2,6 for t ∉ {0, 1}, neither of which is named, "
    "and μ2,2(1) is reached by no entry; μ2,2(1) is commutative while μ1,4, and hence every central "
    "extension of it, is not"
)


def record(res):
    ACCEPTANCE_LINES.append(res.line())
    print(res.line())
    for d in res.details:
        print("    " + d)
    return res


def check(res):
    record(res)
    assert res.ok, "\n".join(res.details)
    assert res.seconds <= res.limit, f"took {res.seconds:.1f}s, limit {res.limit}s"


def test_criterion_1_cohomology_dimensions():
    check(acceptance.criterion_cohomology())


def test_criterion_2_null_filiform_extension():
    check(acceptance.criterion_null_filiform())


def test_criterion_3_action_formulas():
    check(acceptance.criterion_actions())


def test_criterion_4_automorphism_templates():
    check(acceptance.criterion_templates())


def test_criterion_5_orbit_cases():
    check(acceptance.criterion_cases())


@pytest.fixture(scope="module")
def theorem_run():
    reports = []
    res = acceptance.criterion_theorems(reports=reports)
    record(res)
    return res, {(r.family, r.s): r for r in reports}


@pytest.mark.xfail(strict=True, reason=MU14_T1_FINDING)
def test_criterion_6_theorem_reproduction(theorem_run):
    res, _ = theorem_run
    assert res.ok, "\n".join(res.details)


def test_criterion_6_time_limit(theorem_run):
    res, _ = theorem_run
    assert res.seconds <= res.limit


T_PARAMS = [pytest.param(key, marks=pytest.mark.xfail(strict=True, reason=MU14_T1_FINDING))
            if key == ("mu1_4", 1) else key for key in acceptance.T_KEYS]


@pytest.mark.parametrize("key", T_PARAMS, ids=lambda k: f"{k[0]}-T{k[1]}")
def test_criterion_6_lists(theorem_run, key):
    rep = theorem_run[1][key]
    assert rep.ok, "\n".join(rep.lines())


def test_criterion_6_mu14_t1_finding(theorem_run):
    """The failing list fails for the documented reasons and no others."""
    rep = theorem_run[1][("mu1_4", 1)]
    assert all(c.ok for c in rep.cases)
    assert not rep.error
    assert all(m.name is not None for m in rep.samples)
    by_t = {m.t: (m.name, m.outside) for m in rep.samples if m.entry == "t*n1+n3"}
    assert by_t.pop(0) == ("mu2_7", False)
    assert by_t.pop(1) == ("mu2_4", True)
    assert set(by_t.values()) == {("mu2_6", True)}
    assert rep.coverage["μ2,2(1)"] == []
    assert all(("μ2,2(1)" in p) or ("μ2,4" in p) or ("μ2,6" in p) for p in rep.problems)


def test_mu14_t1_commutativity_certificate():
    """μ2,2(1) is commutative; μ1,4 is not, and a quotient of a commutative algebra is commutative,
    so no central extension of μ1,4 is isomorphic to μ2,2(1) over any field."""
    from fractions import Fraction as F

    from cexkit.algebra import commutator_rank
    from cexkit.catalog import catalog_algebra, nabla_basis
    from cexkit.cohomology import Cocycle
    from cexkit.extension import central_extend

    assert commutator_rank(catalog_algebra("mu2_2", 6, F(1))) == 0
    base = catalog_algebra("mu1_4", 5)
    assert commutator_rank(base) > 0
    n1, _, n3 = nabla_basis("mu1_4", 5)
    for t in (F(0), F(1), F(-1), F(2), F(1, 2), F(-2), F(3)):
        ext = central_extend(base, Cocycle.of(n1.scale(t) + n3))
        assert commutator_rank(ext) > 0


def test_criterion_7_property_suites():
    check(acceptance.criterion_properties())
