from __future__ import annotations

from math import comb

import faceenum as fe
from faceenum.audit import HOLDS, INAPPLICABLE, TIGHT, VIOLATED, Assertions, binomial_pair_decomposition


def test_binomial_pair_decomposition():
    assert binomial_pair_decomposition(6) == (4, 0)
    assert binomial_pair_decomposition(18) == (6, 3)
    assert binomial_pair_decomposition(55) == (11, 0)
    assert binomial_pair_decomposition(0) == (1, 0)
    for v in range(0, 80):
        a, b = binomial_pair_decomposition(v)
        assert comb(a, 2) + b == v and a > b >= 0


def test_cp2_audit(cp2):
    rep = fe.audit(cp2, name="cp2")
    assert not rep.violations()
    assert rep.by_name("even_euler_b").status == TIGHT
    assert rep.by_name("even_euler_a").status == TIGHT
    assert rep.by_name("universal_upper").status == TIGHT
    assert rep.by_name("rigidity").status == HOLDS
    assert rep.by_name("covering_bound").status == INAPPLICABLE
    assert rep.by_name("dehn_sommerville").status == HOLDS


def test_kl11_audit_with_assertion(kl11):
    rep = fe.audit(kl11, assertions=Assertions(beta1_positive=True), name="kl11")
    assert not rep.violations()
    cb = rep.by_name("covering_bound")
    assert cb.status == TIGHT and cb.lhs == 15 == cb.rhs
    assert rep.by_name("min_first_betti").status == TIGHT
    assert rep.by_name("vertex_link_bound").status == TIGHT  # Walkup class member
    assert rep.by_name("even_euler_a").status == INAPPLICABLE  # G = -10 < 0


def test_subgroup_index_assertion(kl11):
    rep = fe.audit(kl11, assertions=Assertions(subgroup_index=3), name="kl11")
    cb = rep.by_name("covering_bound")
    # (t-1)/t C(6,2) = 10 <= g2 = 15, scaled by t: 30 <= 45
    assert cb.status == HOLDS and (cb.lhs, cb.rhs) == (30, 45)


def test_stacked_sphere_audit():
    K = fe.stacked_sphere(9, 5)
    rep = fe.audit(K, name="stacked")
    assert not rep.violations()
    assert rep.by_name("rigidity").status == TIGHT  # h1 = h2
    assert rep.by_name("vertex_link_bound").status == TIGHT
    assert rep.by_name("stacked_lower_bounds").status == TIGHT


def test_s2xs2_audit(s2xs2):
    rep = fe.audit(s2xs2, name="s2xs2")
    assert not rep.violations()
    ee = rep.by_name("even_euler_b")
    assert ee.status == HOLDS and ee.lhs == 40 and ee.rhs == 41
    ea = rep.by_name("even_euler_a")
    assert ea.status == HOLDS and ea.lhs == 40 and ea.rhs == comb(8, 3)


def test_simplex_audit_mostly_inapplicable():
    rep = fe.audit(fe.simplex(5), name="simplex")
    assert not rep.violations()
    assert rep.by_name("rigidity").status == INAPPLICABLE
    assert rep.by_name("dehn_sommerville").status == INAPPLICABLE


def test_bipyramid_audit(bipyramid):
    K, _ = bipyramid
    rep = fe.audit(K, name="bipyramid")
    assert not rep.violations()
    # d = 3: the d >= 4 guards keep the sphere-only theorems out
    assert rep.by_name("stacked_lower_bounds").status == INAPPLICABLE


def test_d7_derivation_agreement():
    K = fe.stacked_sphere(9, 7)
    rep = fe.audit(K, name="stacked7")
    chk = rep.by_name("d7_euler_bound")
    assert chk.status in (HOLDS, TIGHT)
    assert "disagreement" not in chk.notes
    assert not rep.violations()


def test_report_serialization(cp2):
    rep = fe.audit(cp2, name="cp2")
    payload = rep.to_jsonable()
    assert payload["complex"] == "cp2"
    names = [c["name"] for c in payload["checks"]]
    assert names == [c.name for c in rep.checks]
    kalai = next(c for c in payload["checks"] if c["name"] == "kalai_edge_conjecture")
    assert kalai["proven"] is False


def test_conjecture_never_counts_as_violation(kl11):
    rep = fe.audit(kl11, name="kl11")
    k = rep.by_name("kalai_edge_conjecture")
    assert not k.proven
    assert k.status in (HOLDS, TIGHT, VIOLATED, INAPPLICABLE)
    assert all(c.proven for c in rep.violations())


def test_violation_plumbing_and_exit_semantics():
    # proven violations drive violations(); advisory ones never do
    from faceenum.audit import AuditCheck, AuditReport

    rep = AuditReport(complex_name="synthetic", field=fe.RATIONALS)
    rep.checks.append(AuditCheck("a", "ref", VIOLATED, proven=True))
    rep.checks.append(AuditCheck("b", "ref", VIOLATED, proven=False))
    rep.checks.append(AuditCheck("c", "ref", HOLDS))
    assert [c.name for c in rep.violations()] == ["a"]
    assert rep.checks[1].ok() is True  # advisory violation never fails the run
    assert rep.checks[0].ok() is False
