from fractions import Fraction

import pytest

from weakhopf.action import check_module_algebra

one = Fraction(1)


def test_trivial_action_passes(ctx_z2):
    assert ctx_z2.module_report.ok
    assert ctx_z2.decomp_report.ok
    assert ctx_z2.decomp.idempotents["e"] == {"b": one}


def test_i2_swap_action_passes(ctx_i2):
    assert ctx_i2.module_report.ok


def test_i2_swap_decomposition(ctx_i2):
    d = ctx_i2.decomp
    assert d.idempotents["x"] == {"e1": one}
    assert d.idempotents["y"] == {"e2": one}
    assert d.component_of == {"e1": "x", "e2": "y"}
    assert d.homogeneous
    assert ctx_i2.decomp_report.info["component_dims"] == {"x": 1, "y": 1}


def test_ex28_action_fails_with_witnesses(ctx_ex28):
    rep = ctx_ex28.module_report
    assert not rep.ok
    checks = rep.checks_failed()
    assert "module-axiom-i" in checks   # e.g. s.(t.e1) = e1 but u_s u_t = 0
    assert "module-axiom-ii" in checks
    ii = [f.witness for f in rep.findings if f.check == "module-axiom-ii"]
    assert ["t", "e2", "e3"] in ii
    # axiom (iii) does hold for this action
    assert "module-axiom-iii" not in checks


def test_ex28_idempotent_flagged_over_q(ctx_ex28):
    rep = ctx_ex28.decomp_report
    assert not rep.ok
    assert "idempotent" in rep.checks_failed()
    # s.1_B = 2 e1 + e2 is not idempotent over the rationals
    assert ctx_ex28.decomp.idempotents["s"] == {"e1": Fraction(2), "e2": one}


def test_ex28_gf2_idempotents_fine_but_sum_short(ctx_ex28_gf2):
    rep = ctx_ex28_gf2.decomp_report
    checks = rep.checks_failed()
    assert "idempotent" not in checks
    assert "orthogonal" not in checks
    assert "direct-sum" in checks          # e3 is covered by no component
    assert ctx_ex28_gf2.decomp.component_of["e3"] is None


def test_ex28_gf2_action_still_fails_axioms(ctx_ex28_gf2):
    checks = ctx_ex28_gf2.module_report.checks_failed()
    assert "module-axiom-i" in checks
    assert "module-axiom-ii" in checks


def test_derived_action_i2(ctx_i2):
    dfap, rep = ctx_i2.dfap()
    assert rep.ok
    # beta_g maps the y-component onto the x-component: e2 -> e1
    assert dfap.ideal_labels == {"x": ["e1"], "y": ["e2"], "g": ["e1"], "gi": ["e2"]}
    B = ctx_i2.B
    assert [B.from_vector(v) for v in dfap.iso_images["g"]] == [{"e1": one}]
    assert [B.from_vector(v) for v in dfap.iso_images["gi"]] == [{"e2": one}]
    # identities act as the identity on their own component
    assert [B.from_vector(v) for v in dfap.iso_images["x"]] == [{"e1": one}]


def test_derived_action_composition_axiom(ctx_i2):
    # beta_g . beta_gi is the identity on the x-component
    F = ctx_i2.field
    act = ctx_i2.action
    e1 = {"e1": F.one}
    assert act.act({"g": F.one}, act.act({"gi": F.one}, e1)) == e1


def test_skew_ring_i2(ctx_i2):
    skew, err = ctx_i2.skew()
    assert err is None
    assert skew.basis == [("e1", "x"), ("e2", "y"), ("e1", "g"), ("e2", "gi")]
    # (e1 d_g)(e2 d_gi) = e1 beta_g(e2) d_x = e1 d_x
    assert skew.basis_product(("e1", "g"), ("e2", "gi")) == {("e1", "x"): one}
    # non-composable symbols multiply to zero
    assert skew.basis_product(("e1", "g"), ("e1", "g")) == {}
    assert skew.associativity_violations() == []


def test_skew_ring_group_case_matches_group_algebra(ctx_z2):
    skew, err = ctx_z2.skew()
    assert err is None
    kg = ctx_z2.kg
    # relabel (b, m) -> m: structure constants must match the group algebra
    for (b1, m1) in skew.basis:
        for (b2, m2) in skew.basis:
            got = skew.basis_product((b1, m1), (b2, m2))
            want = {("b", lab): c for lab, c in kg.basis_product(m1, m2).items()}
            assert got == want


def test_skew_ring_unavailable_when_basis_inhomogeneous(ctx_ex28):
    skew, err = ctx_ex28.skew()
    assert skew is None
    assert "homogeneous" in err


def test_action_table_must_be_total(ctx_i2):
    from weakhopf.action import ModuleAction
    with pytest.raises(ValueError):
        ModuleAction(ctx_i2.groupoid, ctx_i2.B, {})


def test_module_check_requires_unital_b(ctx_i2):
    from weakhopf.walg import FinAlgebra
    nob = FinAlgebra(ctx_i2.field, ["e1"], {}, None)
    with pytest.raises(ValueError):
        check_module_algebra(nob, ctx_i2.kg, ctx_i2.kg_co, ctx_i2.action)


def test_decomposition_holds_whenever_action_validates():
    # the decomposition claims follow from the module axioms: checked as an
    # implication across the library
    from conftest import context
    for name in ("z2-trivial", "z3-trivial", "i2-swap"):
        ctx = context(name)
        if ctx.module_report.ok:
            assert ctx.decomp_report.ok
            dfap, rep = ctx.dfap()
            assert rep.ok
