from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weakhopf.exactmath import QQ, PrimeField
from weakhopf.groupoid import builtin_i2, cyclic_group, disjoint_union, pair_groupoid
from weakhopf.walg import (CoStructure, check_antipode, check_weak_bialgebra,
                           dual_weak_hopf, groupoid_algebra, target_counit)

one = Fraction(1)


@pytest.fixture(scope="module")
def kg_i2():
    return groupoid_algebra(QQ, builtin_i2())


@pytest.fixture(scope="module")
def kgstar_i2(kg_i2):
    return dual_weak_hopf(*kg_i2)


def test_groupoid_algebra_multiplication(kg_i2):
    alg, _ = kg_i2
    assert alg.multiply({"g": one}, {"gi": one}) == {"x": one}
    assert alg.multiply({"g": one}, {"g": one}) == {}
    assert alg.multiply({"x": one, "y": one}, {"g": one}) == {"g": one}


def test_groupoid_algebra_unit(kg_i2):
    alg, _ = kg_i2
    assert alg.unit == {"x": one, "y": one}
    assert alg.unit_violations() == []
    assert alg.associativity_violations() == []


def test_groupoid_algebra_costructure(kg_i2):
    alg, co = kg_i2
    assert co.delta["g"] == [("g", "g", one)]
    assert co.counit["g"] == one
    assert co.antipode["g"] == {"gi": one}
    s2 = co.antipode_element(co.antipode_element({"g": one}))
    assert s2 == {"g": one}


def test_dual_product_is_pointwise(kgstar_i2):
    dual, _ = kgstar_i2
    assert dual.multiply({"g": one}, {"g": one}) == {"g": one}
    assert dual.multiply({"g": one}, {"gi": one}) == {}
    assert dual.unit == {"x": one, "y": one, "g": one, "gi": one}


def test_dual_coproduct_enumerates_factorizations(kgstar_i2):
    _, co = kgstar_i2
    assert sorted(co.delta["g"]) == [("g", "y", one), ("x", "g", one)]


def test_dual_counit_counts_identity_coefficients(kgstar_i2):
    _, co = kgstar_i2
    assert co.counit_element({"x": one, "y": one, "g": one}) == 2


def test_dual_antipode(kgstar_i2):
    _, co = kgstar_i2
    assert co.antipode["g"] == {"gi": one}
    assert co.antipode["x"] == {"x": one}


def test_double_dual_recovers_structure_constants(kg_i2):
    alg, co = kg_i2
    dd_alg, dd_co = dual_weak_hopf(*dual_weak_hopf(alg, co))
    assert dd_alg.mul == alg.mul
    assert dd_alg.unit == alg.unit
    assert {k: sorted(v) for k, v in dd_co.delta.items()} == \
           {k: sorted(v) for k, v in co.delta.items()}
    assert dd_co.counit == co.counit
    assert dd_co.antipode == co.antipode


LIBRARY_GROUPOIDS = [
    ("z2", cyclic_group(2)),
    ("z3", cyclic_group(3)),
    ("i2", builtin_i2()),
    ("pair2", pair_groupoid(2)),
    ("union", disjoint_union(cyclic_group(2), builtin_i2())),
]


@pytest.mark.parametrize("name,g", LIBRARY_GROUPOIDS, ids=[n for n, _ in LIBRARY_GROUPOIDS])
def test_axiom_suite_on_library(name, g):
    kg, kg_co = groupoid_algebra(QQ, g)
    assert check_weak_bialgebra(kg, kg_co).ok
    assert check_antipode(kg, kg_co).ok
    dual, dual_co = dual_weak_hopf(kg, kg_co)
    assert check_weak_bialgebra(dual, dual_co).ok
    assert check_antipode(dual, dual_co).ok
    assert kg.associativity_violations() == []
    assert dual.associativity_violations() == []


def test_axiom_suite_gf2():
    kg, kg_co = groupoid_algebra(PrimeField(2), builtin_i2())
    assert check_weak_bialgebra(kg, kg_co).ok
    assert check_antipode(kg, kg_co).ok


def test_sabotaged_coproduct_fails_multiplicativity(kg_i2):
    alg, co = kg_i2
    delta = dict(co.delta)
    delta["g"] = [("g", "gi", one)]
    bad = CoStructure(QQ, delta, co.counit, co.antipode)
    rep = check_weak_bialgebra(alg, bad)
    assert not rep.ok
    witnesses = [f.witness for f in rep.findings
                 if f.check == "coproduct-multiplicative"]
    assert ["g", "gi"] in witnesses


def test_identity_antipode_fails(kg_i2):
    alg, co = kg_i2
    bad = CoStructure(QQ, co.delta, co.counit,
                      {m: {m: one} for m in alg.basis})
    rep = check_antipode(alg, bad)
    assert not rep.ok
    assert "g" in [f.witness for f in rep.findings]


def test_target_counit_on_i2(kg_i2):
    alg, co = kg_i2
    assert target_counit(alg, co, {"g": one}) == {"x": one}
    assert target_counit(alg, co, {"gi": one}) == {"y": one}
    assert target_counit(alg, co, {"x": one}) == {"x": one}
    assert target_counit(alg, co, {"y": one}) == {"y": one}


def test_target_counit_one_object():
    kg, co = groupoid_algebra(QQ, cyclic_group(2))
    assert target_counit(kg, co, {"a": one}) == {"e": one}


def test_missing_unit_rejected():
    from weakhopf.walg import FinAlgebra
    alg = FinAlgebra(QQ, ["u"], {("u", "u"): {"u": one}}, None)
    co = CoStructure(QQ, {"u": [("u", "u", one)]}, {"u": one})
    with pytest.raises(ValueError):
        check_weak_bialgebra(alg, co)
    with pytest.raises(ValueError):
        check_antipode(alg, co)


def test_foreign_label_rejected(kg_i2):
    alg, _ = kg_i2
    with pytest.raises(ValueError):
        alg.multiply({"nope": one}, {"g": one})


coeff = st.integers(min_value=-4, max_value=4)


@given(st.lists(coeff, min_size=4, max_size=4),
       st.lists(coeff, min_size=4, max_size=4),
       st.lists(coeff, min_size=4, max_size=4))
@settings(max_examples=50, deadline=None)
def test_bilinear_associativity_on_random_elements(xs, ys, zs):
    alg, _ = groupoid_algebra(QQ, builtin_i2())
    a = alg.element({b: Fraction(c) for b, c in zip(alg.basis, xs)})
    b = alg.element({b2: Fraction(c) for b2, c in zip(alg.basis, ys)})
    c = alg.element({b3: Fraction(cc) for b3, cc in zip(alg.basis, zs)})
    assert alg.multiply(alg.multiply(a, b), c) == alg.multiply(a, alg.multiply(b, c))
